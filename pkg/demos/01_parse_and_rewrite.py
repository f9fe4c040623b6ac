#!/usr/bin/env python3
"""Parsing, negation normal form, and letter derivatives.

Walks through the formula layer: how text becomes an interned NNF tree,
how negation is pushed to the atoms, and how the letter derivative
rewrites a formula into what must hold after one step.
"""

from ltl2aut import formula as F
from ltl2aut.derivative import derivative, derivative_word, reachable_classes
from ltl2aut.parser import parse


def section(title):
    print()
    print(f"== {title} ==")


# ---------------------------------------------------------------------------
# Parsing and printing.

section("parsing")
for text in ("a U b U c", "F a & G b | c", "X (a | b)", "! (a U b)"):
    phi = parse(text)
    print(f"{text:18} parses to {phi}")
print("until is right associative; | binds weakest; ! is pushed inward")

section("interning")
left = parse("G (a U b)")
right = F.always(F.until(F.atom("a"), F.atom("b")))
print(f"parsed and hand-built trees are the same object: {left is right}")

section("negation stays in negation normal form")
for text in ("a U b", "G a", "a W b", "X a"):
    phi = parse(text)
    print(f"negate({phi}) = {F.negate(phi)}")

# ---------------------------------------------------------------------------
# Letter derivatives.

section("one-step derivatives of a | (b U c)")
phi = parse("a | (b U c)")
for letter in (frozenset("a"), frozenset("b"), frozenset("c"), frozenset()):
    shown = "{" + ",".join(sorted(letter)) + "}"
    print(f"after {shown:6} the obligation is {derivative(phi, letter)}")

section("derivatives along a word")
word = (frozenset("b"), frozenset("b"), frozenset("c"))
print(f"{phi} after {{b}}{{b}}{{c}} = {derivative_word(phi, word)}")

section("the derivative state space is finite up to propositional form")
classes = reachable_classes(parse("a U (b U c)"))
print(f"a U (b U c) reaches {len(classes.classes)} classes:")
for rep in classes.classes:
    print(f"  {rep}")
