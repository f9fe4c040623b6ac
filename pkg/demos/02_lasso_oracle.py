#!/usr/bin/env python3
"""The exact oracle on ultimately periodic words.

Shows satisfaction on lassos, the four promise sets read off a run, the
stabilization point after which they stop changing, and the decomposed
verdict that matches direct evaluation.
"""

from ltl2aut.parser import parse
from ltl2aut.semantics import (decomposed_sat, invariant_set, occurring_set,
                               persistent_set, recurring_set, satisfies,
                               stabilization_point)
from ltl2aut.words import Lasso


def letter(text):
    return frozenset(text) - {"-"}


def lasso(prefix, period):
    return Lasso(tuple(letter(p) for p in prefix.split(".") if p),
                 tuple(letter(p) for p in period.split(".")))


def section(title):
    print()
    print(f"== {title} ==")


# ---------------------------------------------------------------------------
# Direct evaluation.

section("satisfaction on lassos")
cases = [("G a", lasso("", "a")),
         ("b U c", lasso("b.c", "a")),
         ("F G (a U b | c)", lasso("", "a")),
         ("a W b", lasso("a.a", "c")),
         ("a R b", lasso("b", "ab"))]
for text, w in cases:
    print(f"{w} |= {text:18} is {satisfies(w, parse(text))}")

# ---------------------------------------------------------------------------
# Promise sets.

section("promise sets of G a | b U c on {b}{c}({a})^w")
phi = parse("G a | b U c")
w = lasso("b.c", "a")
print(f"least-fixed-point subformulas holding at least once:  "
      f"{sorted(map(str, occurring_set(w, phi)))}")
print(f"least-fixed-point subformulas holding infinitely often: "
      f"{sorted(map(str, recurring_set(w, phi)))}")
print(f"greatest-fixed-point subformulas holding at every step: "
      f"{sorted(map(str, invariant_set(w, phi)))}")
print(f"greatest-fixed-point subformulas holding from some step: "
      f"{sorted(map(str, persistent_set(w, phi)))}")
print(f"both pairs coincide from position {stabilization_point(w, phi)} on")

# ---------------------------------------------------------------------------
# Decomposition.

section("decomposed verdicts agree with direct evaluation")
for text, w in cases:
    phi = parse(text)
    direct = satisfies(w, phi)
    split = decomposed_sat(w, phi)
    print(f"{text:18} direct={direct!s:5} decomposed={split!s:5}")
