#!/usr/bin/env python3
"""Deterministic and nondeterministic automata for the simple fragments.

Co-safety and safety formulas, and their eventual/recurring closures,
need no acceptance machinery beyond Buchi or co-Buchi over derivative
classes.  Includes small worked examples with known state counts.
"""

from ltl2aut.fragments import (cosafety_dba, persistence_dca, recurrence_dba,
                               recurrence_nba, safety_dca)
from ltl2aut.hoa import write_hoa
from ltl2aut.parser import parse
from ltl2aut.semantics import satisfies
from ltl2aut.sweep import accepts, enumerate_lassos
from ltl2aut.words import Alphabet


def section(title):
    print()
    print(f"== {title} ==")


# ---------------------------------------------------------------------------
# Deterministic examples.

section("deterministic Buchi automaton for G F (a & X (b | F c))")
dba = recurrence_dba(parse("a & X (b | F c)"))
print(f"{dba.num_states} states over AP {list(dba.alphabet.atoms)}")
print(write_hoa(dba, name="G F (a & X (b | F c))"))

section("deterministic co-Buchi automaton for F G (a W b | c)")
dca = persistence_dca(parse("a W b | c"))
print(f"{dca.num_states} states")

section("nondeterministic clause automaton for the same recurrence")
nba = recurrence_nba(parse("a & X (b | F c)"))
print(f"{nba.num_states} states; each state is a clause of obligations:")
for key in nba.labels:
    print("  {" + ", ".join(sorted(map(str, key))) + "}")

# ---------------------------------------------------------------------------
# Language checks against the oracle.

section("differential check on every small lasso over {a,b}")
alphabet = Alphabet(("a", "b"))
lassos = enumerate_lassos(alphabet, 2, 2)
for text, build, wrap in (("a U b", cosafety_dba, "{}"),
                          ("a W b", safety_dca, "{}"),
                          ("a U b", recurrence_dba, "G F ({})"),
                          ("a W b", persistence_dca, "F G ({})")):
    phi = parse(text)
    automaton = build(phi, ap=alphabet.atoms)
    reference = parse(wrap.format(text))
    bad = sum(accepts(automaton, w) != satisfies(w, reference) for w in lassos)
    print(f"{build.__name__}({text}) vs {reference}: "
          f"{len(lassos)} lassos, {bad} mismatches")
