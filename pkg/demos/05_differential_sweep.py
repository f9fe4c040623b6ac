#!/usr/bin/env python3
"""Differential sweeps: hunting for construction bugs automatically.

Runs the seeded random sweep that compares all three translations
against the exact oracle, then deliberately breaks a construction to
show how a discrepancy is caught and shrunk to a small witness.
"""

from ltl2aut import formula as F
from ltl2aut import sweep
from ltl2aut.buchi import to_nba
from ltl2aut.sweep import SweepConfig, differential_sweep


def section(title):
    print()
    print(f"== {title} ==")


# ---------------------------------------------------------------------------
# A clean sweep.

section("seeded random sweep, three constructions vs the oracle")
report = differential_sweep(SweepConfig(seed=42, formulas=40,
                                        lassos_per_formula=8,
                                        max_formula_size=12))
print(report.to_text())

section("tiny exhaustive sweep (depth 1 formulas, short lassos)")
report = differential_sweep(SweepConfig(mode="exhaustive", atoms=("a", "b"),
                                        exhaustive_depth=1,
                                        exhaustive_prefix=1,
                                        exhaustive_period=1))
print(report.to_text())

# ---------------------------------------------------------------------------
# Catching a planted bug.

section("planting a bug: the Buchi builder translates the negation")
broken = dict(sweep.CONSTRUCTIONS)
broken["nba"] = lambda phi, ap, max_states: to_nba(F.negate(phi), ap=ap,
                                                   max_states=max_states)
saved = sweep.CONSTRUCTIONS
sweep.CONSTRUCTIONS = broken
try:
    report = differential_sweep(SweepConfig(seed=42, formulas=3,
                                            lassos_per_formula=4,
                                            max_formula_size=8,
                                            constructions=("nba",)))
finally:
    sweep.CONSTRUCTIONS = saved
print(report.to_text())
print("every witness is shrunk before reporting, so the failing formula "
      "and lasso above are minimal")
