"""LTL to omega-automata translation via temporal-operator advice sets.

The package parses linear temporal logic in negation normal form, evaluates
it exactly on ultimately periodic words, and compiles it into deterministic
Rabin, nondeterministic Buchi, or limit-deterministic Buchi automata that
are checked against the exact semantics differentially.
"""

from .advice import (Advice, advice_pairs, to_cosafety, to_safety,
                     useful_advice_pairs)
from .automata import (AccAnd, AccOr, Automaton, Fin, Inf, accepts_lasso_det,
                       accepts_lasso_nondet, is_limit_deterministic,
                       moore_quotient, rabin_pairs)
from .buchi import to_nba
from .derivative import derivative, derivative_word, reachable_classes
from .errors import (AcceptanceShapeError, AdviceLimitError, FragmentError,
                     ParseError, ResourceLimitError, StateLimitError,
                     UnknownAtomError)
from .formula import (Formula, always, atom, conj, disj, eventually, ff,
                      neg_atom, negate, next_, release, strong_release, tt,
                      until, weak_until)
from .fragments import (cosafety_dba, cosafety_nba, persistence_dca,
                        persistence_nba, recurrence_dba, recurrence_nba,
                        safety_dca, safety_nba)
from .hoa import write_hoa
from .limdet import to_ldba
from .parser import parse
from .propeq import canonical, dnf_clauses, prop_equivalent
from .rabin import to_dra
from .semantics import (LassoEvaluator, decomposed_sat,
                        decomposed_sat_anchored, invariant_set, occurring_set,
                        persistent_set, recurring_set, satisfies,
                        stabilization_point)
from .sweep import SweepConfig, SweepReport, differential_sweep
from .words import Alphabet, Lasso, letter

__version__ = "0.1.0"

__all__ = [
    "AccAnd", "AccOr", "AcceptanceShapeError", "Advice", "AdviceLimitError",
    "Alphabet", "Automaton", "Fin", "Formula", "FragmentError", "Inf",
    "Lasso", "LassoEvaluator", "ParseError", "ResourceLimitError",
    "StateLimitError", "SweepConfig", "SweepReport", "UnknownAtomError",
    "accepts_lasso_det", "accepts_lasso_nondet", "advice_pairs", "always",
    "atom", "canonical", "conj", "cosafety_dba", "cosafety_nba",
    "decomposed_sat", "decomposed_sat_anchored", "derivative",
    "derivative_word", "differential_sweep", "disj", "dnf_clauses",
    "eventually", "ff", "invariant_set", "is_limit_deterministic", "letter",
    "moore_quotient", "neg_atom", "negate", "next_", "occurring_set", "parse",
    "persistence_dca", "persistence_nba", "persistent_set",
    "prop_equivalent", "rabin_pairs", "reachable_classes", "recurrence_dba",
    "recurrence_nba", "recurring_set", "release", "safety_dca", "safety_nba",
    "satisfies", "stabilization_point", "strong_release", "to_cosafety",
    "to_dra", "to_ldba", "to_nba", "to_safety", "tt", "until",
    "useful_advice_pairs", "weak_until", "write_hoa",
]
