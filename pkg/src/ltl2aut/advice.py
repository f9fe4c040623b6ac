"""Advice rewrites: resolving fixpoint obligations by promised sets.

``to_safety(phi, X)`` assumes the least-fixpoint subformulas in ``X`` are
satisfied infinitely often and rewrites ``phi`` into the syntactic safety
fragment: members of ``X`` lose their eventuality (F becomes tt, U becomes
W, M becomes R), non-members become ff.  ``to_cosafety(phi, Y)`` is the
dual: greatest-fixpoint subformulas in ``Y`` are assumed to hold forever
from now on and become tt (or weaken W/R to U/M), so the result is in the
co-safety fragment.

Membership is structural (interned identity); the sets may legally contain
formulas that are not subformulas of ``phi``, which makes one advice pair
reusable across all derivatives of a root formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import formula as F
from .errors import AdviceLimitError
from .formula import Formula
from .propeq import canonical

DEFAULT_MAX_ADVICE = 4096

_TO_SAFETY: dict[tuple[Formula, frozenset], Formula] = {}
_TO_COSAFETY: dict[tuple[Formula, frozenset], Formula] = {}


def to_safety(phi: Formula, recurring: frozenset) -> Formula:
    """Rewrite into the safety fragment under recurrence promises.

    The result is canonicalized; it contains no F/U/M operator.
    """
    key = (phi, recurring)
    cached = _TO_SAFETY.get(key)
    if cached is None:
        cached = canonical(_to_safety(phi, recurring))
        _TO_SAFETY[key] = cached
    return cached


def _to_safety(phi: Formula, recurring: frozenset) -> Formula:
    kind = phi.kind
    if kind in (F.TT, F.FF, F.AP, F.NAP):
        return phi
    if kind == F.AND:
        return F.conj(_to_safety(phi.left, recurring),
                      _to_safety(phi.right, recurring))
    if kind == F.OR:
        return F.disj(_to_safety(phi.left, recurring),
                      _to_safety(phi.right, recurring))
    if kind == F.NEXT:
        return F.next_(_to_safety(phi.left, recurring))
    if kind == F.ALWAYS:
        return F.always(_to_safety(phi.left, recurring))
    if kind == F.WEAK_UNTIL:
        return F.weak_until(_to_safety(phi.left, recurring),
                            _to_safety(phi.right, recurring))
    if kind == F.RELEASE:
        return F.release(_to_safety(phi.left, recurring),
                         _to_safety(phi.right, recurring))
    if kind == F.EVENTUALLY:
        return F.tt if phi in recurring else F.ff
    if kind == F.UNTIL:
        if phi in recurring:
            return F.weak_until(_to_safety(phi.left, recurring),
                                _to_safety(phi.right, recurring))
        return F.ff
    # STRONG_RELEASE
    if phi in recurring:
        return F.release(_to_safety(phi.left, recurring),
                         _to_safety(phi.right, recurring))
    return F.ff


def to_cosafety(phi: Formula, persistent: frozenset) -> Formula:
    """Rewrite into the co-safety fragment under persistence promises.

    The result is canonicalized; it contains no G/W/R operator.
    """
    key = (phi, persistent)
    cached = _TO_COSAFETY.get(key)
    if cached is None:
        cached = canonical(_to_cosafety(phi, persistent))
        _TO_COSAFETY[key] = cached
    return cached


def _to_cosafety(phi: Formula, persistent: frozenset) -> Formula:
    kind = phi.kind
    if kind in (F.TT, F.FF, F.AP, F.NAP):
        return phi
    if kind == F.AND:
        return F.conj(_to_cosafety(phi.left, persistent),
                      _to_cosafety(phi.right, persistent))
    if kind == F.OR:
        return F.disj(_to_cosafety(phi.left, persistent),
                      _to_cosafety(phi.right, persistent))
    if kind == F.NEXT:
        return F.next_(_to_cosafety(phi.left, persistent))
    if kind == F.EVENTUALLY:
        return F.eventually(_to_cosafety(phi.left, persistent))
    if kind == F.UNTIL:
        return F.until(_to_cosafety(phi.left, persistent),
                       _to_cosafety(phi.right, persistent))
    if kind == F.STRONG_RELEASE:
        return F.strong_release(_to_cosafety(phi.left, persistent),
                                _to_cosafety(phi.right, persistent))
    if kind == F.ALWAYS:
        return F.tt if phi in persistent else F.ff
    if kind == F.WEAK_UNTIL:
        if phi in persistent:
            return F.tt
        return F.until(_to_cosafety(phi.left, persistent),
                       _to_cosafety(phi.right, persistent))
    # RELEASE
    if phi in persistent:
        return F.tt
    return F.strong_release(_to_cosafety(phi.left, persistent),
                            _to_cosafety(phi.right, persistent))


@dataclass(frozen=True)
class Advice:
    """One advice pair for a root formula.

    ``recurring`` is a set of F/U/M subformulas promised to hold infinitely
    often; ``persistent`` a set of G/W/R subformulas promised to eventually
    hold forever.
    """

    recurring: frozenset
    persistent: frozenset

    def __post_init__(self):
        for x in self.recurring:
            if x.kind not in F.LFP_KINDS:
                raise ValueError(f"{x} is not F/U/M-rooted")
        for y in self.persistent:
            if y.kind not in F.GFP_KINDS:
                raise ValueError(f"{y} is not G/W/R-rooted")


def _subsets(items: list) -> list[frozenset]:
    # Binary-counter order over the interning-sorted item list.
    out = []
    for mask in range(1 << len(items)):
        out.append(frozenset(items[i] for i in range(len(items))
                             if mask >> i & 1))
    return out


def advice_subset_universe(phi: Formula, max_pairs: int = DEFAULT_MAX_ADVICE):
    """All candidate (X, Y) building blocks, capped by total pair count."""
    mu = sorted(F.lfp_subformulas(phi))
    nu = sorted(F.gfp_subformulas(phi))
    pair_count = 1 << (len(mu) + len(nu))
    if pair_count > max_pairs:
        raise AdviceLimitError(
            f"{pair_count} advice pairs exceed the cap {max_pairs}")
    return _subsets(mu), _subsets(nu)


def advice_pairs(phi: Formula,
                 max_pairs: int = DEFAULT_MAX_ADVICE) -> Iterator[Advice]:
    """All advice pairs of ``phi`` in a deterministic order."""
    xs, ys = advice_subset_universe(phi, max_pairs)
    for x_set in xs:
        for y_set in ys:
            yield Advice(x_set, y_set)


def useful_advice_pairs(phi: Formula,
                        max_pairs: int = DEFAULT_MAX_ADVICE) -> Iterator[Advice]:
    """Advice pairs that can contribute to the language decomposition.

    Two reductions, both preserving the union over all pairs:

    * Persistence promises are only consulted inside the co-safety
      rewrites of the promised recurring members, so any pair (X, Y) is
      subsumed by (X, Y restricted to the greatest-fixpoint subformulas
      of members of X).  Only restricted pairs are enumerated.
    * A promise whose rewrite is already ff can never be met (its
      recurrence or persistence goal is unsatisfiable), so the pair
      denotes the empty language and is dropped.

    The pair (empty, empty) makes no promises and always survives, so at
    least one pair remains.
    """
    xs, _ = advice_subset_universe(phi, max_pairs)
    for x_set in xs:
        consulted: set = set()
        for x in x_set:
            consulted |= F.gfp_subformulas(x)
        for y_set in _subsets(sorted(consulted)):
            advice = Advice(x_set, y_set)
            if any(to_cosafety(x, advice.persistent) is F.ff
                   for x in advice.recurring):
                continue
            if any(to_safety(y, advice.recurring) is F.ff
                   for y in advice.persistent):
                continue
            yield advice
