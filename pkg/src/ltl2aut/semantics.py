"""Exact LTL satisfaction on lasso words, by fixpoint evaluation.

This is the reference oracle for the whole package.  It never looks at
derivatives or automata: each subformula is evaluated to a bitmask of the
lasso's folded positions via least/greatest fixpoint iteration over the
one-step successor map, which is exact on ultimately periodic words.

Also here: the recurring/occurring/persistent/invariant obligation sets of
a word, word stability, and ``decomposed_sat`` which decides satisfaction
through the advice decomposition (exists advice sets X, Y and a position i
such that the delayed safety rewrite holds at i, every member of X recurs,
and every member of Y eventually holds forever).
"""

from __future__ import annotations

from . import formula as F
from .advice import DEFAULT_MAX_ADVICE, advice_subset_universe, to_cosafety, to_safety
from .derivative import canonical_step
from .formula import Formula
from .propeq import canonical
from .words import Lasso


class LassoEvaluator:
    """Truth bitmasks (bit p = position p) for one lasso word."""

    __slots__ = ("lasso", "n", "loop", "all_ones", "cycle_mask", "_masks")

    def __init__(self, lasso: Lasso):
        self.lasso = lasso
        self.n = lasso.positions
        self.loop = lasso.loop_start
        self.all_ones = (1 << self.n) - 1
        self.cycle_mask = self.all_ones ^ ((1 << self.loop) - 1)
        self._masks: dict[Formula, int] = {}

    def _shift(self, mask: int) -> int:
        # Bit p of the result is bit succ(p) of mask, where succ is p+1
        # except that the last position wraps to the loop start.
        return (mask >> 1) | ((mask >> self.loop & 1) << (self.n - 1))

    def mask(self, phi: Formula) -> int:
        cached = self._masks.get(phi)
        if cached is not None:
            return cached
        kind = phi.kind
        if kind == F.TT:
            out = self.all_ones
        elif kind == F.FF:
            out = 0
        elif kind == F.AP:
            out = self._atom_mask(phi.name)
        elif kind == F.NAP:
            out = self.all_ones ^ self._atom_mask(phi.name)
        elif kind == F.AND:
            out = self.mask(phi.left) & self.mask(phi.right)
        elif kind == F.OR:
            out = self.mask(phi.left) | self.mask(phi.right)
        elif kind == F.NEXT:
            out = self._shift(self.mask(phi.left))
        elif kind == F.EVENTUALLY:
            sub = self.mask(phi.left)
            out = self._fixpoint(lambda v: sub | self._shift(v), 0)
        elif kind == F.ALWAYS:
            sub = self.mask(phi.left)
            out = self._fixpoint(lambda v: sub & self._shift(v), self.all_ones)
        elif kind == F.UNTIL or kind == F.WEAK_UNTIL:
            left = self.mask(phi.left)
            right = self.mask(phi.right)
            seed = 0 if kind == F.UNTIL else self.all_ones
            out = self._fixpoint(lambda v: right | (left & self._shift(v)), seed)
        else:  # STRONG_RELEASE / RELEASE share one functional
            left = self.mask(phi.left)
            right = self.mask(phi.right)
            seed = 0 if kind == F.STRONG_RELEASE else self.all_ones
            out = self._fixpoint(lambda v: right & (left | self._shift(v)), seed)
        self._masks[phi] = out
        return out

    def _atom_mask(self, name: str) -> int:
        out = 0
        for p in range(self.n):
            if name in self.lasso.letter_at(p):
                out |= 1 << p
        return out

    def _fixpoint(self, functional, seed: int) -> int:
        value = seed
        while True:
            new = functional(value)
            if new == value:
                return value
            value = new

    def holds(self, phi: Formula, position: int = 0) -> bool:
        """Does the suffix starting at absolute position ``position`` satisfy phi?"""
        return bool(self.mask(phi) >> self.lasso.position_of(position) & 1)


def satisfies(lasso: Lasso, phi: Formula) -> bool:
    """Exact satisfaction of ``phi`` by the infinite word ``lasso``."""
    return LassoEvaluator(lasso).holds(phi)


# ---------------------------------------------------------------------------
# Obligation sets of a word.

def occurring_set(lasso: Lasso, phi: Formula) -> frozenset:
    """Least-fixpoint subformulas that hold at least once (F psi)."""
    ev = LassoEvaluator(lasso)
    return frozenset(p for p in F.lfp_subformulas(phi) if ev.mask(p) != 0)


def recurring_set(lasso: Lasso, phi: Formula) -> frozenset:
    """Least-fixpoint subformulas that hold infinitely often (GF psi)."""
    ev = LassoEvaluator(lasso)
    return frozenset(p for p in F.lfp_subformulas(phi)
                     if ev.mask(p) & ev.cycle_mask)


def invariant_set(lasso: Lasso, phi: Formula) -> frozenset:
    """Greatest-fixpoint subformulas that hold from the start on (G psi)."""
    ev = LassoEvaluator(lasso)
    return frozenset(p for p in F.gfp_subformulas(phi)
                     if ev.mask(p) == ev.all_ones)


def persistent_set(lasso: Lasso, phi: Formula) -> frozenset:
    """Greatest-fixpoint subformulas that eventually hold forever (FG psi)."""
    ev = LassoEvaluator(lasso)
    return frozenset(p for p in F.gfp_subformulas(phi)
                     if ev.mask(p) & ev.cycle_mask == ev.cycle_mask)


def is_lfp_stable(lasso: Lasso, phi: Formula) -> bool:
    """Everything that ever holds among the F/U/M obligations keeps recurring."""
    return occurring_set(lasso, phi) == recurring_set(lasso, phi)


def is_gfp_stable(lasso: Lasso, phi: Formula) -> bool:
    """Everything eventually-invariant among G/W/R already holds from the start."""
    return persistent_set(lasso, phi) == invariant_set(lasso, phi)


def stabilization_point(lasso: Lasso, phi: Formula) -> int:
    """Smallest i such that every suffix from i on is stable both ways.

    Always at most ``lasso.positions``: suffixes inside the loop are stable.
    """
    point = lasso.loop_start
    for i in range(point - 1, -1, -1):
        suffix = lasso.suffix(i)
        if is_lfp_stable(suffix, phi) and is_gfp_stable(suffix, phi):
            point = i
        else:
            break
    return point


# ---------------------------------------------------------------------------
# Advice decomposition.


def _delayed_safety_holds(ev: LassoEvaluator, lasso: Lasso, phi: Formula,
                          recurring: frozenset) -> bool:
    """Exists i with w_i satisfying the safety rewrite of the i-th derivative."""
    rep = canonical(phi)
    seen: set[tuple[Formula, int]] = set()
    i = 0
    while True:
        pos = lasso.position_of(i)
        if (rep, pos) in seen:
            return False
        seen.add((rep, pos))
        if ev.holds(to_safety(rep, recurring), i):
            return True
        rep = canonical_step(rep, lasso.letter_at(i))
        i += 1


def decomposed_sat(lasso: Lasso, phi: Formula,
                   max_pairs: int = DEFAULT_MAX_ADVICE) -> bool:
    """Satisfaction via the advice decomposition (should equal ``satisfies``).

    Brute-forces all advice pairs (X, Y): X of least-fixpoint subformulas
    promised to recur, Y of greatest-fixpoint subformulas promised to
    eventually hold forever, checking

    1. some suffix satisfies the safety rewrite of the derivative so far,
    2. the co-safety rewrite of every member of X recurs,
    3. the safety rewrite of every member of Y eventually holds forever.
    """
    xs, ys = advice_subset_universe(phi, max_pairs)
    ev = LassoEvaluator(lasso)
    for x_set in xs:
        for y_set in ys:
            if not all(ev.holds(F.always(F.eventually(to_cosafety(x, y_set))))
                       for x in x_set):
                continue
            if not all(ev.holds(F.eventually(F.always(to_safety(y, x_set))))
                       for y in y_set):
                continue
            if _delayed_safety_holds(ev, lasso, phi, x_set):
                return True
    return False


def decomposed_sat_anchored(lasso: Lasso, phi: Formula,
                            max_pairs: int = DEFAULT_MAX_ADVICE) -> bool:
    """Variant with all three conditions anchored at one position i.

    Condition 3 strengthens to "holds forever from i on" (G instead of FG);
    this is the shape the limit-deterministic construction jumps on.
    """
    xs, ys = advice_subset_universe(phi, max_pairs)
    ev = LassoEvaluator(lasso)
    for x_set in xs:
        for y_set in ys:
            if not all(ev.holds(F.always(F.eventually(to_cosafety(x, y_set))))
                       for x in x_set):
                continue
            rep = canonical(phi)
            seen: set[tuple[Formula, int]] = set()
            i = 0
            found = False
            while not found:
                pos = lasso.position_of(i)
                if (rep, pos) in seen:
                    break
                seen.add((rep, pos))
                if (ev.holds(to_safety(rep, x_set), i)
                        and all(ev.holds(F.always(to_safety(y, x_set)), i)
                                for y in y_set)):
                    found = True
                    break
                rep = canonical_step(rep, lasso.letter_at(i))
                i += 1
            if found:
                return True
    return False
