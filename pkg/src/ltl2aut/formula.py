"""Negation-normal-form LTL syntax trees with hash-consed nodes.

Formulas are immutable and interned: structurally identical trees are the
same object, so equality, hashing and set membership are O(1).  The intern
table is process-global; building relies on the GIL for the single dict
insert, readers need no synchronization.

The constructors keep formulas in negation normal form by construction:
negation exists only on atoms, and ``negate`` pushes a general negation
inward through the usual dualities (F/G, U/R, W/M, De Morgan).
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, Iterator

# Node kinds.  Temporal kinds reuse the surface operator letters.
TT = "tt"
FF = "ff"
AP = "ap"
NAP = "nap"
AND = "and"
OR = "or"
NEXT = "X"
EVENTUALLY = "F"
ALWAYS = "G"
UNTIL = "U"
WEAK_UNTIL = "W"
STRONG_RELEASE = "M"
RELEASE = "R"

UNARY_KINDS = frozenset({NEXT, EVENTUALLY, ALWAYS})
BINARY_TEMPORAL_KINDS = frozenset({UNTIL, WEAK_UNTIL, STRONG_RELEASE, RELEASE})
TEMPORAL_KINDS = UNARY_KINDS | BINARY_TEMPORAL_KINDS
#: Least-fixpoint rooted kinds (something must eventually happen).
LFP_KINDS = frozenset({EVENTUALLY, UNTIL, STRONG_RELEASE})
#: Greatest-fixpoint rooted kinds (something may hold forever).
GFP_KINDS = frozenset({ALWAYS, WEAK_UNTIL, RELEASE})


class Formula:
    """One interned NNF formula node.  Build via the module factories."""

    __slots__ = ("kind", "left", "right", "name", "_id")

    kind: str
    left: "Formula | None"
    right: "Formula | None"
    name: str | None
    _id: int

    def __init__(self) -> None:
        raise TypeError("use the factory functions, not Formula() directly")

    def __hash__(self) -> int:
        return self._id

    def __lt__(self, other: "Formula") -> bool:
        # Interning order; used only to make iteration orders deterministic.
        return self._id < other._id

    def __repr__(self) -> str:
        return f"Formula({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)

    @property
    def children(self) -> tuple["Formula", ...]:
        if self.left is None:
            return ()
        if self.right is None:
            return (self.left,)
        return (self.left, self.right)


_TABLE: dict[tuple, Formula] = {}
_NEXT_ID = 0


def _make(kind: str, left: Formula | None, right: Formula | None,
          name: str | None) -> Formula:
    global _NEXT_ID
    key = (kind, name, None if left is None else left._id,
           None if right is None else right._id)
    found = _TABLE.get(key)
    if found is not None:
        return found
    node = object.__new__(Formula)
    node.kind = kind
    node.left = left
    node.right = right
    node.name = name
    node._id = _NEXT_ID
    _NEXT_ID += 1
    _TABLE[key] = node
    return node


tt: Formula = _make(TT, None, None, None)
ff: Formula = _make(FF, None, None, None)


_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_RESERVED = frozenset({"tt", "ff", "true", "false"})


def atom(name: str) -> Formula:
    if not _ATOM_RE.match(name) or name in _RESERVED:
        raise ValueError(f"invalid atom name: {name!r}")
    return _make(AP, None, None, name)


def neg_atom(name: str) -> Formula:
    atom(name)  # validate
    return _make(NAP, None, None, name)


def conj(left: Formula, right: Formula) -> Formula:
    """Conjunction with propositional-identity collapses only."""
    if left is tt:
        return right
    if right is tt:
        return left
    if left is ff or right is ff:
        return ff
    if left is right:
        return left
    return _make(AND, left, right, None)


def disj(left: Formula, right: Formula) -> Formula:
    if left is ff:
        return right
    if right is ff:
        return left
    if left is tt or right is tt:
        return tt
    if left is right:
        return left
    return _make(OR, left, right, None)


def conj_all(parts: Iterable[Formula]) -> Formula:
    out = tt
    for part in reversed(list(parts)):
        out = conj(part, out)
    return out


def disj_all(parts: Iterable[Formula]) -> Formula:
    out = ff
    for part in reversed(list(parts)):
        out = disj(part, out)
    return out


def next_(sub: Formula) -> Formula:
    return _make(NEXT, sub, None, None)


def eventually(sub: Formula) -> Formula:
    return _make(EVENTUALLY, sub, None, None)


def always(sub: Formula) -> Formula:
    return _make(ALWAYS, sub, None, None)


def until(left: Formula, right: Formula) -> Formula:
    return _make(UNTIL, left, right, None)


def weak_until(left: Formula, right: Formula) -> Formula:
    return _make(WEAK_UNTIL, left, right, None)


def strong_release(left: Formula, right: Formula) -> Formula:
    return _make(STRONG_RELEASE, left, right, None)


def release(left: Formula, right: Formula) -> Formula:
    return _make(RELEASE, left, right, None)


_DUAL_BINARY = {UNTIL: release, WEAK_UNTIL: strong_release,
                STRONG_RELEASE: weak_until, RELEASE: until}


def negate(phi: Formula) -> Formula:
    """Negation pushed to the atoms; the result is again in NNF."""
    kind = phi.kind
    if kind == TT:
        return ff
    if kind == FF:
        return tt
    if kind == AP:
        return _make(NAP, None, None, phi.name)
    if kind == NAP:
        return _make(AP, None, None, phi.name)
    if kind == AND:
        return disj(negate(phi.left), negate(phi.right))
    if kind == OR:
        return conj(negate(phi.left), negate(phi.right))
    if kind == NEXT:
        return next_(negate(phi.left))
    if kind == EVENTUALLY:
        return always(negate(phi.left))
    if kind == ALWAYS:
        return eventually(negate(phi.left))
    return _DUAL_BINARY[kind](negate(phi.left), negate(phi.right))


# ---------------------------------------------------------------------------
# Printing.  Precedence: | < & < U/W/M/R < unary; binary operators associate
# to the right, matching the parser, so printing then parsing is the identity.

_PREC_OR = 1
_PREC_AND = 2
_PREC_BIN = 3
_PREC_UNARY = 4
_PREC_LEAF = 5


def _prec(phi: Formula) -> int:
    kind = phi.kind
    if kind == OR:
        return _PREC_OR
    if kind == AND:
        return _PREC_AND
    if kind in BINARY_TEMPORAL_KINDS:
        return _PREC_BIN
    if kind in UNARY_KINDS or kind == NAP:
        return _PREC_UNARY
    return _PREC_LEAF


def _emit(phi: Formula, required: int) -> str:
    kind = phi.kind
    prec = _prec(phi)
    if kind == TT:
        text = "tt"
    elif kind == FF:
        text = "ff"
    elif kind == AP:
        text = phi.name
    elif kind == NAP:
        text = "!" + phi.name
    elif kind in UNARY_KINDS:
        text = f"{kind} {_emit(phi.left, _PREC_UNARY)}"
    elif kind == AND:
        text = f"{_emit(phi.left, _PREC_AND + 1)} & {_emit(phi.right, _PREC_AND)}"
    elif kind == OR:
        text = f"{_emit(phi.left, _PREC_OR + 1)} | {_emit(phi.right, _PREC_OR)}"
    else:
        text = f"{_emit(phi.left, _PREC_BIN + 1)} {kind} {_emit(phi.right, _PREC_BIN)}"
    if prec < required:
        return f"({text})"
    return text


def to_text(phi: Formula) -> str:
    """Render with minimal parentheses in the concrete surface syntax."""
    return _emit(phi, _PREC_OR)


# ---------------------------------------------------------------------------
# Structural queries (memoized; formulas are interned and live forever).

_SUBFORMULAS: dict[Formula, frozenset[Formula]] = {}


def subformulas(phi: Formula) -> frozenset[Formula]:
    """All subformulas of ``phi``, including ``phi`` itself."""
    cached = _SUBFORMULAS.get(phi)
    if cached is not None:
        return cached
    out = frozenset({phi}).union(*(subformulas(c) for c in phi.children))
    _SUBFORMULAS[phi] = out
    return out


def proper_subformulas(phi: Formula) -> frozenset[Formula]:
    """Subformulas whose root is a literal, constant or temporal operator.

    Conjunctions and disjunctions are boolean glue, not proper subformulas.
    """
    return frozenset(s for s in subformulas(phi)
                     if s.kind not in (AND, OR))


def max_proper_subformulas(phi: Formula) -> frozenset[Formula]:
    """The maximal proper subformulas: the propositional variables of ``phi``."""
    if phi.kind in (AND, OR):
        return max_proper_subformulas(phi.left) | max_proper_subformulas(phi.right)
    return frozenset({phi})


def lfp_subformulas(phi: Formula) -> frozenset[Formula]:
    """All F/U/M-rooted subformulas (the least-fixpoint obligations)."""
    return frozenset(s for s in subformulas(phi) if s.kind in LFP_KINDS)


def gfp_subformulas(phi: Formula) -> frozenset[Formula]:
    """All G/W/R-rooted subformulas (the greatest-fixpoint obligations)."""
    return frozenset(s for s in subformulas(phi) if s.kind in GFP_KINDS)


def atoms(phi: Formula) -> frozenset[str]:
    return frozenset(s.name for s in subformulas(phi) if s.kind in (AP, NAP))


def formula_size(phi: Formula) -> int:
    return len(_node_list(phi))


def _node_list(phi: Formula) -> list[Formula]:
    # Counts occurrences, not shared nodes: a U a has size 3.
    out = [phi]
    for child in phi.children:
        out.extend(_node_list(child))
    return out


def iter_nodes(phi: Formula) -> Iterator[Formula]:
    yield phi
    for child in phi.children:
        yield from iter_nodes(child)


class Fragment(enum.Enum):
    """Syntactic fragment classification.

    COSAFETY admits only X/F/U/M temporal operators, SAFETY only X/G/W/R.
    """

    COSAFETY = "cosafety"
    SAFETY = "safety"
    BOTH = "both"
    NEITHER = "neither"


def syntactic_fragment(phi: Formula) -> Fragment:
    has_lfp = bool(lfp_subformulas(phi))
    has_gfp = bool(gfp_subformulas(phi))
    if has_lfp and has_gfp:
        return Fragment.NEITHER
    if has_lfp:
        return Fragment.COSAFETY
    if has_gfp:
        return Fragment.SAFETY
    return Fragment.BOTH


def admits_cosafety(phi: Formula) -> bool:
    return not gfp_subformulas(phi)


def admits_safety(phi: Formula) -> bool:
    return not lfp_subformulas(phi)
