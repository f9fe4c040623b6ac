"""Propositional equivalence of NNF formulas.

Two formulas are propositionally equivalent when they become equivalent
propositional formulas after abstracting every maximal proper subformula
into a variable.  Distinct proper subformulas are distinct variables, so
``a & !a`` is *not* equivalent to ``ff``.

Every NNF formula is a positive (monotone) boolean combination of those
variables, and a monotone function has a unique minimal DNF: the antichain
of its minimal satisfying variable sets.  That clause set is computed here
by distributing conjunctions over clause sets and dropping superset
clauses (absorption), and it doubles as both the canonical form and the
``dnf`` of a formula.  The canonical representative is the clause set
rebuilt as a right-nested disjunction of conjunctions in interning order,
so class comparison is pointer comparison of representatives.
"""

from __future__ import annotations

from . import formula as F
from .formula import Formula

#: A clause: a conjunction of proper subformulas.  The empty clause is tt.
Clause = frozenset

_CLAUSES: dict[Formula, frozenset] = {}
_CANONICAL: dict[Formula, Formula] = {}
_CLAUSE_FORMULA: dict[Clause, Formula] = {}

_TT_CLAUSES: frozenset = frozenset({frozenset()})
_FF_CLAUSES: frozenset = frozenset()


def _absorb(clauses: "set[Clause] | frozenset") -> frozenset:
    """Drop every clause that is a superset of another clause."""
    kept: list[Clause] = []
    for clause in sorted(clauses, key=len):
        if not any(k <= clause for k in kept):
            kept.append(clause)
    return frozenset(kept)


def dnf_clauses(phi: Formula) -> frozenset:
    """Minimal clause set over proper subformulas; disjunction is the class.

    ``dnf_clauses(tt)`` is ``{{}}`` (one empty clause), ``dnf_clauses(ff)``
    is the empty set.  No clause contains ``tt`` or ``ff``, and no clause
    is a superset of another.
    """
    cached = _CLAUSES.get(phi)
    if cached is not None:
        return cached
    kind = phi.kind
    if kind == F.TT:
        out = _TT_CLAUSES
    elif kind == F.FF:
        out = _FF_CLAUSES
    elif kind == F.OR:
        out = _absorb(dnf_clauses(phi.left) | dnf_clauses(phi.right))
    elif kind == F.AND:
        left = dnf_clauses(phi.left)
        right = dnf_clauses(phi.right)
        out = _absorb({lc | rc for lc in left for rc in right})
    else:
        out = frozenset({frozenset({phi})})
    _CLAUSES[phi] = out
    return out


def _clause_key(clause: Clause) -> tuple[int, ...]:
    return tuple(sorted(f._id for f in clause))


def clause_formula(clause: Clause) -> Formula:
    """The conjunction a clause denotes (``tt`` for the empty clause)."""
    cached = _CLAUSE_FORMULA.get(clause)
    if cached is None:
        cached = F.conj_all(sorted(clause))
        _CLAUSE_FORMULA[clause] = cached
    return cached


def canonical(phi: Formula) -> Formula:
    """The canonical representative of the equivalence class of ``phi``.

    Representatives are interned formulas, so two formulas are equivalent
    iff their representatives are the same object.  ``canonical(tt) is tt``
    and ``canonical(ff) is ff``.
    """
    cached = _CANONICAL.get(phi)
    if cached is not None:
        return cached
    clauses = dnf_clauses(phi)
    ordered = sorted(clauses, key=_clause_key)
    rep = F.disj_all(clause_formula(c) for c in ordered)
    _CANONICAL[phi] = rep
    _CANONICAL.setdefault(rep, rep)
    return rep


def prop_equivalent(left: Formula, right: Formula) -> bool:
    return canonical(left) is canonical(right)
