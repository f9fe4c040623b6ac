"""Formula derivatives: the obligation left after reading letters.

``derivative(phi, letter)`` rewrites ``phi`` into the formula the rest of
the word must satisfy once ``letter`` has been consumed.  It distributes
over the boolean connectives and unfolds the temporal operators one step:

* ``X phi``     ->  ``phi``
* ``F phi``     ->  ``d(phi) | F phi``
* ``G phi``     ->  ``d(phi) & G phi``
* ``phi U psi`` ->  ``d(psi) | (d(phi) & phi U psi)``
* ``phi W psi`` ->  ``d(psi) | (d(phi) & phi W psi)``
* ``phi M psi`` ->  ``d(psi) & (d(phi) | phi M psi)``
* ``phi R psi`` ->  ``d(psi) & (d(phi) | phi R psi)``

Literals evaluate against the letter.  The result is always a positive
boolean combination of proper subformulas of the input.  The state space
of a formula is its set of derivatives up to propositional equivalence
(``reachable_classes``); the clause layer (``clause_step`` and
``reachable_clauses``) splits derivatives into their DNF clauses and is
the nondeterministic counterpart.
"""

from __future__ import annotations

from typing import Iterable

from . import formula as F
from .errors import StateLimitError
from .formula import Formula
from .propeq import Clause, canonical, clause_formula, dnf_clauses
from .words import Alphabet, Letter

DEFAULT_MAX_CLASSES = 10 ** 6

_STEP: dict[tuple[Formula, Letter], Formula] = {}
_CANONICAL_STEP: dict[tuple[Formula, Letter], Formula] = {}
_CLAUSE_STEP: dict[tuple[Clause, Letter], frozenset] = {}


def derivative(phi: Formula, letter: Letter) -> Formula:
    """One-letter derivative, built with the identity-collapsing constructors."""
    key = (phi, letter)
    cached = _STEP.get(key)
    if cached is not None:
        return cached
    kind = phi.kind
    if kind == F.TT or kind == F.FF:
        out = phi
    elif kind == F.AP:
        out = F.tt if phi.name in letter else F.ff
    elif kind == F.NAP:
        out = F.ff if phi.name in letter else F.tt
    elif kind == F.AND:
        out = F.conj(derivative(phi.left, letter), derivative(phi.right, letter))
    elif kind == F.OR:
        out = F.disj(derivative(phi.left, letter), derivative(phi.right, letter))
    elif kind == F.NEXT:
        out = phi.left
    elif kind == F.EVENTUALLY:
        out = F.disj(derivative(phi.left, letter), phi)
    elif kind == F.ALWAYS:
        out = F.conj(derivative(phi.left, letter), phi)
    elif kind == F.UNTIL:
        out = F.disj(derivative(phi.right, letter),
                     F.conj(derivative(phi.left, letter), phi))
    elif kind == F.WEAK_UNTIL:
        out = F.disj(derivative(phi.right, letter),
                     F.conj(derivative(phi.left, letter), phi))
    elif kind == F.STRONG_RELEASE:
        out = F.conj(derivative(phi.right, letter),
                     F.disj(derivative(phi.left, letter), phi))
    else:  # RELEASE
        out = F.conj(derivative(phi.right, letter),
                     F.disj(derivative(phi.left, letter), phi))
    _STEP[key] = out
    return out


def derivative_word(phi: Formula, word: Iterable[Letter]) -> Formula:
    out = phi
    for letter in word:
        out = derivative(out, letter)
    return out


def canonical_step(rep: Formula, letter: Letter) -> Formula:
    """Derivative on canonical representatives (the class transition map)."""
    key = (rep, letter)
    cached = _CANONICAL_STEP.get(key)
    if cached is None:
        cached = canonical(derivative(rep, letter))
        _CANONICAL_STEP[key] = cached
    return cached


def clause_step(clause: Clause, letter: Letter) -> frozenset:
    """Clause-level derivative: the DNF clauses of the derivative."""
    key = (clause, letter)
    cached = _CLAUSE_STEP.get(key)
    if cached is None:
        cached = dnf_clauses(derivative(clause_formula(clause), letter))
        _CLAUSE_STEP[key] = cached
    return cached


def ordered_clauses(clauses: Iterable[Clause]) -> tuple[Clause, ...]:
    """Deterministic clause order: by sorted interning ids."""
    return tuple(sorted(clauses, key=lambda c: tuple(sorted(f._id for f in c))))


class ReachableClasses:
    """BFS closure of equivalence classes under the derivative."""

    __slots__ = ("alphabet", "classes", "index", "successors", "initial")

    def __init__(self, alphabet: Alphabet, classes: tuple[Formula, ...],
                 index: dict[Formula, int], successors: list[list[int]],
                 initial: int):
        self.alphabet = alphabet
        self.classes = classes
        self.index = index
        self.successors = successors
        self.initial = initial

    def step(self, rep: Formula, letter: Letter) -> Formula:
        return self.classes[self.successors[self.index[rep]]
                            [self.alphabet.index(letter)]]

    def __len__(self) -> int:
        return len(self.classes)


def reachable_classes(phi: Formula, alphabet: Alphabet | None = None,
                      max_classes: int = DEFAULT_MAX_CLASSES) -> ReachableClasses:
    """All derivative classes of ``phi``, closed under every letter."""
    if alphabet is None:
        alphabet = Alphabet.for_formula(phi)
    start = canonical(phi)
    classes: list[Formula] = [start]
    index: dict[Formula, int] = {start: 0}
    successors: list[list[int]] = []
    at = 0
    while at < len(classes):
        rep = classes[at]
        row: list[int] = []
        for letter in alphabet.letters:
            succ = canonical_step(rep, letter)
            found = index.get(succ)
            if found is None:
                if len(classes) >= max_classes:
                    raise StateLimitError(
                        f"more than {max_classes} derivative classes")
                found = len(classes)
                index[succ] = found
                classes.append(succ)
            row.append(found)
        successors.append(row)
        at += 1
    return ReachableClasses(alphabet, tuple(classes), index, successors, 0)


class ReachableClauses:
    """BFS closure of DNF clauses under the clause-level derivative."""

    __slots__ = ("alphabet", "clauses", "index", "successors", "initial")

    def __init__(self, alphabet: Alphabet, clauses: tuple[Clause, ...],
                 index: dict[Clause, int], successors: list[list[tuple[int, ...]]],
                 initial: tuple[int, ...]):
        self.alphabet = alphabet
        self.clauses = clauses
        self.index = index
        self.successors = successors
        self.initial = initial

    def __len__(self) -> int:
        return len(self.clauses)


def reachable_clauses(phi: Formula, alphabet: Alphabet | None = None,
                      max_clauses: int = DEFAULT_MAX_CLASSES) -> ReachableClauses:
    """All clauses reachable from ``dnf_clauses(phi)`` under ``clause_step``."""
    if alphabet is None:
        alphabet = Alphabet.for_formula(phi)
    initial = ordered_clauses(dnf_clauses(phi))
    clauses: list[Clause] = []
    index: dict[Clause, int] = {}

    def intern(clause: Clause) -> int:
        found = index.get(clause)
        if found is None:
            if len(clauses) >= max_clauses:
                raise StateLimitError(f"more than {max_clauses} clauses")
            found = len(clauses)
            index[clause] = found
            clauses.append(clause)
        return found

    initial_ids = tuple(intern(c) for c in initial)
    successors: list[list[tuple[int, ...]]] = []
    at = 0
    while at < len(clauses):
        clause = clauses[at]
        row = [tuple(intern(s) for s in ordered_clauses(clause_step(clause, letter)))
               for letter in alphabet.letters]
        successors.append(row)
        at += 1
    return ReachableClauses(alphabet, tuple(clauses), index, successors,
                            initial_ids)
