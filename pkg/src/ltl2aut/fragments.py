"""Automata for the syntactic safety / co-safety fragments.

Deterministic automata run on derivative equivalence classes:

* ``cosafety_dba(phi)``: accepts words satisfying a co-safety (X/F/U/M)
  formula; the obligation discharges exactly when the class reaches tt.
* ``recurrence_dba(phi)``: accepts words satisfying ``G F phi`` for
  co-safety ``phi``; runs on derivatives of ``F phi`` and restarts at
  ``F phi`` whenever the class reaches tt, so tt recurs iff ``F phi``
  is discharged again and again.
* ``safety_dca(phi)``: accepts words satisfying a safety (X/G/W/R)
  formula; a safety formula holds iff its derivatives never reach ff.
* ``persistence_dca(phi)``: accepts words satisfying ``F G phi`` for
  safety ``phi``; runs on derivatives of ``G phi`` and restarts at
  ``G phi`` on failure, accepting when failures stop.

The nondeterministic counterparts run on DNF clauses of derivatives and
guess the disjunct to pursue; the persistence automaton additionally
guesses when ``G phi`` starts to hold, via a waiting state that feeds the
clause ``{G phi}`` on every letter.
"""

from __future__ import annotations

from . import formula as F
from .automata import Automaton, Fin, Inf, explore
from .derivative import (DEFAULT_MAX_CLASSES, canonical_step, clause_step,
                         ordered_clauses)
from .errors import FragmentError
from .formula import Formula
from .propeq import canonical, dnf_clauses
from .words import Alphabet


def _require(condition: bool, phi: Formula, fragment: str) -> None:
    if not condition:
        raise FragmentError(f"{phi} is not in the {fragment} fragment")


def _class_automaton(start: Formula, alphabet: Alphabet, step, max_states):
    keys, index, transitions = explore(alphabet, [start], step, max_states)
    return keys, index, transitions


def cosafety_dba(phi: Formula, ap=None,
                 max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_cosafety(phi), phi, "co-safety")
    alphabet = Alphabet.for_formula(phi, ap)
    step = lambda rep, letter: (canonical_step(rep, letter),)
    keys, index, transitions = _class_automaton(canonical(phi), alphabet, step,
                                                max_states)
    accepting = frozenset({index[F.tt]} if F.tt in index else ())
    return Automaton(alphabet, keys, transitions, [0], Inf(accepting))


def recurrence_dba(phi: Formula, ap=None,
                   max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_cosafety(phi), phi, "co-safety")
    alphabet = Alphabet.for_formula(phi, ap)
    start = canonical(F.eventually(phi))

    def step(rep, letter):
        # Discharged obligations restart; tt recurs iff F phi keeps holding.
        if rep is F.tt:
            return (start,)
        return (canonical_step(rep, letter),)

    keys, index, transitions = _class_automaton(start, alphabet, step,
                                                max_states)
    accepting = frozenset({index[F.tt]} if F.tt in index else ())
    return Automaton(alphabet, keys, transitions, [0], Inf(accepting))


def safety_dca(phi: Formula, ap=None,
               max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_safety(phi), phi, "safety")
    alphabet = Alphabet.for_formula(phi, ap)
    step = lambda rep, letter: (canonical_step(rep, letter),)
    keys, index, transitions = _class_automaton(canonical(phi), alphabet, step,
                                                max_states)
    rejecting = frozenset({index[F.ff]} if F.ff in index else ())
    return Automaton(alphabet, keys, transitions, [0], Fin(rejecting))


def persistence_dca(phi: Formula, ap=None,
                    max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_safety(phi), phi, "safety")
    alphabet = Alphabet.for_formula(phi, ap)
    start = canonical(F.always(phi))

    def step(rep, letter):
        # Failed obligations restart; acceptance asks failures to stop.
        if rep is F.ff:
            return (start,)
        return (canonical_step(rep, letter),)

    keys, index, transitions = _class_automaton(start, alphabet, step,
                                                max_states)
    rejecting = frozenset({index[F.ff]} if F.ff in index else ())
    return Automaton(alphabet, keys, transitions, [0], Fin(rejecting))


# ---------------------------------------------------------------------------
# Nondeterministic (clause-level) versions.

def cosafety_nba(phi: Formula, ap=None,
                 max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_cosafety(phi), phi, "co-safety")
    alphabet = Alphabet.for_formula(phi, ap)
    initial = ordered_clauses(dnf_clauses(phi))
    step = lambda clause, letter: ordered_clauses(clause_step(clause, letter))
    keys, index, transitions = explore(alphabet, initial, step, max_states)
    empty = frozenset()
    accepting = frozenset({index[empty]} if empty in index else ())
    return Automaton(alphabet, keys, transitions, range(len(initial)),
                     Inf(accepting))


def recurrence_nba(phi: Formula, ap=None,
                   max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_cosafety(phi), phi, "co-safety")
    alphabet = Alphabet.for_formula(phi, ap)
    restart = frozenset({F.eventually(phi)})
    empty = frozenset()

    def step(clause, letter):
        if clause == empty:
            return (restart,)
        return ordered_clauses(clause_step(clause, letter))

    keys, index, transitions = explore(alphabet, [restart], step, max_states)
    accepting = frozenset({index[empty]} if empty in index else ())
    return Automaton(alphabet, keys, transitions, [0], Inf(accepting))


def safety_nba(phi: Formula, ap=None,
               max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_safety(phi), phi, "safety")
    alphabet = Alphabet.for_formula(phi, ap)
    initial = ordered_clauses(dnf_clauses(phi))
    step = lambda clause, letter: ordered_clauses(clause_step(clause, letter))
    keys, index, transitions = explore(alphabet, initial, step, max_states)
    # Accepting by surviving: ff has no clauses, so dead branches vanish.
    return Automaton(alphabet, keys, transitions, range(len(initial)),
                     Inf(frozenset(range(len(keys)))))


def persistence_nba(phi: Formula, ap=None,
                    max_states: int = DEFAULT_MAX_CLASSES) -> Automaton:
    _require(F.admits_safety(phi), phi, "safety")
    alphabet = Alphabet.for_formula(phi, ap)
    waiting = F.eventually(F.always(phi))  # non-clause sentinel state
    goal = frozenset({F.always(phi)})

    def step(key, letter):
        if key is waiting:
            return (waiting, goal)
        return ordered_clauses(clause_step(key, letter))

    keys, index, transitions = explore(alphabet, [waiting], step, max_states)
    accepting = frozenset(i for i in range(len(keys)) if keys[i] is not waiting)
    return Automaton(alphabet, keys, transitions, [0], Inf(accepting))
