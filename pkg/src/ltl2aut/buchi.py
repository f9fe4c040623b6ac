"""Nondeterministic Buchi translation.

Per advice pair (X, Y) three NBAs are intersected (round-robin counter):

* ``obligation_nba(phi, X)``: clause states of the derivatives of ``phi``
  (the waiting part, non-accepting) plus clause states of safety rewrites
  (the checking part, accepting).  The guess "the safety rewrite holds
  from here on" is taken together with the next letter: from a waiting
  clause c the automaton can move into any clause of the derivative of
  the safety rewrite of c.  The checking part survives exactly on words
  satisfying the rewrite, so entering it at the right moment is accepted.
* ``recurrence_conjunction_nba(X, Y)``: the conjunction of G F goals is
  folded into a single recurrence automaton via the chain
  ``GF(x1 & F(x2 & F(... xk)))``.
* ``persistence_conjunction_nba(X, Y)``: the conjunction of F G goals
  equals F G of the conjunction.

The full translation is the disjoint union over the contributing
advice pairs.
"""

from __future__ import annotations

from .advice import (DEFAULT_MAX_ADVICE, Advice, to_cosafety, to_safety,
                     useful_advice_pairs)
from . import formula as F
from .automata import (Automaton, DEFAULT_MAX_STATES, Inf, explore,
                       intersect_nbas, union_nbas, universal_automaton)
from .derivative import clause_step, derivative, ordered_clauses
from .formula import Formula
from .fragments import persistence_nba, recurrence_nba
from .propeq import clause_formula, dnf_clauses
from .words import Alphabet

_WAITING = "wait"
_CHECKING = "check"


def obligation_nba(phi: Formula, recurring: frozenset, ap=None,
                   max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Guesses the position from which the delayed safety rewrite holds."""
    alphabet = Alphabet.for_formula(phi, ap)
    initial = [(_WAITING, c) for c in ordered_clauses(dnf_clauses(phi))]

    def step(key, letter):
        tag, clause = key
        moves = [(tag, c) for c in ordered_clauses(clause_step(clause, letter))]
        if tag == _WAITING:
            rewritten = to_safety(clause_formula(clause), recurring)
            jump = dnf_clauses(derivative(rewritten, letter))
            moves += [(_CHECKING, c) for c in ordered_clauses(jump)]
        return moves

    keys, index, transitions = explore(alphabet, initial, step, max_states)
    accepting = frozenset(i for i, (tag, _) in enumerate(keys)
                          if tag == _CHECKING)
    return Automaton(alphabet, keys, transitions, range(len(initial)),
                     Inf(accepting))


def recurrence_conjunction_nba(recurring: frozenset, persistent: frozenset,
                               alphabet: Alphabet,
                               max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    if not recurring:
        return universal_automaton(alphabet)
    goals = [to_cosafety(x, persistent) for x in sorted(recurring)]
    chained = goals[-1]
    for goal in reversed(goals[:-1]):
        chained = F.conj(goal, F.eventually(chained))
    return recurrence_nba(chained, ap=alphabet.atoms, max_states=max_states)


def persistence_conjunction_nba(recurring: frozenset, persistent: frozenset,
                                alphabet: Alphabet,
                                max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    if not persistent:
        return universal_automaton(alphabet)
    conjunction = F.conj_all(to_safety(y, recurring)
                             for y in sorted(persistent))
    return persistence_nba(conjunction, ap=alphabet.atoms,
                           max_states=max_states)


def nba_for_advice(phi: Formula, advice: Advice, ap=None,
                   max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    alphabet = Alphabet.for_formula(phi, ap)
    return intersect_nbas([
        obligation_nba(phi, advice.recurring, ap=alphabet.atoms,
                       max_states=max_states),
        recurrence_conjunction_nba(advice.recurring, advice.persistent,
                                   alphabet, max_states),
        persistence_conjunction_nba(advice.recurring, advice.persistent,
                                    alphabet, max_states),
    ], max_states)


def to_nba(phi: Formula, ap=None, max_advice: int = DEFAULT_MAX_ADVICE,
           max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Nondeterministic Buchi automaton for full NNF LTL."""
    alphabet = Alphabet.for_formula(phi, ap)
    parts = [nba_for_advice(phi, advice, ap=alphabet.atoms,
                            max_states=max_states)
             for advice in useful_advice_pairs(phi, max_advice)]
    return union_nbas(parts)
