"""Deterministic Rabin translation.

For one advice pair (X, Y) three deterministic automata are intersected:

* ``obligation_dca(phi, X)``: a tracker follows the derivative classes of
  ``phi`` while a checker follows the derivatives of the safety rewrite of
  the tracker.  When the checker fails (ff) it restarts from the rewrite
  of the current tracker class; the word is accepted when failures stop,
  i.e. some suffix satisfies the safety rewrite of the derivative so far.
* ``recurrence_conjunction_dba(X, Y)``: every member of X, co-safety
  rewritten under Y, holds infinitely often; the conjunction of G F goals
  is folded into one recurrence automaton via the chain
  ``GF(x1 & F(x2 & F(... xk)))``, avoiding a degeneralization counter.
* ``persistence_conjunction_dca(X, Y)``: every member of Y, safety
  rewritten under X, eventually holds forever.

The product of the three forms one Rabin pair; the full translation is
the product over the contributing advice pairs with the disjunction of
the lifted pair conditions.  Pairs whose promises are already
unsatisfiable are dropped, which keeps the pair count within the
2^(number of fixpoint subformulas) bound.
"""

from __future__ import annotations

from .advice import (DEFAULT_MAX_ADVICE, Advice, to_cosafety, to_safety,
                     useful_advice_pairs)
from . import formula as F
from .automata import (AccAnd, AccOr, Automaton, DEFAULT_MAX_STATES, Fin, Inf,
                       explore, moore_quotient, product_det,
                       universal_automaton, universal_cobuchi)
from .derivative import canonical_step
from .formula import Formula
from .fragments import persistence_dca, recurrence_dba
from .propeq import canonical
from .words import Alphabet


def obligation_dca(phi: Formula, recurring: frozenset, ap=None,
                   max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Accepts words with a suffix satisfying the delayed safety rewrite."""
    alphabet = Alphabet.for_formula(phi, ap)
    tracker0 = canonical(phi)
    start = (tracker0, to_safety(tracker0, recurring))

    def step(key, letter):
        tracker, checker = key
        next_tracker = canonical_step(tracker, letter)
        if checker is F.ff:
            next_checker = canonical_step(to_safety(tracker, recurring), letter)
        else:
            next_checker = canonical_step(checker, letter)
        return ((next_tracker, next_checker),)

    keys, index, transitions = explore(alphabet, [start], step, max_states)
    rejecting = frozenset(i for i, (_, checker) in enumerate(keys)
                          if checker is F.ff)
    return Automaton(alphabet, keys, transitions, [0], Fin(rejecting))


def recurrence_conjunction_dba(recurring: frozenset, persistent: frozenset,
                               alphabet: Alphabet,
                               max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    if not recurring:
        return universal_automaton(alphabet)
    goals = [to_cosafety(x, persistent) for x in sorted(recurring)]
    chained = goals[-1]
    for goal in reversed(goals[:-1]):
        chained = F.conj(goal, F.eventually(chained))
    return recurrence_dba(chained, ap=alphabet.atoms, max_states=max_states)


def persistence_conjunction_dca(recurring: frozenset, persistent: frozenset,
                                alphabet: Alphabet,
                                max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    if not persistent:
        return universal_cobuchi(alphabet)
    parts = [persistence_dca(to_safety(y, recurring), ap=alphabet.atoms,
                             max_states=max_states)
             for y in sorted(persistent)]
    if len(parts) == 1:
        return parts[0]
    # Finitely many failures in every component iff finitely many in the union.
    return product_det(parts,
                       lambda lifted: Fin(frozenset().union(
                           *(c.states for c in lifted))),
                       max_states)


def rabin_for_advice(phi: Formula, advice: Advice, ap=None,
                     max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """One-pair deterministic Rabin automaton for a fixed advice pair."""
    alphabet = Alphabet.for_formula(phi, ap)
    parts = [moore_quotient(part) for part in (
        obligation_dca(phi, advice.recurring, ap=alphabet.atoms,
                       max_states=max_states),
        recurrence_conjunction_dba(advice.recurring, advice.persistent,
                                   alphabet, max_states),
        persistence_conjunction_dca(advice.recurring, advice.persistent,
                                    alphabet, max_states),
    )]

    def combine(lifted):
        obligation, recurrence, persistence = lifted
        return AccAnd((Fin(obligation.states | persistence.states),
                       Inf(recurrence.states)))

    return moore_quotient(product_det(parts, combine, max_states))


def to_dra(phi: Formula, ap=None, max_advice: int = DEFAULT_MAX_ADVICE,
           max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Deterministic Rabin automaton for full NNF LTL.

    One Rabin pair per advice pair (X, Y); the automaton is the reachable
    product of the per-advice automata with the disjunction of the lifted
    pair conditions.
    """
    alphabet = Alphabet.for_formula(phi, ap)
    parts = [rabin_for_advice(phi, advice, ap=alphabet.atoms,
                              max_states=max_states)
             for advice in useful_advice_pairs(phi, max_advice)]
    if len(parts) == 1:
        single = parts[0]
        return Automaton(single.alphabet, single.labels, single.transitions,
                         single.initial, AccOr((single.acceptance,)))
    return moore_quotient(
        product_det(parts, lambda lifted: AccOr(tuple(lifted)), max_states))
