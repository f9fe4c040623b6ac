"""Limit-deterministic Buchi translation.

The initial component runs deterministically on the derivative classes of
the input and contains no accepting state.  At any point the automaton may
jump, together with the next letter, into a deterministic accepting
component keyed by the current class psi and an advice pair (X, Y).  That
component is a deterministic Buchi intersection checking, from the jump
position on,

* the safety rewrite of psi under X (as a safety automaton),
* recurrence of the co-safety rewrite of every member of X under Y,
  folded into one chain ``GF(x1 & F(x2 & F(... xk)))``,
* the safety rewrite of every member of Y under X, holding forever
  (G rather than eventually-G: the jump position absorbs the delay).

Accepting components are deterministic and closed, so every accepting run
jumps exactly once and the result is limit-deterministic by construction.
Components are shared: psi enters the component only through its safety
rewrite, so components are cached by (rewrite class, X, Y).
"""

from __future__ import annotations

from .advice import (DEFAULT_MAX_ADVICE, Advice, to_cosafety, to_safety,
                     useful_advice_pairs)
from . import formula as F
from .automata import (Automaton, DEFAULT_MAX_STATES, Inf, buchi_set,
                       cobuchi_to_buchi, intersect_dbas, moore_quotient)
from .derivative import reachable_classes
from .formula import Formula
from .fragments import recurrence_dba, safety_dca
from .words import Alphabet


def acceptance_component(safety_goal: Formula, advice: Advice,
                         alphabet: Alphabet,
                         max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Deterministic Buchi component entered when jumping on (X, Y)."""
    parts = [cobuchi_to_buchi(safety_dca(safety_goal, ap=alphabet.atoms,
                                         max_states=max_states))]
    if advice.recurring:
        goals = [to_cosafety(x, advice.persistent)
                 for x in sorted(advice.recurring)]
        chained = goals[-1]
        for goal in reversed(goals[:-1]):
            chained = F.conj(goal, F.eventually(chained))
        parts.append(recurrence_dba(chained, ap=alphabet.atoms,
                                    max_states=max_states))
    # G-anchored: a W/R-rooted rewrite can hold at the jump position yet
    # fail later, so checking it once on entry is not enough.
    hold_forever = F.always(F.conj_all(to_safety(y, advice.recurring)
                                       for y in sorted(advice.persistent)))
    parts.append(cobuchi_to_buchi(safety_dca(hold_forever, ap=alphabet.atoms,
                                             max_states=max_states)))
    return moore_quotient(intersect_dbas(parts, max_states))


def to_ldba(phi: Formula, ap=None, max_advice: int = DEFAULT_MAX_ADVICE,
            max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Limit-deterministic Buchi automaton for full NNF LTL."""
    alphabet = Alphabet.for_formula(phi, ap)
    classes = reachable_classes(phi, alphabet, max_states)
    pairs = list(useful_advice_pairs(phi, max_advice))

    components: list[Automaton] = []
    offsets: list[int] = []
    component_index: dict[tuple, int] = {}
    jump_table: list[list[int]] = []  # class -> per (advice) component id
    total = len(classes)
    for rep in classes.classes:
        row = []
        for advice in pairs:
            goal = to_safety(rep, advice.recurring)
            key = (goal, advice.recurring, advice.persistent)
            found = component_index.get(key)
            if found is None:
                component = acceptance_component(goal, advice, alphabet,
                                                 max_states)
                found = len(components)
                component_index[key] = found
                components.append(component)
                offsets.append(total)
                total += component.num_states
            row.append(found)
        jump_table.append(row)

    labels: list = [("init", rep) for rep in classes.classes]
    transitions: list[list[tuple[int, ...]]] = []
    for ci, rep in enumerate(classes.classes):
        row = []
        for li in range(len(alphabet.letters)):
            targets = {classes.successors[ci][li]}
            for comp_id in jump_table[ci]:
                component = components[comp_id]
                entry = next(iter(component.initial))
                local = component.transitions[entry][li][0]
                targets.add(offsets[comp_id] + local)
            row.append(tuple(sorted(targets)))
        transitions.append(row)

    accepting: set[int] = set()
    for comp_id, component in enumerate(components):
        offset = offsets[comp_id]
        labels.extend((comp_id, label) for label in component.labels)
        transitions.extend(
            [tuple(q + offset for q in succs) for succs in row]
            for row in component.transitions)
        accepting.update(q + offset for q in buchi_set(component.acceptance))
    return Automaton(alphabet, labels, transitions, [classes.initial],
                     Inf(frozenset(accepting)))
