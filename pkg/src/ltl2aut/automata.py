"""Omega-automata with state-based acceptance expressions.

States are dense integers; ``labels[q]`` keeps the structured object a
state was built from (a formula class, a clause, a product tuple) for
debugging and tests.  Transitions are indexed by letter position in the
automaton's alphabet: ``transitions[q][li]`` is the tuple of successor
states.  Deterministic automata have exactly one initial state and one
successor per letter.

The acceptance condition is an expression tree over ``Inf(S)`` / ``Fin(S)``
leaves combined with ``AccAnd`` / ``AccOr``; a run satisfies it based on
the set of states it visits infinitely often.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import AcceptanceShapeError, StateLimitError
from .words import Alphabet, Lasso

DEFAULT_MAX_STATES = 10 ** 6


@dataclass(frozen=True)
class Inf:
    states: frozenset

    def __str__(self) -> str:
        return f"Inf({sorted(self.states)})"


@dataclass(frozen=True)
class Fin:
    states: frozenset

    def __str__(self) -> str:
        return f"Fin({sorted(self.states)})"


@dataclass(frozen=True)
class AccAnd:
    parts: tuple

    def __str__(self) -> str:
        return " & ".join(f"({p})" for p in self.parts)


@dataclass(frozen=True)
class AccOr:
    parts: tuple

    def __str__(self) -> str:
        return " | ".join(f"({p})" for p in self.parts)


Acceptance = "Inf | Fin | AccAnd | AccOr"


def acceptance_holds(acc, recurring: frozenset) -> bool:
    """Evaluate the condition against the set of infinitely visited states."""
    if isinstance(acc, Inf):
        return bool(acc.states & recurring)
    if isinstance(acc, Fin):
        return not (acc.states & recurring)
    if isinstance(acc, AccAnd):
        return all(acceptance_holds(p, recurring) for p in acc.parts)
    if isinstance(acc, AccOr):
        return any(acceptance_holds(p, recurring) for p in acc.parts)
    raise TypeError(f"not an acceptance condition: {acc!r}")


def map_acceptance(acc, rename: Callable[[frozenset], frozenset]):
    """Rebuild the condition with every leaf state set transformed."""
    if isinstance(acc, Inf):
        return Inf(rename(acc.states))
    if isinstance(acc, Fin):
        return Fin(rename(acc.states))
    if isinstance(acc, AccAnd):
        return AccAnd(tuple(map_acceptance(p, rename) for p in acc.parts))
    if isinstance(acc, AccOr):
        return AccOr(tuple(map_acceptance(p, rename) for p in acc.parts))
    raise TypeError(f"not an acceptance condition: {acc!r}")


def acceptance_sets(acc) -> Iterator[frozenset]:
    if isinstance(acc, (Inf, Fin)):
        yield acc.states
    elif isinstance(acc, (AccAnd, AccOr)):
        for p in acc.parts:
            yield from acceptance_sets(p)
    else:
        raise TypeError(f"not an acceptance condition: {acc!r}")


def buchi_set(acc) -> "frozenset | None":
    """The accepting set if the condition is a plain Buchi condition."""
    if isinstance(acc, Inf):
        return acc.states
    return None


def cobuchi_set(acc) -> "frozenset | None":
    if isinstance(acc, Fin):
        return acc.states
    return None


def rabin_pairs(acc) -> "tuple[tuple[frozenset, frozenset], ...] | None":
    """(fin, inf) pairs if the condition is a disjunction of Fin&Inf pairs."""

    def pair(part) -> "tuple[frozenset, frozenset] | None":
        if not isinstance(part, AccAnd) or len(part.parts) != 2:
            return None
        first, second = part.parts
        if isinstance(first, Fin) and isinstance(second, Inf):
            return (first.states, second.states)
        if isinstance(first, Inf) and isinstance(second, Fin):
            return (second.states, first.states)
        return None

    parts = acc.parts if isinstance(acc, AccOr) else (acc,)
    out = []
    for part in parts:
        p = pair(part)
        if p is None:
            return None
        out.append(p)
    return tuple(out)


class Automaton:
    """An omega-automaton over a fixed alphabet."""

    __slots__ = ("alphabet", "labels", "transitions", "initial", "acceptance",
                 "deterministic")

    def __init__(self, alphabet: Alphabet, labels: Sequence,
                 transitions: Sequence[Sequence[tuple[int, ...]]],
                 initial: Iterable[int], acceptance) -> None:
        self.alphabet = alphabet
        self.labels = tuple(labels)
        self.transitions = tuple(tuple(row) for row in transitions)
        self.initial = frozenset(initial)
        self.acceptance = acceptance
        n = len(self.labels)
        if len(self.transitions) != n:
            raise ValueError("one transition row per state required")
        for row in self.transitions:
            if len(row) != len(alphabet.letters):
                raise ValueError("one successor tuple per letter required")
            for succs in row:
                if any(not 0 <= s < n for s in succs):
                    raise ValueError("successor out of range")
        if any(not 0 <= q < n for q in self.initial):
            raise ValueError("initial state out of range")
        for states in acceptance_sets(acceptance):
            if any(not 0 <= q < n for q in states):
                raise ValueError("acceptance set member out of range")
        self.deterministic = (len(self.initial) == 1 and
                              all(len(succs) == 1
                                  for row in self.transitions for succs in row))

    @property
    def num_states(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return sum(len(succs) for row in self.transitions for succs in row)

    def successors(self, state: int, letter_index: int) -> tuple[int, ...]:
        return self.transitions[state][letter_index]

    def __repr__(self) -> str:
        return (f"Automaton(states={self.num_states}, "
                f"ap={list(self.alphabet.atoms)}, det={self.deterministic})")


def explore(alphabet: Alphabet, initial_keys: Sequence, step,
            max_states: int = DEFAULT_MAX_STATES):
    """Generic BFS closure; ``step(key, letter)`` yields successor keys.

    Returns (keys, index, transitions) with states numbered in discovery
    order, initial keys first.
    """
    keys: list = []
    index: dict = {}

    def intern(key) -> int:
        found = index.get(key)
        if found is None:
            if len(keys) >= max_states:
                raise StateLimitError(f"more than {max_states} states")
            found = len(keys)
            index[key] = found
            keys.append(key)
        return found

    for key in initial_keys:
        intern(key)
    transitions: list[list[tuple[int, ...]]] = []
    at = 0
    while at < len(keys):
        key = keys[at]
        transitions.append([tuple(intern(s) for s in step(key, letter))
                            for letter in alphabet.letters])
        at += 1
    return keys, index, transitions


def _single_initial(automaton: Automaton) -> int:
    if not automaton.deterministic:
        raise ValueError("deterministic automaton required")
    return next(iter(automaton.initial))


def accepts_lasso_det(automaton: Automaton, lasso: Lasso) -> bool:
    """Run a deterministic automaton on a lasso word.

    Terminates within |prefix| + |period| * |Q| transition steps: the
    period map is iterated only until a loop-entry state repeats.
    """
    state = _single_initial(automaton)
    trans = automaton.transitions
    prefix_idx = [automaton.alphabet.index(l) for l in lasso.prefix]
    period_idx = [automaton.alphabet.index(l) for l in lasso.period]
    for li in prefix_idx:
        state = trans[state][li][0]

    def round_from(q: int) -> tuple[int, frozenset]:
        visited = []
        for li in period_idx:
            visited.append(q)
            q = trans[q][li][0]
        return q, frozenset(visited)

    order: list[int] = []
    seen: dict[int, int] = {}
    rounds: dict[int, tuple[int, frozenset]] = {}
    while state not in seen:
        seen[state] = len(order)
        order.append(state)
        if state not in rounds:
            rounds[state] = round_from(state)
        state = rounds[state][0]
    recurring: frozenset = frozenset()
    for q in order[seen[state]:]:
        recurring |= rounds[q][1]
    return acceptance_holds(automaton.acceptance, recurring)


def accepts_lasso_nondet(automaton: Automaton, lasso: Lasso) -> bool:
    """Buchi membership test via the automaton x lasso-position graph.

    Accepts iff some cycle through an accepting state is reachable from an
    initial node.  Strongly connected components are computed with an
    iterative Tarjan walk over nodes encoded as ``state * positions + pos``.
    """
    accepting = buchi_set(automaton.acceptance)
    if accepting is None:
        raise AcceptanceShapeError("plain Buchi condition required")
    n_pos = lasso.positions
    loop = lasso.loop_start
    letter_idx = [automaton.alphabet.index(lasso.letter_at(p))
                  for p in range(n_pos)]
    next_pos = [p + 1 if p + 1 < n_pos else loop for p in range(n_pos)]
    trans = automaton.transitions

    def node_succs(node: int) -> list[int]:
        q, p = divmod(node, n_pos)
        np = next_pos[p]
        return [s * n_pos + np for s in trans[q][letter_idx[p]]]

    total = automaton.num_states * n_pos
    index_of = [-1] * total
    low = [0] * total
    on_stack = bytearray(total)
    stack: list[int] = []
    counter = 0
    for start in sorted(q * n_pos for q in automaton.initial):
        if index_of[start] >= 0:
            continue
        index_of[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = 1
        frames = [[start, node_succs(start), 0]]
        while frames:
            frame = frames[-1]
            node, succs, at = frame
            advanced = False
            while at < len(succs):
                succ = succs[at]
                at += 1
                if index_of[succ] < 0:
                    frame[2] = at
                    index_of[succ] = low[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack[succ] = 1
                    frames.append([succ, node_succs(succ), 0])
                    advanced = True
                    break
                if on_stack[succ] and index_of[succ] < low[node]:
                    low[node] = index_of[succ]
            if advanced:
                continue
            frames.pop()
            if frames and low[node] < low[frames[-1][0]]:
                low[frames[-1][0]] = low[node]
            if low[node] == index_of[node]:
                scc = []
                while True:
                    member = stack.pop()
                    on_stack[member] = 0
                    scc.append(member)
                    if member == node:
                        break
                # Any SCC with >= 2 nodes is cyclic through all its members;
                # a singleton needs a self-loop.
                if any(m // n_pos in accepting for m in scc):
                    if len(scc) > 1 or node in node_succs(node):
                        return True
    return False


def product_det(automata: Sequence[Automaton], combine,
                max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Synchronous product of deterministic automata.

    ``combine`` receives the component acceptance conditions lifted to
    product state sets (component order preserved) and returns the product
    condition.
    """
    for a in automata:
        if not a.deterministic:
            raise ValueError("product_det requires deterministic automata")
        if a.alphabet != automata[0].alphabet:
            raise ValueError("mixed alphabets")
    alphabet = automata[0].alphabet
    start = tuple(_single_initial(a) for a in automata)

    def step(key, letter):
        li = alphabet.index(letter)
        return (tuple(a.transitions[q][li][0] for a, q in zip(automata, key)),)

    keys, index, transitions = explore(alphabet, [start], step, max_states)

    def lift(i: int, states: frozenset) -> frozenset:
        return frozenset(idx for idx, key in enumerate(keys)
                         if key[i] in states)

    lifted = [map_acceptance(a.acceptance, lambda s, i=i: lift(i, s))
              for i, a in enumerate(automata)]
    labels = [tuple(automata[i].labels[q] for i, q in enumerate(key))
              for key in keys]
    return Automaton(alphabet, labels, transitions, [0], combine(lifted))


def _counting_acceptance(keys, sets: list[frozenset], k: int) -> Inf:
    wrap = frozenset(idx for idx, (qs, c) in enumerate(keys)
                     if c == k - 1 and qs[k - 1] in sets[k - 1])
    return Inf(wrap)


def intersect_dbas(automata: Sequence[Automaton],
                   max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Deterministic Buchi intersection by round-robin counting.

    The counter waits at component i until that component visits its
    accepting set, then advances; the product accepts when the counter
    wraps infinitely often.  A single automaton is returned unchanged.
    """
    sets = []
    for a in automata:
        s = buchi_set(a.acceptance)
        if s is None or not a.deterministic:
            raise AcceptanceShapeError("deterministic Buchi automata required")
        sets.append(s)
    if len(automata) == 1:
        return automata[0]
    alphabet = automata[0].alphabet
    k = len(automata)
    start = (tuple(_single_initial(a) for a in automata), 0)

    def step(key, letter):
        qs, c = key
        li = alphabet.index(letter)
        nqs = tuple(a.transitions[q][li][0] for a, q in zip(automata, qs))
        nc = (c + 1) % k if qs[c] in sets[c] else c
        return ((nqs, nc),)

    keys, index, transitions = explore(alphabet, [start], step, max_states)
    labels = [(tuple(automata[i].labels[q] for i, q in enumerate(qs)), c)
              for qs, c in keys]
    return Automaton(alphabet, labels, transitions, [0],
                     _counting_acceptance(keys, sets, k))


def intersect_nbas(automata: Sequence[Automaton],
                   max_states: int = DEFAULT_MAX_STATES) -> Automaton:
    """Generalized Buchi intersection of NBAs, same counting scheme."""
    sets = []
    for a in automata:
        s = buchi_set(a.acceptance)
        if s is None:
            raise AcceptanceShapeError("Buchi automata required")
        if a.alphabet != automata[0].alphabet:
            raise ValueError("mixed alphabets")
        sets.append(s)
    if len(automata) == 1:
        return automata[0]
    alphabet = automata[0].alphabet
    k = len(automata)

    def all_tuples(choices):
        out = [()]
        for c in choices:
            out = [t + (s,) for t in out for s in c]
        return out

    initial_keys = [(qs, 0)
                    for qs in all_tuples([sorted(a.initial) for a in automata])]

    def step(key, letter):
        qs, c = key
        li = alphabet.index(letter)
        nc = (c + 1) % k if qs[c] in sets[c] else c
        return [(nqs, nc) for nqs in
                all_tuples([a.transitions[q][li]
                            for a, q in zip(automata, qs)])]

    keys, index, transitions = explore(alphabet, initial_keys, step, max_states)
    labels = [(tuple(automata[i].labels[q] for i, q in enumerate(qs)), c)
              for qs, c in keys]
    return Automaton(alphabet, labels, transitions,
                     range(len(initial_keys)),
                     _counting_acceptance(keys, sets, k))


def union_nbas(automata: Sequence[Automaton]) -> Automaton:
    """Disjoint union; accepts when any component accepts."""
    if not automata:
        raise ValueError("need at least one automaton")
    alphabet = automata[0].alphabet
    labels: list = []
    transitions: list = []
    initial: list[int] = []
    accepting: set[int] = set()
    offset = 0
    for i, a in enumerate(automata):
        s = buchi_set(a.acceptance)
        if s is None:
            raise AcceptanceShapeError("Buchi automata required")
        if a.alphabet != alphabet:
            raise ValueError("mixed alphabets")
        labels.extend((i, label) for label in a.labels)
        transitions.extend([tuple(q + offset for q in succs) for succs in row]
                           for row in a.transitions)
        initial.extend(q + offset for q in a.initial)
        accepting.update(q + offset for q in s)
        offset += a.num_states
    return Automaton(alphabet, labels, transitions, initial,
                     Inf(frozenset(accepting)))


def moore_quotient(automaton: Automaton,
                   keep_labels: bool = True) -> Automaton:
    """Language-preserving quotient of a deterministic automaton.

    States are merged when they carry the same acceptance-set membership
    signature and their successor blocks agree on every letter.  Merged
    states produce identical membership sequences on every word, and every
    acceptance condition here depends only on which membership bits repeat
    forever, so the quotient accepts exactly the same words.
    """
    if not automaton.deterministic:
        raise ValueError("moore_quotient requires a deterministic automaton")
    n = automaton.num_states
    leaf_sets = list(acceptance_sets(automaton.acceptance))
    trans = automaton.transitions
    letters = range(len(automaton.alphabet.letters))

    signatures = [tuple(q in s for s in leaf_sets) for q in range(n)]
    ids: dict = {}
    block = [ids.setdefault(sig, len(ids)) for sig in signatures]
    while True:
        ids = {}
        refined = [ids.setdefault(
            (block[q], tuple(block[trans[q][li][0]] for li in letters)),
            len(ids)) for q in range(n)]
        if refined == block:
            break
        block = refined

    # Renumber blocks in order of first member so output is deterministic.
    order: dict[int, int] = {}
    members: list[int] = []
    for q in range(n):
        if block[q] not in order:
            order[block[q]] = len(order)
            members.append(q)
    block = [order[b] for b in block]
    labels = ([automaton.labels[q] for q in members] if keep_labels
              else list(range(len(members))))
    transitions = [[(block[trans[q][li][0]],) for li in letters]
                   for q in members]
    acceptance = map_acceptance(
        automaton.acceptance,
        lambda s: frozenset(block[q] for q in s))
    initial = [block[next(iter(automaton.initial))]]
    return Automaton(automaton.alphabet, labels, transitions, initial,
                     acceptance)


def cobuchi_to_buchi(automaton: Automaton) -> Automaton:
    """Flip a co-Buchi automaton whose rejecting set is absorbing.

    Then "finitely often in F" equals "never enters F" equals "infinitely
    often outside F", which is a plain Buchi condition on the same states.
    """
    fin = cobuchi_set(automaton.acceptance)
    if fin is None:
        raise AcceptanceShapeError("co-Buchi condition required")
    for q in fin:
        for succs in automaton.transitions[q]:
            if any(s not in fin for s in succs):
                raise AcceptanceShapeError("rejecting set must be absorbing")
    good = frozenset(range(automaton.num_states)) - fin
    return Automaton(automaton.alphabet, automaton.labels,
                     automaton.transitions, automaton.initial, Inf(good))


def is_limit_deterministic(automaton: Automaton) -> bool:
    """Buchi automaton whose behaviour from accepting states is deterministic.

    Checks that every state reachable from an accepting state has exactly
    one successor per letter; those states then form a valid deterministic
    part containing all accepting states.
    """
    accepting = buchi_set(automaton.acceptance)
    if accepting is None:
        raise AcceptanceShapeError("plain Buchi condition required")
    pending = sorted(accepting)
    seen = set(pending)
    while pending:
        q = pending.pop()
        for succs in automaton.transitions[q]:
            if len(succs) != 1:
                return False
            s = succs[0]
            if s not in seen:
                seen.add(s)
                pending.append(s)
    return True


def universal_automaton(alphabet: Alphabet, accepting: bool = True) -> Automaton:
    """One-state deterministic automaton accepting everything (or nothing)."""
    loop = [(0,) for _ in alphabet.letters]
    acc = Inf(frozenset({0})) if accepting else Inf(frozenset())
    return Automaton(alphabet, ["all"], [loop], [0], acc)


def universal_cobuchi(alphabet: Alphabet) -> Automaton:
    """One-state co-Buchi automaton with an empty rejecting set."""
    loop = [(0,) for _ in alphabet.letters]
    return Automaton(alphabet, ["all"], [loop], [0], Fin(frozenset()))
