"""Serialization to the Hanoi Omega-Automata (HOA) v1 text format.

State-based acceptance only.  Every (letter, successor) edge is written on
its own line with an explicit minterm label such as ``[0&!1]``; with no
atomic propositions the single letter is labelled ``[t]``.  The writer
recognises Buchi, co-Buchi, and Rabin shapes and names them in the
``acc-name`` header; other acceptance trees are emitted without one.
"""

from __future__ import annotations

from .automata import (AccAnd, AccOr, Automaton, Fin, Inf, buchi_set,
                       cobuchi_set, rabin_pairs)


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _minterm(automaton: Automaton, letter_index: int) -> str:
    atoms = automaton.alphabet.atoms
    if not atoms:
        return "[t]"
    letter = automaton.alphabet.letters[letter_index]
    terms = [str(i) if atom in letter else f"!{i}"
             for i, atom in enumerate(atoms)]
    return "[" + "&".join(terms) + "]"


def write_hoa(automaton: Automaton, name: "str | None" = None) -> str:
    """Render the automaton as a HOA v1 document."""
    payload, acc_name, sets = _acceptance_parts(automaton.acceptance)
    lines = ["HOA: v1"]
    if name is not None:
        lines.append(f'name: "{_escape(name)}"')
    lines.append(f"States: {automaton.num_states}")
    for q in sorted(automaton.initial):
        lines.append(f"Start: {q}")
    atoms = automaton.alphabet.atoms
    ap = " ".join(f'"{_escape(a)}"' for a in atoms)
    lines.append(f"AP: {len(atoms)}" + (f" {ap}" if atoms else ""))
    if acc_name is not None:
        lines.append(f"acc-name: {acc_name}")
    lines.append(f"Acceptance: {payload}")
    props = ["trans-labels", "explicit-labels", "state-acc"]
    if automaton.deterministic:
        props.append("deterministic")
    lines.append("properties: " + " ".join(props))
    lines.append("--BODY--")
    for q in range(automaton.num_states):
        membership = [str(i) for i, s in enumerate(sets) if q in s]
        sig = " {" + " ".join(membership) + "}" if membership else ""
        lines.append(f"State: {q}{sig}")
        for li in range(len(automaton.alphabet.letters)):
            label = _minterm(automaton, li)
            for succ in automaton.transitions[q][li]:
                lines.append(f"{label} {succ}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


def _acceptance_parts(acc) -> tuple[str, "str | None", list[frozenset]]:
    """(Acceptance payload, acc-name payload, acceptance sets by index)."""
    pairs = rabin_pairs(acc)
    if pairs is not None:
        sets: list[frozenset] = []
        terms = []
        for fin, inf in pairs:
            terms.append(f"(Fin({len(sets)})&Inf({len(sets) + 1}))")
            sets.append(fin)
            sets.append(inf)
        return (f"{len(sets)} " + " | ".join(terms),
                f"Rabin {len(pairs)}", sets)
    inf = buchi_set(acc)
    if inf is not None:
        return "1 Inf(0)", "Buchi", [inf]
    fin = cobuchi_set(acc)
    if fin is not None:
        return "1 Fin(0)", "co-Buchi", [fin]
    sets = []

    def walk(node) -> str:
        if isinstance(node, (Inf, Fin)):
            sets.append(node.states)
            tag = "Inf" if isinstance(node, Inf) else "Fin"
            return f"{tag}({len(sets) - 1})"
        glue = "&" if isinstance(node, AccAnd) else "|"
        return "(" + glue.join(walk(p) for p in node.parts) + ")"

    body = walk(acc)
    return f"{len(sets)} {body}", None, sets
