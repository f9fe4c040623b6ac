"""Differential sweeps: constructions vs the exact oracle.

A sweep runs the selected constructions over a family of (formula, lasso)
pairs, compares every acceptance verdict against ``satisfies``, collects
per-construction state statistics, and shrinks any counterexample (drop
letters first, then prune the formula) before reporting it.  Sweeps are
deterministic for a fixed config.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, asdict
from typing import Callable, Iterator

from . import formula as F
from .automata import Automaton, accepts_lasso_det, accepts_lasso_nondet
from .buchi import to_nba
from .errors import ResourceLimitError
from .formula import Formula
from .limdet import to_ldba
from .rabin import to_dra
from .semantics import satisfies
from .words import Alphabet, Lasso

CONSTRUCTIONS: dict[str, Callable] = {
    "dra": to_dra,
    "nba": to_nba,
    "ldba": to_ldba,
}


def accepts(automaton: Automaton, lasso: Lasso) -> bool:
    """Acceptance check dispatching on determinism."""
    if automaton.deterministic:
        return accepts_lasso_det(automaton, lasso)
    return accepts_lasso_nondet(automaton, lasso)


# ---------------------------------------------------------------------------
# Generators.

_LEAF_WEIGHTS = (("atom", 5), ("neg_atom", 3), ("tt", 1), ("ff", 1))
_NODE_WEIGHTS = (("and", 3), ("or", 3), ("X", 2), ("F", 2), ("G", 2),
                 ("U", 2), ("W", 2), ("M", 1), ("R", 1))
_UNARY_WEIGHTS = (("X", 2), ("F", 2), ("G", 2))


def random_formula(rng: random.Random, atoms: tuple[str, ...],
                   size: int) -> Formula:
    """A random NNF formula with at most ``size`` nodes."""
    if size <= 1:
        kind = _weighted(rng, _LEAF_WEIGHTS)
        if kind == "tt":
            return F.tt
        if kind == "ff":
            return F.ff
        name = rng.choice(atoms)
        return F.atom(name) if kind == "atom" else F.neg_atom(name)
    # A binary node needs room for two children; at size 2 only unary fits.
    kind = _weighted(rng, _NODE_WEIGHTS if size > 2 else _UNARY_WEIGHTS)
    if kind in ("X", "F", "G"):
        sub = random_formula(rng, atoms, size - 1)
        return {"X": F.next_, "F": F.eventually, "G": F.always}[kind](sub)
    left_size = rng.randint(1, size - 2)
    left = random_formula(rng, atoms, left_size)
    right = random_formula(rng, atoms, size - 1 - left_size)
    build = {"and": F.conj, "or": F.disj, "U": F.until, "W": F.weak_until,
             "M": F.strong_release, "R": F.release}[kind]
    return build(left, right)


def _weighted(rng: random.Random, table) -> str:
    total = sum(w for _, w in table)
    pick = rng.randrange(total)
    for kind, weight in table:
        if pick < weight:
            return kind
        pick -= weight
    raise AssertionError


def random_lasso(rng: random.Random, alphabet: Alphabet, max_prefix: int,
                 max_period: int) -> Lasso:
    prefix = tuple(rng.choice(alphabet.letters)
                   for _ in range(rng.randint(0, max_prefix)))
    period = tuple(rng.choice(alphabet.letters)
                   for _ in range(rng.randint(1, max_period)))
    return Lasso(prefix, period)


def enumerate_formulas(atoms: tuple[str, ...], depth: int) -> list[Formula]:
    """All NNF formulas up to the given syntax depth (leaves have depth 1).

    Duplicates collapsed by the identity-collapsing constructors are
    enumerated once.
    """
    leaves: list[Formula] = [F.tt, F.ff]
    for name in atoms:
        leaves += [F.atom(name), F.neg_atom(name)]
    layers = [leaves]
    unary = (F.next_, F.eventually, F.always)
    binary = (F.conj, F.disj, F.until, F.weak_until, F.strong_release,
              F.release)
    for _ in range(depth - 1):
        below = [f for layer in layers for f in layer]
        fresh: list[Formula] = []
        seen = set(below)
        for build in unary:
            for sub in below:
                out = build(sub)
                if out not in seen:
                    seen.add(out)
                    fresh.append(out)
        for build in binary:
            for left in below:
                for right in below:
                    out = build(left, right)
                    if out not in seen:
                        seen.add(out)
                        fresh.append(out)
        layers.append(fresh)
    return [f for layer in layers for f in layer]


def enumerate_lassos(alphabet: Alphabet, max_prefix: int,
                     max_period: int) -> list[Lasso]:
    """All lassos with |prefix| <= max_prefix, 1 <= |period| <= max_period."""
    words: dict[int, list[tuple]] = {0: [()]}
    for n in range(1, max(max_prefix, max_period) + 1):
        words[n] = [w + (l,) for w in words[n - 1] for l in alphabet.letters]
    out = []
    for pn in range(max_prefix + 1):
        for vn in range(1, max_period + 1):
            out += [Lasso(u, v) for u in words[pn] for v in words[vn]]
    return out


# ---------------------------------------------------------------------------
# Shrinking.

def _formula_prunings(phi: Formula) -> Iterator[Formula]:
    yield F.tt
    yield F.ff
    for child in phi.children:
        yield child
    for i, child in enumerate(phi.children):
        for pruned in _formula_prunings(child):
            if pruned is child:
                continue
            parts = list(phi.children)
            parts[i] = pruned
            rebuild = {F.AND: F.conj, F.OR: F.disj, F.NEXT: F.next_,
                       F.EVENTUALLY: F.eventually, F.ALWAYS: F.always,
                       F.UNTIL: F.until, F.WEAK_UNTIL: F.weak_until,
                       F.STRONG_RELEASE: F.strong_release,
                       F.RELEASE: F.release}[phi.kind]
            yield rebuild(*parts)


def shrink(phi: Formula, lasso: Lasso,
           failing: Callable[[Formula, Lasso], bool]) -> tuple[Formula, Lasso]:
    """Greedy shrink keeping ``failing`` true: letters first, then formula."""
    changed = True
    while changed:
        changed = False
        for i in range(len(lasso.prefix)):
            candidate = Lasso(lasso.prefix[:i] + lasso.prefix[i + 1:],
                              lasso.period)
            if failing(phi, candidate):
                lasso = candidate
                changed = True
                break
        if changed:
            continue
        if len(lasso.period) > 1:
            for i in range(len(lasso.period)):
                candidate = Lasso(lasso.prefix,
                                  lasso.period[:i] + lasso.period[i + 1:])
                if failing(phi, candidate):
                    lasso = candidate
                    changed = True
                    break
        if changed:
            continue
        # Strictly smaller candidates only, so greedy passes terminate
        # even when failing holds on same-size rewrites.
        size = F.formula_size(phi)
        for candidate in _formula_prunings(phi):
            if F.formula_size(candidate) < size and failing(candidate, lasso):
                phi = candidate
                changed = True
                break
    return phi, lasso


# ---------------------------------------------------------------------------
# Sweep driver.

@dataclass(frozen=True)
class SweepConfig:
    mode: str = "random"  # "random" or "exhaustive"
    seed: int = 0
    formulas: int = 100
    lassos_per_formula: int = 10
    atoms: tuple[str, ...] = ("a", "b", "c")
    max_formula_size: int = 15
    max_advice_subformulas: int = 6
    max_prefix: int = 6
    max_period: int = 6
    exhaustive_depth: int = 2
    exhaustive_prefix: int = 2
    exhaustive_period: int = 2
    constructions: tuple[str, ...] = ("dra", "nba", "ldba")
    # Budget per construction in random mode; formulas whose product blows
    # past it are counted as skipped, never silently dropped.  The Rabin
    # product is doubly exponential in the worst case, so a small fraction
    # of random formulas is genuinely out of reach at any fixed budget.
    max_states: int = 10 ** 5


@dataclass
class Discrepancy:
    construction: str
    formula: str
    lasso: str
    expected: bool
    got: bool


@dataclass
class SweepReport:
    config: SweepConfig
    pairs_checked: int = 0
    formulas_checked: int = 0
    formulas_skipped: int = 0
    discrepancies: list = field(default_factory=list)
    state_stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "pairs_checked": self.pairs_checked,
            "formulas_checked": self.formulas_checked,
            "formulas_skipped": self.formulas_skipped,
            "ok": self.ok,
            "discrepancies": [asdict(d) for d in self.discrepancies],
            "state_stats": self.state_stats,
        }

    def to_text(self) -> str:
        lines = [f"sweep mode={self.config.mode} seed={self.config.seed}",
                 f"formulas: {self.formulas_checked}"
                 + (f" (+{self.formulas_skipped} skipped at the state budget)"
                    if self.formulas_skipped else ""),
                 f"pairs: {self.pairs_checked}"]
        for name, stats in sorted(self.state_stats.items()):
            lines.append(f"{name}: states min={stats['min']} "
                         f"max={stats['max']} mean={stats['mean']:.1f}")
        if self.ok:
            lines.append("result: ok")
        else:
            lines.append(f"result: {len(self.discrepancies)} discrepancies")
            for d in self.discrepancies:
                lines.append(f"  {d.construction}: {d.formula} on {d.lasso} "
                             f"expected={d.expected} got={d.got}")
        return "\n".join(lines)


def _draw_formula(rng: random.Random, config: SweepConfig) -> Formula:
    while True:
        phi = random_formula(rng, config.atoms, config.max_formula_size)
        advice_atoms = (len(F.lfp_subformulas(phi)) +
                        len(F.gfp_subformulas(phi)))
        if advice_atoms <= config.max_advice_subformulas:
            return phi


def differential_sweep(config: SweepConfig) -> SweepReport:
    """Run the configured constructions against the oracle.

    Random mode draws formulas from the seeded stream until the requested
    number has been fully checked; formulas whose construction exceeds the
    state budget are counted in ``formulas_skipped``.  Exhaustive mode
    enumerates the whole family and never skips.
    """
    alphabet = Alphabet(config.atoms)
    report = SweepReport(config)
    counts: dict[str, list[int]] = {name: [] for name in config.constructions}

    def check(phi: Formula, lassos) -> None:
        automata = {}
        for name in config.constructions:
            automata[name] = CONSTRUCTIONS[name](phi, ap=alphabet.atoms,
                                                 max_states=config.max_states)
        report.formulas_checked += 1
        for name, automaton in automata.items():
            counts[name].append(automaton.num_states)
        for lasso in lassos:
            report.pairs_checked += 1
            expected = satisfies(lasso, phi)
            for name, automaton in automata.items():
                got = accepts(automaton, lasso)
                if got != expected:
                    report.discrepancies.append(
                        _shrunk(name, phi, lasso, alphabet,
                                config.max_states))

    if config.mode == "exhaustive":
        lassos = enumerate_lassos(alphabet, config.exhaustive_prefix,
                                  config.exhaustive_period)
        for phi in enumerate_formulas(config.atoms, config.exhaustive_depth):
            check(phi, lassos)
    elif config.mode == "random":
        rng = random.Random(config.seed)
        while report.formulas_checked < config.formulas:
            phi = _draw_formula(rng, config)
            lassos = [random_lasso(rng, alphabet, config.max_prefix,
                                   config.max_period)
                      for _ in range(config.lassos_per_formula)]
            try:
                check(phi, lassos)
            except ResourceLimitError:
                report.formulas_skipped += 1
    else:
        raise ValueError(f"unknown sweep mode {config.mode!r}")

    for name, values in counts.items():
        if values:
            report.state_stats[name] = {
                "min": min(values), "max": max(values),
                "mean": sum(values) / len(values), "count": len(values)}
    return report


def _shrunk(name: str, phi: Formula, lasso: Lasso, alphabet: Alphabet,
            max_states: int = 10 ** 5) -> Discrepancy:
    def failing(f: Formula, w: Lasso) -> bool:
        try:
            automaton = CONSTRUCTIONS[name](f, ap=alphabet.atoms,
                                            max_states=max_states)
            return accepts(automaton, w) != satisfies(w, f)
        except Exception:
            return False

    small_phi, small_lasso = shrink(phi, lasso, failing)
    expected = satisfies(small_lasso, small_phi)
    return Discrepancy(name, str(small_phi), str(small_lasso), expected,
                       not expected)
