"""Alphabets, letters and ultimately periodic (lasso) words.

A letter is a ``frozenset`` of atom names: the atoms true at that instant.
An ``Alphabet`` fixes a finite ordered atom set and enumerates all letters
in a deterministic order (subset bitmask order, bit i = i-th atom).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import formula as F

Letter = frozenset


def letter(*names: str) -> Letter:
    return frozenset(names)


class Alphabet:
    """A fixed, ordered atom set with its 2^k letters."""

    __slots__ = ("atoms", "letters", "_index")

    def __init__(self, atoms: Iterable[str]):
        seq = tuple(atoms)
        if len(set(seq)) != len(seq):
            raise ValueError(f"duplicate atoms: {seq}")
        self.atoms: tuple[str, ...] = seq
        self.letters: tuple[Letter, ...] = tuple(
            frozenset(seq[i] for i in range(len(seq)) if mask >> i & 1)
            for mask in range(1 << len(seq)))
        self._index: dict[Letter, int] = {l: i for i, l in enumerate(self.letters)}

    @classmethod
    def for_formula(cls, phi: F.Formula,
                    ap: Iterable[str] | None = None) -> "Alphabet":
        """Declared atoms in given order, or the formula's atoms sorted."""
        if ap is not None:
            alphabet = cls(ap)
            missing = F.atoms(phi) - set(alphabet.atoms)
            if missing:
                raise ValueError(f"formula uses atoms outside the declared "
                                 f"alphabet: {sorted(missing)}")
            return alphabet
        return cls(sorted(F.atoms(phi)))

    def index(self, letter: Letter) -> int:
        found = self._index.get(letter)
        if found is None:
            raise ValueError(f"letter {set(letter) or '{}'} is not over "
                             f"atoms {self.atoms}")
        return found

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.atoms)})"


def _fmt_letter(letter: Letter) -> str:
    return "{" + ",".join(sorted(letter)) + "}"


@dataclass(frozen=True)
class Lasso:
    """An ultimately periodic word ``prefix . period^omega``."""

    prefix: tuple[Letter, ...]
    period: tuple[Letter, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("lasso period must be non-empty")
        for l in self.prefix + self.period:
            if not isinstance(l, frozenset):
                raise TypeError(f"letters must be frozensets, got {l!r}")

    @property
    def positions(self) -> int:
        """Number of distinct positions in the folded representation."""
        return len(self.prefix) + len(self.period)

    @property
    def loop_start(self) -> int:
        return len(self.prefix)

    def position_of(self, i: int) -> int:
        """Fold an absolute position into the prefix+period representation."""
        if i < self.positions:
            return i
        return self.loop_start + (i - self.loop_start) % len(self.period)

    def letter_at(self, i: int) -> Letter:
        j = self.position_of(i)
        if j < self.loop_start:
            return self.prefix[j]
        return self.period[j - self.loop_start]

    def suffix(self, k: int = 1) -> "Lasso":
        """The word with the first ``k`` letters dropped."""
        out = self
        for _ in range(k):
            if out.prefix:
                out = Lasso(out.prefix[1:], out.period)
            else:
                out = Lasso((), out.period[1:] + out.period[:1])
        return out

    def prepended(self, word: tuple[Letter, ...]) -> "Lasso":
        return Lasso(tuple(word) + self.prefix, self.period)

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*self.prefix, *self.period)

    def __str__(self) -> str:
        head = "".join(_fmt_letter(l) for l in self.prefix)
        cycle = "".join(_fmt_letter(l) for l in self.period)
        return f"{head}({cycle})^w"
