"""Compact builders shared across the test modules."""

from ltl2aut.words import Lasso


def word(text: str) -> tuple:
    """Decode a dot separated finite word: 'ab.-.c' -> ({a,b}, {}, {c})."""
    if not text:
        return ()
    return tuple(frozenset(ch for ch in part if ch != "-")
                 for part in text.split("."))


def lasso(prefix: str, period: str) -> Lasso:
    """Ultimately periodic word from compact text, '-' for the empty letter."""
    return Lasso(word(prefix), word(period))
