"""Parser for the concrete LTL surface syntax.

Grammar, loosest to tightest binding::

    disjunction  :=  conjunction ('|' disjunction)?
    conjunction  :=  temporal    ('&' conjunction)?
    temporal     :=  unary       (('U'|'W'|'M'|'R') temporal)?
    unary        :=  ('!'|'X'|'F'|'G') unary | primary
    primary      :=  'tt' | 'ff' | 'true' | 'false' | atom | '(' disjunction ')'

Binary operators associate to the right.  Atoms are ``[a-z][a-z0-9_]*``;
whitespace is insignificant.  ``!`` is pushed to the atoms during parsing,
so the result is always in negation normal form.
"""

from __future__ import annotations

import re

from . import formula as F
from .errors import ParseError, UnknownAtomError

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[a-z][a-z0-9_]*)|(?P<op>[A-Z])"
                       r"|(?P<sym>[!&|()]))")

_BINARY = {"U": F.until, "W": F.weak_until, "M": F.strong_release,
           "R": F.release}
_UNARY = {"X": F.next_, "F": F.eventually, "G": F.always}
_CONSTANTS = {"tt": F.tt, "true": F.tt, "ff": F.ff, "false": F.ff}


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                bad_at = len(text) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r}", bad_at)
            token = match.group("name") or match.group("op") or match.group("sym")
            self.items.append((token, match.end() - len(token)))
            pos = match.end()
        self.index = 0

    def peek(self) -> tuple[str, int] | None:
        if self.index < len(self.items):
            return self.items[self.index]
        return None

    def take(self) -> tuple[str, int] | None:
        item = self.peek()
        if item is not None:
            self.index += 1
        return item

    @property
    def end(self) -> int:
        return len(self.text)


def parse(text: str, ap: "list[str] | tuple[str, ...] | None" = None) -> F.Formula:
    """Parse ``text`` into an interned NNF formula.

    If ``ap`` is given the atom set is closed: atoms outside it raise
    ``UnknownAtomError``.
    """
    tokens = _Tokens(text)
    allowed = None if ap is None else frozenset(ap)
    result = _disjunction(tokens, allowed)
    trailing = tokens.peek()
    if trailing is not None:
        raise ParseError(f"unexpected token {trailing[0]!r}", trailing[1])
    return result


def _disjunction(tokens: _Tokens, allowed) -> F.Formula:
    left = _conjunction(tokens, allowed)
    item = tokens.peek()
    if item is not None and item[0] == "|":
        tokens.take()
        return F.disj(left, _disjunction(tokens, allowed))
    return left


def _conjunction(tokens: _Tokens, allowed) -> F.Formula:
    left = _temporal(tokens, allowed)
    item = tokens.peek()
    if item is not None and item[0] == "&":
        tokens.take()
        return F.conj(left, _conjunction(tokens, allowed))
    return left


def _temporal(tokens: _Tokens, allowed) -> F.Formula:
    left = _unary(tokens, allowed)
    item = tokens.peek()
    if item is not None and item[0] in _BINARY:
        tokens.take()
        return _BINARY[item[0]](left, _temporal(tokens, allowed))
    return left


def _unary(tokens: _Tokens, allowed) -> F.Formula:
    item = tokens.peek()
    if item is None:
        raise ParseError("missing operand", tokens.end)
    token, pos = item
    if token == "!":
        tokens.take()
        return F.negate(_unary(tokens, allowed))
    if token in _UNARY:
        tokens.take()
        return _UNARY[token](_unary(tokens, allowed))
    return _primary(tokens, allowed)


def _primary(tokens: _Tokens, allowed) -> F.Formula:
    item = tokens.take()
    if item is None:
        raise ParseError("missing operand", tokens.end)
    token, pos = item
    if token == "(":
        inner = _disjunction(tokens, allowed)
        closing = tokens.take()
        if closing is None or closing[0] != ")":
            raise ParseError("missing ')'",
                             tokens.end if closing is None else closing[1])
        return inner
    if token in _CONSTANTS:
        return _CONSTANTS[token]
    if token[0].islower():
        if allowed is not None and token not in allowed:
            raise UnknownAtomError(f"unknown atom {token!r}", pos)
        return F.atom(token)
    raise ParseError(f"unexpected token {token!r}", pos)
