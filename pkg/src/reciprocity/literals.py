"""Parsing of textual Eisenstein and Gaussian literals such as '2+3*w' or '-1-2*i'."""

from __future__ import annotations

import re

from .eisenstein import EisensteinInt
from .errors import DomainError
from .gaussian import GaussianInt


class LiteralError(DomainError):
    """A literal could not be parsed; ``position`` is the 0-based offset."""

    def __init__(self, text: str, position: int, expected: str) -> None:
        pointer = " " * position + "^"
        super().__init__(f"bad literal at position {position}: expected {expected}\n  {text}\n  {pointer}")
        self.text = text
        self.position = position


_TERM = re.compile(r"(\d+)?(\*)?([a-z])?")


def parse_pair(text: str, symbol: str) -> tuple[int, int]:
    """(a, b) for a literal a + b*symbol made of signed terms n, symbol or n*symbol."""
    a = b = 0
    pos, n = 0, len(text)
    if n == 0:
        raise LiteralError(text, 0, "a number or " + symbol)
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif pos > 0:
            raise LiteralError(text, pos, "'+' or '-'")
        m = _TERM.match(text, pos)
        digits, star, sym = m.groups()
        if not digits and not sym:
            raise LiteralError(text, pos, "a number or " + symbol)
        if sym is not None and sym != symbol:
            raise LiteralError(text, m.start(3), f"'{symbol}'")
        if star and not sym:
            raise LiteralError(text, m.end(), f"'{symbol}' after '*'")
        if digits and sym and not star:
            raise LiteralError(text, m.start(3), "'*' between coefficient and " + symbol)
        coef = sign * int(digits or 1)
        if sym:
            b += coef
        else:
            a += coef
        pos = m.end()
    return a, b


def parse_eisenstein(text: str) -> EisensteinInt:
    return EisensteinInt(*parse_pair(text, "w"))


def parse_gaussian(text: str) -> GaussianInt:
    return GaussianInt(*parse_pair(text, "i"))
