"""Number-literal grammar, expression evaluation, and formatting.

Literal grammar (used by the CLI and test fixtures):

    number   := term (("+"|"-") term)*
    term     := coeff | coeff "t" ("^" exponent)? | "t" ("^" exponent)?
    coeff    := integer ("/" integer)?
    exponent := ("-")? integer ("/" integer)?

e.g. ``1 - t^2 + 2t``, ``t^-1``, ``3/2 + 5t^1/2``.  For exact values
``parse_number(format_number(x)) == x``.  Two extensions round out the
surface: a trailing ``O(t^q)`` marks a truncation order, and
`parse_expression` additionally understands ``*``, ``/`` and parentheses.

``3/2`` lexes as one rational, so ``1/2t`` is (1/2)*t, not 1/(2t).
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import lcf
from .errors import ParseError
from .intervals import Interval
from .lcf import DEFAULT_ORDER, INFINITE_ORDER, LeviCivitaNumber

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<name>[tO])
  | (?P<op>[\^+\-*/(),])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, order, precision: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.order = order
        self.precision = precision

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def next(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, value: str) -> None:
        kind, text, pos = self.next()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self) -> LeviCivitaNumber:
        value = self.expression()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {text!r}", pos)
        return value

    # expression := product (("+"|"-") product)*
    def expression(self) -> LeviCivitaNumber:
        value = self.product()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    # product := factor (("*"|"/") factor)*
    def product(self) -> LeviCivitaNumber:
        value = self.factor()
        while self.peek()[1] in ("*", "/"):
            op, _, pos = self.next()[1], None, self.peek()[2]
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value * lcf.inverse(rhs, self.order)
                except Exception as exc:
                    raise ParseError(f"cannot divide: {exc}", pos) from None
        return value

    # factor := ("-")* atom
    def factor(self) -> LeviCivitaNumber:
        if self.peek()[1] == "-":
            self.next()
            return -self.factor()
        if self.peek()[1] == "+":
            self.next()
            return self.factor()
        return self.atom()

    def atom(self) -> LeviCivitaNumber:
        kind, text, pos = self.next()
        if text == "(":
            value = self.expression()
            self.expect(")")
            return value
        if kind == "rational":
            coeff = self._fraction(text, pos)
            if self.peek()[1] == "t":
                self.next()
                return lcf.monomial(coeff, self._optional_exponent())
            return lcf.from_rational(coeff)
        if text == "t":
            return lcf.monomial(1, self._optional_exponent())
        if text == "O":
            self.expect("(")
            tok = self.next()
            if tok[1] == "t":
                exponent = self._optional_exponent()
            elif tok[0] == "rational" and Fraction(tok[1]) == 1:
                exponent = Fraction(0)  # O(1)
            else:
                raise ParseError("expected t or 1 inside O(...)", tok[2])
            self.expect(")")
            return lcf.zero(exponent)
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)

    def _optional_exponent(self) -> Fraction:
        if self.peek()[1] != "^":
            return Fraction(1)
        self.next()
        negate = False
        if self.peek()[1] == "-":
            self.next()
            negate = True
        kind, text, pos = self.next()
        if kind != "rational":
            raise ParseError("expected a rational exponent after ^", pos)
        value = self._fraction(text, pos)
        return -value if negate else value

    @staticmethod
    def _fraction(text: str, pos: int) -> Fraction:
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ParseError("zero denominator in rational literal", pos) from None


def parse_number(
    text: str, order=INFINITE_ORDER, precision: int = lcf.DEFAULT_PRECISION
) -> LeviCivitaNumber:
    """Parse a number literal (the full expression grammar is accepted)."""
    return _Parser(text, order, precision).parse()


def parse_expression(
    text: str, order=DEFAULT_ORDER, precision: int = lcf.DEFAULT_PRECISION
) -> LeviCivitaNumber:
    """Parse and evaluate an arithmetic expression; ``/`` inverts at `order`."""
    return _Parser(text, order, precision).parse()


def parse_point(
    text: str, order=INFINITE_ORDER, precision: int = lcf.DEFAULT_PRECISION
) -> tuple[LeviCivitaNumber, ...]:
    """Parse ``(EXPR, EXPR)`` (or a bare EXPR for one-dimensional spaces)."""
    stripped = text.strip()
    if not stripped.startswith("("):
        return (parse_number(stripped, order, precision),)
    tokens = _tokenize(stripped)
    depth = 0
    splits = []
    for kind, tok, pos in tokens:
        if tok == "(":
            depth += 1
        elif tok == ")":
            depth -= 1
            if depth == 0:
                end = pos
        elif tok == "," and depth == 1:
            splits.append(pos)
    if depth != 0:
        raise ParseError("unbalanced parentheses in point", len(stripped) - 1)
    inner_start = stripped.index("(") + 1
    pieces = []
    start = inner_start
    for split in splits:
        pieces.append(stripped[start:split])
        start = split + 1
    pieces.append(stripped[start:end])
    if any(not piece.strip() for piece in pieces):
        raise ParseError("empty coordinate in point", start)
    return tuple(parse_number(piece, order, precision) for piece in pieces)


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def _format_fraction(q: Fraction) -> str:
    return str(q)


def _format_t_power(exponent: Fraction) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return "t"
    return f"t^{exponent}"


def _format_term(exponent: Fraction, coeff: Interval) -> str:
    tpart = _format_t_power(exponent)
    if coeff.is_exact:
        c = coeff.lo
        if not tpart:
            return _format_fraction(c)
        if c == 1:
            return tpart
        if c == -1:
            return f"-{tpart}"
        return f"{_format_fraction(c)}{tpart}"
    approx = f"~{float(coeff.midpoint):.17g}"
    return f"{approx}{tpart}" if tpart else approx


def format_number(x: LeviCivitaNumber) -> str:
    """Canonical display; inverse of `parse_number` on exact values."""
    parts = []
    for exponent, coeff in x.terms:
        rendered = _format_term(exponent, coeff)
        if not parts:
            parts.append(rendered)
        elif rendered.startswith("-"):
            parts.append(f" - {rendered[1:]}")
        else:
            parts.append(f" + {rendered}")
    if x.order is not INFINITE_ORDER:
        tail = f"O({_format_t_power(x.order) or '1'})"
        parts.append(f" + {tail}" if parts else tail)
    if not parts:
        return "0"
    return "".join(parts)


def format_point(coords) -> str:
    return "(" + ", ".join(format_number(c) for c in coords) + ")"


def number_to_json(x: LeviCivitaNumber):
    """JSON value: a grammar string for exact numbers, else a structured dict."""
    if x.is_exact:
        return format_number(x)
    return {
        "terms": [
            {
                "exponent": str(q),
                "lo": str(c.lo),
                "hi": str(c.hi),
                "approx": float(c.midpoint),
            }
            for q, c in x.terms
        ],
        "order": None if x.order is INFINITE_ORDER else str(x.order),
        "display": format_number(x),
    }
