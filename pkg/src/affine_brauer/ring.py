"""Exact polynomial arithmetic over Z[d0, d1, d2, ...].

Elements are sparse maps ``monomial -> int``. A monomial is a sorted tuple of
``(index, exponent)`` pairs with positive exponents, so ``d0^2*d3`` is
``((0, 2), (3, 1))`` and the constant monomial is ``()``.  Only the variables
actually touched are ever stored.

Text form::

    3*d0^2*d1 + d2 - 1

Terms print in canonical order: higher total degree first, ties broken by
ascending lexicographic order of the ``(index, exponent)`` pairs.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

Monomial = tuple[tuple[int, int], ...]

__all__ = [
    "Monomial",
    "RingElem",
    "RingParseError",
    "MissingVariableError",
    "ring_add",
    "ring_mul",
    "ring_eval",
    "delta",
    "ZERO",
    "ONE",
]


class RingParseError(ValueError):
    """Malformed polynomial text; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


class MissingVariableError(KeyError):
    pass


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m: Monomial):
    return (-sum(e for _, e in m), m)


class RingElem:
    """Immutable element of Z[d0, d1, ...]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c == 0:
                    continue
                mono = tuple(sorted((int(i), int(e)) for i, e in mono if e != 0))
                if any(i < 0 or e < 0 for i, e in mono):
                    raise ValueError(f"bad monomial {mono!r}")
                c = clean.get(mono, 0) + int(c)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> RingElem:
        # caller guarantees canonical monomials and no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> RingElem:
        return cls._raw({(): int(c)} if c else {})

    @classmethod
    def var(cls, index: int, power: int = 1) -> RingElem:
        if index < 0 or power < 0:
            raise ValueError("variable index and power must be nonnegative")
        return cls._raw({((index, power),) if power else (): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def variables(self) -> set[int]:
        return {i for mono in self._terms for i, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RingElem.const(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> RingElem:
        if isinstance(x, RingElem):
            return x
        if isinstance(x, int):
            return RingElem.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            c = out.get(m, 0) + c
            if c:
                out[m] = c
            else:
                del out[m]
        return RingElem._raw(out)

    __radd__ = __add__

    def __neg__(self) -> RingElem:
        return RingElem._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                c = out.get(m, 0) + ca * cb
                if c:
                    out[m] = c
                else:
                    del out[m]
        return RingElem._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> RingElem:
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, assignment: Mapping[int, int]) -> int:
        total = 0
        for mono, c in self._terms.items():
            v = c
            for i, e in mono:
                try:
                    v *= assignment[i] ** e
                except KeyError:
                    raise MissingVariableError(f"no value for d{i}") from None
            total += v
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (mono, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [f"d{i}" if e == 1 else f"d{i}^{e}" for i, e in mono]
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(a)] + factors)
            if idx == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"RingElem({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> RingElem:
        return _Parser(text).parse()


ZERO = RingElem._raw({})
ONE = RingElem._raw({(): 1})


def delta(i: int, power: int = 1) -> RingElem:
    """The generator ``d<i>`` raised to ``power``."""
    return RingElem.var(i, power)


def ring_add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def ring_eval(p: RingElem, assignment: Mapping[int, int]) -> int:
    return p.evaluate(assignment)


def ring_sum(items: Iterable[RingElem]) -> RingElem:
    out: dict[Monomial, int] = {}
    for r in items:
        for m, c in r._terms.items():
            c = out.get(m, 0) + c
            if c:
                out[m] = c
            else:
                del out[m]
    return RingElem._raw(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>d(?P<idx>\d+))|(?P<op>[-+*^()]))")


class _Parser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``.

    A term is a ``*``-separated product of integers, variables with optional
    ``^`` exponent, and parenthesised expressions.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise RingParseError("unexpected character", text, col)
            start = m.start(m.lastgroup if m.lastgroup != "idx" else "var") + 1
            if m.group("int") is not None:
                self.tokens.append(("int", m.group("int"), start))
            elif m.group("var") is not None:
                self.tokens.append(("var", m.group("idx"), start))
            else:
                self.tokens.append(("op", m.group("op"), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, msg: str):
        tok = self.peek()
        col = tok[2] if tok else len(self.text) + 1
        raise RingParseError(msg, self.text, col)

    def take_op(self, op: str) -> bool:
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == op:
            self.i += 1
            return True
        return False

    def parse(self) -> RingElem:
        if not self.tokens:
            self.error("empty expression")
        value = self.expr()
        if self.peek() is not None:
            self.error("trailing input")
        return value

    def expr(self) -> RingElem:
        if self.take_op("-"):
            value = -self.term()
        else:
            self.take_op("+")
            value = self.term()
        while True:
            if self.take_op("+"):
                value = value + self.term()
            elif self.take_op("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> RingElem:
        value = self.factor()
        while self.take_op("*"):
            value = value * self.factor()
        return value

    def factor(self) -> RingElem:
        tok = self.peek()
        if tok is None:
            self.error("expected a factor")
        kind, val, _ = tok
        if kind == "int":
            self.i += 1
            base = RingElem.const(int(val))
        elif kind == "var":
            self.i += 1
            base = RingElem.var(int(val))
        elif self.take_op("("):
            base = self.expr()
            if not self.take_op(")"):
                self.error("expected ')'")
        else:
            self.error("expected a factor")
        if self.take_op("^"):
            tok = self.peek()
            if tok is None or tok[0] != "int":
                self.error("expected an exponent")
            self.i += 1
            base = base ** int(tok[1])
        return base
