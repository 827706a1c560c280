"""The affine Brauer algebra over Z[d0, d1, ...] and its classical specialization.

Products stack the left factor above the right one.  Each closed loop with
accumulated label ``l`` contributes a factor ``d|l|``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

from .concat import DimensionMismatchError, concatenate, loops_coefficient
from .diagram import ColoredDiagram, DiagramError, flip, from_ordinal_strands, identity
from .ring import ONE, RingElem, delta, ring_sum

__all__ = [
    "AlgebraElement",
    "GeneratorName",
    "GeneratorError",
    "WordParseError",
    "NonzeroLabelError",
    "RelationResult",
    "RELATION_IDS",
    "multiply",
    "generator",
    "evaluate_word",
    "parse_word",
    "involution_i",
    "check_relations",
    "classical_multiply",
    "CLASSICAL_DELTA",
]

CLASSICAL_DELTA = delta(0)


class GeneratorError(DiagramError):
    pass


class NonzeroLabelError(DiagramError):
    pass


class WordParseError(ValueError):
    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.column = column


class AlgebraElement:
    """Finite linear combination of colored diagrams, all with the same ``n``."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[ColoredDiagram, RingElem] | None = None):
        self.n = n
        clean = {}
        for d, c in (terms or {}).items():
            if d.n != n:
                raise DimensionMismatchError(f"diagram with n={d.n} in element with n={n}")
            if isinstance(c, int):
                c = RingElem.const(c)
            if c:
                clean[d] = c
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> AlgebraElement:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, d: ColoredDiagram, coeff: RingElem | int = 1) -> AlgebraElement:
        return cls(d.n, {d: coeff})

    @classmethod
    def one(cls, n: int) -> AlgebraElement:
        return cls._raw(n, {identity(n): ONE})

    @classmethod
    def zero(cls, n: int) -> AlgebraElement:
        return cls._raw(n, {})

    @property
    def terms(self) -> dict[ColoredDiagram, RingElem]:
        return dict(self._terms)

    def items(self) -> list[tuple[ColoredDiagram, RingElem]]:
        """Terms in canonical diagram order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def support(self) -> list[ColoredDiagram]:
        return [d for d, _ in self.items()]

    def coefficient(self, d: ColoredDiagram) -> RingElem:
        return self._terms.get(d, RingElem())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: AlgebraElement):
        if self.n != other.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            c = out[d] + c if d in out else c
            if c:
                out[d] = c
            else:
                out.pop(d, None)
        return AlgebraElement._raw(self.n, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._raw(self.n, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, r: RingElem | int) -> AlgebraElement:
        if isinstance(r, int):
            r = RingElem.const(r)
        if not r:
            return AlgebraElement.zero(self.n)
        return AlgebraElement._raw(self.n, {d: c * r for d, c in self._terms.items() if c * r})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, c in self.items():
            if c == 1:
                parts.append(str(d))
            elif len(c.terms) == 1:
                parts.append(f"{c} * {d}")
            else:
                parts.append(f"({c}) * {d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<AlgebraElement n={self.n} {self}>"

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"coeff": str(c), "diagram": d.to_json()} for d, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> AlgebraElement:
        n = int(obj["n"])
        out = AlgebraElement.zero(n)
        for t in obj["terms"]:
            d = ColoredDiagram.from_json(t["diagram"])
            out = out + AlgebraElement.basis(d, RingElem.parse(str(t["coeff"])))
        return out


def multiply_diagrams(x: ColoredDiagram, y: ColoredDiagram) -> tuple[RingElem, ColoredDiagram]:
    z, loops = concatenate(x, y)
    return (loops_coefficient(loops) if loops else ONE), z


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise DimensionMismatchError(f"cannot multiply n={a.n} by n={b.n}")
    acc: dict[ColoredDiagram, list[RingElem]] = {}
    for x, cx in a._terms.items():
        for y, cy in b._terms.items():
            coeff, z = multiply_diagrams(x, y)
            acc.setdefault(z, []).append(cx * cy * coeff)
    out = {}
    for z, parts in acc.items():
        c = parts[0] if len(parts) == 1 else ring_sum(parts)
        if c:
            out[z] = c
    return AlgebraElement._raw(a.n, out)


class GeneratorName(NamedTuple):
    kind: str  # "s", "e" or "t"
    index: int
    power: int = 1

    def __str__(self) -> str:
        if self.kind == "t" and self.power != 1:
            return f"t{self.index}^{self.power}"
        return f"{self.kind}{self.index}"


def generator(g: GeneratorName, n: int) -> AlgebraElement:
    kind, i, p = g
    if kind in ("s", "e"):
        if not 1 <= i <= n - 1:
            raise GeneratorError(f"{kind}{i} needs 1 <= i <= n-1 (n={n})")
        if p != 1:
            raise GeneratorError(f"{kind}{i} takes no power")
    elif kind == "t":
        if not 1 <= i <= n:
            raise GeneratorError(f"t{i} needs 1 <= j <= n (n={n})")
    else:
        raise GeneratorError(f"unknown generator kind {kind!r}")
    top = lambda k: k - 1  # noqa: E731
    bot = lambda k: 2 * n - k  # noqa: E731
    strands = []
    for k in range(1, n + 1):
        if kind in ("s", "e") and k in (i, i + 1):
            continue
        lab = p if kind == "t" and k == i else 0
        strands.append((top(k), bot(k), lab))
    if kind == "s":
        strands += [(top(i), bot(i + 1), 0), (top(i + 1), bot(i), 0)]
    elif kind == "e":
        strands += [(top(i), top(i + 1), 0), (bot(i), bot(i + 1), 0)]
    return AlgebraElement.basis(from_ordinal_strands(n, strands))


_WORD_TOKEN = re.compile(r"([set])(\d+)(?:\^(-?\d+))?")


def parse_word(text: str) -> list[GeneratorName]:
    """Parse ``s1 s2 e1 t3^-2 t1``; powers are allowed on ``t`` only."""
    word = []
    for m in re.finditer(r"\S+", text):
        tok = _WORD_TOKEN.fullmatch(m.group())
        if not tok:
            raise WordParseError(f"bad generator {m.group()!r}", text, m.start() + 1)
        kind, idx, power = tok.group(1), int(tok.group(2)), tok.group(3)
        if power is not None and kind != "t":
            raise WordParseError(f"only t takes a power, got {m.group()!r}", text, m.start() + 1)
        word.append(GeneratorName(kind, idx, int(power) if power is not None else 1))
    return word


def evaluate_word(word: Iterable[GeneratorName] | str, n: int) -> AlgebraElement:
    if isinstance(word, str):
        word = parse_word(word)
    out = AlgebraElement.one(n)
    for g in word:
        out = multiply(out, generator(g, n))
    return out


def involution_i(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement._raw(a.n, {flip(d): c for d, c in a._terms.items()})


class RelationResult(NamedTuple):
    relation: str
    instance: str
    passed: bool


RELATION_IDS = tuple("abcdefghijklmno")


def _relation_instances(n: int, a_max: int) -> Iterator[tuple[str, str, str, str, RingElem]]:
    """Yield ``(id, instance, lhs word, rhs word, rhs scalar)``."""
    S = range(1, n)  # valid s_i / e_i indices
    T = range(1, n + 1)
    for i in S:
        yield "a", f"i={i}", f"s{i} s{i}", "", ONE
    for i in S:
        for j in S:
            if abs(i - j) > 1:
                yield "b", f"i={i},j={j}", f"s{i} s{j}", f"s{j} s{i}", ONE
    for i in S:
        if i < n - 1:
            yield "c", f"i={i}", f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}", ONE
    for i in S:
        for j in T:
            if j not in (i, i + 1):
                yield "d", f"i={i},j={j}", f"s{i} t{j}", f"t{j} s{i}", ONE
    for i in S:
        for j in S:
            if abs(i - j) > 1:
                yield "e", f"i={i},j={j}", f"s{i} e{j}", f"e{j} s{i}", ONE
    for i in S:
        for j in S:
            if abs(i - j) > 1:
                yield "f", f"i={i},j={j}", f"e{i} e{j}", f"e{j} e{i}", ONE
    for i in S:
        for j in T:
            if j not in (i, i + 1):
                yield "g", f"i={i},j={j}", f"e{i} t{j}", f"t{j} e{i}", ONE
    for i in T:
        for j in T:
            yield "h", f"i={i},j={j}", f"t{i} t{j}", f"t{j} t{i}", ONE
    for i in S:
        yield "i", f"i={i}", f"s{i} t{i}", f"t{i+1} s{i}", ONE
    for i in S:
        yield "j", f"i={i},left", f"e{i} s{i}", f"e{i}", ONE
        yield "j", f"i={i},right", f"s{i} e{i}", f"e{i}", ONE
    for i in range(1, n - 1):
        yield "k", f"i={i}", f"s{i} e{i+1} e{i}", f"s{i+1} e{i}", ONE
    for i in range(1, n - 1):
        yield "l", f"i={i}", f"e{i+1} e{i} s{i+1}", f"e{i+1} s{i}", ONE
    for i in S:
        for j in S:
            if abs(i - j) == 1:
                yield "m", f"i={i},j={j}", f"e{i} e{j} e{i}", f"e{i}", ONE
    for i in S:
        yield "n", f"i={i},left", f"e{i} t{i} t{i+1}", f"e{i}", ONE
        yield "n", f"i={i},right", f"t{i} t{i+1} e{i}", f"e{i}", ONE
    for i in S:
        for a in range(a_max + 1):
            yield "o", f"i={i},a={a}", f"e{i} t{i}^{a} e{i}", f"e{i}", delta(a)


def check_relations(n: int, a_max: int = 4, inject_fault: bool = False) -> list[RelationResult]:
    """Evaluate both sides of every instance of relations (a)-(o).

    ``inject_fault`` deliberately corrupts the expected scalar of (o) so that
    callers can exercise their failure paths.
    """
    report = []
    for rel, inst, lhs, rhs, scalar in _relation_instances(n, a_max):
        if inject_fault and rel == "o":
            scalar = scalar * delta(0)
        left = evaluate_word(lhs, n)
        right = evaluate_word(rhs, n).scale(scalar)
        report.append(RelationResult(rel, inst, left == right))
    return report


def summarize_relations(report: list[RelationResult]) -> dict[str, tuple[int, int]]:
    """``relation id -> (instances, passed)``, covering all fifteen ids."""
    out = {r: (0, 0) for r in RELATION_IDS}
    for r in report:
        total, ok = out[r.relation]
        out[r.relation] = (total + 1, ok + r.passed)
    return out


def classical_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in B(n, d) with ``d = d0`` (see :data:`CLASSICAL_DELTA`)."""
    for elem in (a, b):
        for d in elem._terms:
            if not d.is_flat():
                raise NonzeroLabelError(f"classical product needs label-0 diagrams, got {d}")
    return multiply(a, b)
