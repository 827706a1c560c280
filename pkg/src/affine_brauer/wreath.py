"""The wreath product Z wr S_k and its group algebra A_k over Z[d0, d1, ...].

An element ``(perm, colors)`` is the colored permutation diagram whose strand
from top position ``a`` ends at bottom position ``perm[a]`` and carries label
``colors[a]`` read downward.  The group law is stacking, left factor on top:

    (p, c) * (q, e) = (q o p, c + e o p)

so the map from full-through diagrams to Z wr S_k is multiplicative.
Permutations are stored 0-based; the text form is 1-based one-line notation,
e.g. ``[2 1 3 | 1,0,-2]``.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator

from .ring import ONE, RingElem, RingParseError, ring_sum

__all__ = [
    "WreathElem",
    "GroupAlgebraElem",
    "SizeMismatchError",
    "wreath_mul",
    "sigma",
    "group_algebra_mul",
]


class SizeMismatchError(ValueError):
    pass


class WreathElem:
    __slots__ = ("perm", "colors", "_hash")

    def __init__(self, perm: Iterable[int], colors: Iterable[int] | None = None):
        perm = tuple(int(p) for p in perm)
        colors = tuple(int(c) for c in colors) if colors is not None else (0,) * len(perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        if len(colors) != len(perm):
            raise ValueError("color vector length differs from permutation length")
        self.perm = perm
        self.colors = colors
        self._hash = None

    @classmethod
    def identity(cls, k: int) -> WreathElem:
        return cls(range(k))

    @property
    def k(self) -> int:
        return len(self.perm)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WreathElem):
            return NotImplemented
        return self.perm == other.perm and self.colors == other.colors

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.perm, self.colors))
        return self._hash

    def sort_key(self):
        return (self.k, self.perm, self.colors)

    def __lt__(self, other: WreathElem) -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: WreathElem) -> WreathElem:
        return wreath_mul(self, other)

    def inverse(self) -> WreathElem:
        inv = [0] * self.k
        cols = [0] * self.k
        for a, b in enumerate(self.perm):
            inv[b] = a
            cols[b] = -self.colors[a]
        return WreathElem(inv, cols)

    def __str__(self) -> str:
        perm = " ".join(str(p + 1) for p in self.perm)
        cols = ",".join(str(c) for c in self.colors)
        return f"[{perm} | {cols}]"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> WreathElem:
        m = re.fullmatch(r"\s*\[([^|\]]*)\|([^\]]*)\]\s*", text)
        if not m:
            raise ValueError(f"bad wreath element {text!r}; expected '[2 1 3 | 1,0,-2]'")
        perm = [int(t) - 1 for t in m.group(1).split()]
        colors = [int(t) for t in m.group(2).replace(",", " ").split()]
        return cls(perm, colors)

    @classmethod
    def enumerate(cls, k: int, colors: range) -> Iterator[WreathElem]:
        """Every element with colors drawn from ``colors`` (a finite window)."""
        for perm in itertools.permutations(range(k)):
            for cols in itertools.product(colors, repeat=k):
                yield cls(perm, cols)


def wreath_mul(u: WreathElem, v: WreathElem) -> WreathElem:
    if u.k != v.k:
        raise SizeMismatchError(f"k={u.k} vs k={v.k}")
    perm = tuple(v.perm[p] for p in u.perm)
    colors = tuple(c + v.colors[p] for c, p in zip(u.colors, u.perm))
    out = WreathElem.__new__(WreathElem)
    out.perm, out.colors, out._hash = perm, colors, None
    return out


def sigma(w):
    """Group inversion, extended linearly (coefficients fixed) to A_k."""
    if isinstance(w, GroupAlgebraElem):
        return GroupAlgebraElem(w.k, {u.inverse(): c for u, c in w._terms.items()})
    return w.inverse()


class GroupAlgebraElem:
    """Finite Z[d0, d1, ...]-combination of elements of Z wr S_k."""

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: dict[WreathElem, RingElem] | None = None):
        self.k = k
        clean = {}
        for w, c in (terms or {}).items():
            if w.k != k:
                raise SizeMismatchError(f"element of size {w.k} in A_{k}")
            if isinstance(c, int):
                c = RingElem.const(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def basis(cls, w: WreathElem, coeff: RingElem | int = 1) -> GroupAlgebraElem:
        return cls(w.k, {w: coeff})

    @classmethod
    def one(cls, k: int) -> GroupAlgebraElem:
        return cls(k, {WreathElem.identity(k): ONE})

    @classmethod
    def zero(cls, k: int) -> GroupAlgebraElem:
        return cls(k)

    @property
    def terms(self) -> dict[WreathElem, RingElem]:
        return dict(self._terms)

    def items(self) -> list[tuple[WreathElem, RingElem]]:
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, frozenset(self._terms.items())))

    def __add__(self, other: GroupAlgebraElem) -> GroupAlgebraElem:
        if self.k != other.k:
            raise SizeMismatchError(f"k={self.k} vs k={other.k}")
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return GroupAlgebraElem(self.k, out)

    def scale(self, r: RingElem | int) -> GroupAlgebraElem:
        return GroupAlgebraElem(self.k, {w: c * r for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElem):
            return group_algebra_mul(self, other)
        if isinstance(other, WreathElem):
            return group_algebra_mul(self, GroupAlgebraElem.basis(other))
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, WreathElem):
            return group_algebra_mul(GroupAlgebraElem.basis(other), self)
        if isinstance(other, (RingElem, int)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            if c == 1:
                parts.append(str(w))
            else:
                parts.append(f"({c})*{w}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<GroupAlgebraElem k={self.k} {self}>"

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> GroupAlgebraElem:
        """Inverse of ``str``: ``(<ring>)*[perm | colors] + [perm | colors] + ...``.

        ``k`` is required only to parse ``"0"``.
        """
        if text.strip() == "0":
            if k is None:
                raise ValueError("k is needed to parse the zero element")
            return cls.zero(k)
        term_re = re.compile(r"\s*(?:\((?P<c>[^()]*)\)\s*\*\s*)?(?P<w>\[[^\]]*\])\s*")
        out = None
        pos = 0
        while True:
            m = term_re.match(text, pos)
            if not m:
                raise RingParseError("expected '(coeff)*[perm | colors]'", text, pos + 1)
            coeff = RingElem.parse(m.group("c")) if m.group("c") is not None else ONE
            term = cls.basis(WreathElem.parse(m.group("w")), coeff)
            out = term if out is None else out + term
            pos = m.end()
            if pos == len(text):
                return out
            if text[pos] != "+":
                raise RingParseError("expected '+'", text, pos + 1)
            pos += 1

    def to_json(self) -> dict:
        return {"k": self.k, "terms": [{"coeff": str(c), "element": str(w)} for w, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> GroupAlgebraElem:
        k = int(obj["k"])
        out = cls.zero(k)
        for t in obj["terms"]:
            out = out + cls.basis(WreathElem.parse(t["element"]), RingElem.parse(str(t["coeff"])))
        return out


def group_algebra_mul(a: GroupAlgebraElem, b: GroupAlgebraElem) -> GroupAlgebraElem:
    if a.k != b.k:
        raise SizeMismatchError(f"k={a.k} vs k={b.k}")
    acc: dict[WreathElem, list[RingElem]] = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            acc.setdefault(wreath_mul(u, v), []).append(cu * cv)
    return GroupAlgebraElem(a.k, {w: ring_sum(cs) for w, cs in acc.items()})
