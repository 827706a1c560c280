"""Colored Brauer diagrams: construction, canonical form, enumeration, flip.

Nodes are encoded as ordinals ``0 .. 2n-1`` following the order

    T1 < T2 < ... < Tn < Bn < ... < B2 < B1

so ``Tk -> k-1`` and ``Bk -> 2n-k``.  A diagram stores two tuples indexed by
ordinal: ``partner[p]`` is the other endpoint of the strand through ``p`` and
``label[p]`` is the strand's label read starting at ``p``.  Reading a strand
backwards negates its label, so ``label[partner[p]] == -label[p]`` always
holds.  The canonical label of a strand is the one read from its smaller
endpoint.
"""

from __future__ import annotations

import os
import random
import re
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Node",
    "Strand",
    "ColoredDiagram",
    "DiagramError",
    "NotAMatchingError",
    "BoundExceededError",
    "make_diagram",
    "identity",
    "through_count",
    "flip",
    "enumerate_flat",
    "diagram_key",
    "random_diagram",
    "max_enumeration_n",
]


class DiagramError(ValueError):
    pass


class NotAMatchingError(DiagramError):
    pass


class BoundExceededError(DiagramError):
    pass


class Node(NamedTuple):
    row: str  # "T" or "B"
    position: int

    def __str__(self) -> str:
        return f"{self.row}{self.position}"

    @classmethod
    def parse(cls, text: str) -> Node:
        m = re.fullmatch(r"\s*([TB])(\d+)\s*", text)
        if not m:
            raise DiagramError(f"bad node {text!r}; expected T<k> or B<k>")
        return cls(m.group(1), int(m.group(2)))

    def ordinal(self, n: int) -> int:
        if not 1 <= self.position <= n:
            raise DiagramError(f"node {self} out of range for n={n}")
        if self.row == "T":
            return self.position - 1
        if self.row == "B":
            return 2 * n - self.position
        raise DiagramError(f"bad row {self.row!r}")

    @classmethod
    def from_ordinal(cls, p: int, n: int) -> Node:
        return cls("T", p + 1) if p < n else cls("B", 2 * n - p)


class Strand(NamedTuple):
    """A strand in canonical orientation: ``a < b`` in the node order."""

    a: Node
    b: Node
    label: int


class ColoredDiagram:
    """A canonical colored Brauer n-diagram. Immutable."""

    __slots__ = ("n", "partner", "label", "_key", "_hash")

    def __init__(self, n: int, partner: tuple[int, ...], label: tuple[int, ...]):
        # trusted constructor; use make_diagram for raw input
        self.n = n
        self.partner = partner
        self.label = label
        self._key = None
        self._hash = None

    def key(self) -> bytes:
        if self._key is None:
            self._key = _encode_key(self.n, self.partner, self.label)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredDiagram):
            return NotImplemented
        return self.n == other.n and self.partner == other.partner and self.label == other.label

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.partner, self.label))
        return self._hash

    def __lt__(self, other: ColoredDiagram) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.n, tuple((a, b, lab) for a, b, lab in self.ordinal_strands()))

    def ordinal_strands(self) -> list[tuple[int, int, int]]:
        """``(a, b, label)`` with ``a < b``, sorted by ``a``."""
        return [(p, q, self.label[p]) for p, q in enumerate(self.partner) if p < q]

    def strands(self) -> list[Strand]:
        n = self.n
        return [Strand(Node.from_ordinal(a, n), Node.from_ordinal(b, n), lab)
                for a, b, lab in self.ordinal_strands()]

    def is_flat(self) -> bool:
        return not any(self.label)

    def through_count(self) -> int:
        n = self.n
        return sum(1 for p in range(n) if self.partner[p] >= n)

    def __str__(self) -> str:
        parts = []
        for s in self.strands():
            parts.append(f"{s.a}-{s.b}" + (f"({s.label})" if s.label else ""))
        return "[" + ", ".join(parts) + "]"

    def __repr__(self) -> str:
        return f"<ColoredDiagram n={self.n} {self}>"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "strands": [{"from": str(s.a), "to": str(s.b), "label": s.label} for s in self.strands()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> ColoredDiagram:
        try:
            n = int(obj["n"])
            raw = [(Node.parse(s["from"]), Node.parse(s["to"]), int(s.get("label", 0)))
                   for s in obj["strands"]]
        except (KeyError, TypeError) as exc:
            raise DiagramError(f"malformed diagram JSON: {exc}") from None
        return make_diagram(n, raw)


def _encode_key(n: int, partner, label) -> bytes:
    # n, then for each p < partner[p]: (p, partner, label) as fixed/var width ints
    out = bytearray(n.to_bytes(2, "big"))
    for p, q in enumerate(partner):
        if p < q:
            lab = label[p]
            out += p.to_bytes(2, "big") + q.to_bytes(2, "big")
            mag = abs(lab).to_bytes(max(1, (abs(lab).bit_length() + 7) // 8), "big")
            out += bytes([1 if lab < 0 else 0, len(mag)]) + mag
    return bytes(out)


def from_ordinal_strands(n: int, strands: Iterable[tuple[int, int, int]]) -> ColoredDiagram:
    """Build from ``(p, q, label)`` triples with the label read from ``p``."""
    partner = [-1] * (2 * n)
    label = [0] * (2 * n)
    for p, q, lab in strands:
        if not (0 <= p < 2 * n and 0 <= q < 2 * n):
            raise DiagramError(f"ordinal out of range for n={n}")
        if p == q:
            raise NotAMatchingError(f"strand joins {Node.from_ordinal(p, n)} to itself")
        for x in (p, q):
            if partner[x] != -1:
                raise NotAMatchingError(f"node {Node.from_ordinal(x, n)} used twice")
        partner[p], partner[q] = q, p
        label[p], label[q] = lab, -lab
    if -1 in partner:
        missing = Node.from_ordinal(partner.index(-1), n)
        raise NotAMatchingError(f"node {missing} not covered")
    return ColoredDiagram(n, tuple(partner), tuple(label))


def make_diagram(n: int, raw: Iterable[tuple[Node, Node, int]]) -> ColoredDiagram:
    """Canonical diagram from oriented, labeled strands.

    Each raw strand ``(from, to, label)`` is read in its given direction;
    reversing the direction and negating the label gives the same diagram.
    """
    if n < 1:
        raise DiagramError("n must be positive")
    trip = []
    for src, dst, lab in raw:
        if isinstance(src, str):
            src = Node.parse(src)
        if isinstance(dst, str):
            dst = Node.parse(dst)
        trip.append((src.ordinal(n), dst.ordinal(n), int(lab)))
    return from_ordinal_strands(n, trip)


def identity(n: int, labels: Iterable[int] | None = None) -> ColoredDiagram:
    """Identity matching; ``labels[j]`` is read from T(j+1) down to B(j+1)."""
    labels = list(labels) if labels is not None else [0] * n
    return from_ordinal_strands(n, [(j, 2 * n - 1 - j, labels[j]) for j in range(n)])


def through_count(d: ColoredDiagram) -> int:
    return d.through_count()


def flip(d: ColoredDiagram) -> ColoredDiagram:
    """Reflect through the horizontal axis (Tk <-> Bk)."""
    m = 2 * d.n - 1
    partner = [0] * (2 * d.n)
    label = [0] * (2 * d.n)
    for p, q in enumerate(d.partner):
        partner[m - p] = m - q
        label[m - p] = d.label[p]
    return ColoredDiagram(d.n, tuple(partner), tuple(label))


def diagram_key(d: ColoredDiagram) -> bytes:
    return d.key()


def max_enumeration_n() -> int:
    return int(os.environ.get("BRAUER_MAX_N", "8"))


def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for idx, other in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1:]
        for m in _matchings(remaining):
            yield [(first, other)] + m


def enumerate_flat(n: int, bound: int | None = None) -> list[ColoredDiagram]:
    """All (2n-1)!! flat diagrams, ordered by their sorted strand lists."""
    if bound is None:
        bound = max_enumeration_n()
    if n < 1:
        raise DiagramError("n must be positive")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds enumeration bound {bound}")
    # pairing the smallest free point first yields lexicographic order already
    return [from_ordinal_strands(n, [(p, q, 0) for p, q in m])
            for m in _matchings(list(range(2 * n)))]


def random_diagram(n: int, rng: random.Random, labels: tuple[int, int] = (0, 0),
                   through: int | None = None) -> ColoredDiagram:
    """Uniform matching (or uniform among those with ``through`` verticals)."""
    lo, hi = labels
    if through is None:
        pts = list(range(2 * n))
        rng.shuffle(pts)
        pairs = [(pts[2 * i], pts[2 * i + 1]) for i in range(n)]
    else:
        if through > n or (n - through) % 2:
            raise DiagramError(f"no diagram with n={n} and {through} through strands")
        top = list(range(n))
        bot = list(range(n, 2 * n))
        rng.shuffle(top)
        rng.shuffle(bot)
        pairs = list(zip(top[:through], bot[:through]))
        for side in (top[through:], bot[through:]):
            pairs += [(side[2 * i], side[2 * i + 1]) for i in range(len(side) // 2)]
    return from_ordinal_strands(n, [(p, q, rng.randint(lo, hi)) for p, q in pairs])
