"""Dangles, the three-part decomposition of a diagram, and the cell structure.

A diagram with ``k`` through strands is cut into a top dangle (its top-row
arcs), a bottom dangle (its bottom-row arcs) and an element of Z wr S_k (its
through strands).  Dangle arcs are read left to right; through strands are
read downward and matched between the top and bottom free positions, both
listed left to right.  With these conventions reflection swaps the two
dangles and inverts the wreath part.
"""

from __future__ import annotations

import itertools
import random
from math import comb
from typing import Iterable, Iterator, NamedTuple

from .algebra import AlgebraElement, multiply, multiply_diagrams
from .diagram import ColoredDiagram, DiagramError, flip, from_ordinal_strands, random_diagram
from .ring import ONE, RingElem
from .wreath import GroupAlgebraElem, WreathElem, group_algebra_mul, sigma, wreath_mul

__all__ = [
    "Dangle",
    "DecompositionTriple",
    "InconsistentTripleError",
    "decompose",
    "reconstruct",
    "phi",
    "filtration_project",
    "check_lemma42",
    "check_ideal",
    "check_lemma45",
    "enumerate_dangles",
    "flat_dangle_count",
    "double_factorial",
]


class InconsistentTripleError(DiagramError):
    pass


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


class Dangle(NamedTuple):
    """``k`` free positions plus ``(n-k)/2`` labeled arcs on ``1..n``.

    ``pairs`` holds ``(i, j, label)`` with ``i < j`` and the label read from
    ``i`` to ``j``.
    """

    n: int
    k: int
    singletons: tuple[int, ...]
    pairs: tuple[tuple[int, int, int], ...]

    @classmethod
    def make(cls, n: int, singletons: Iterable[int], pairs: Iterable[tuple[int, int, int]]) -> Dangle:
        norm = []
        for i, j, lab in pairs:
            norm.append((i, j, lab) if i < j else (j, i, -lab))
        d = cls(n, len(list(singletons)), tuple(sorted(singletons)), tuple(sorted(norm)))
        d.validate()
        return d

    def validate(self) -> None:
        used = list(self.singletons) + [p for i, j, _ in self.pairs for p in (i, j)]
        if sorted(used) != list(range(1, self.n + 1)):
            raise DiagramError(f"dangle does not partition 1..{self.n}: {self}")
        if self.k != len(self.singletons) or 2 * len(self.pairs) != self.n - self.k:
            raise DiagramError(f"dangle size mismatch: {self}")
        if any(i >= j for i, j, _ in self.pairs):
            raise DiagramError("dangle pairs must be stored with i < j")

    def is_flat(self) -> bool:
        return not any(lab for _, _, lab in self.pairs)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "singletons": list(self.singletons),
                "pairs": [{"ends": [i, j], "label": lab} for i, j, lab in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> Dangle:
        try:
            d = cls.make(int(obj["n"]), [int(s) for s in obj["singletons"]],
                         [(int(p["ends"][0]), int(p["ends"][1]), int(p.get("label", 0))) for p in obj["pairs"]])
        except (KeyError, TypeError, IndexError, AttributeError):
            raise DiagramError('dangle JSON must look like {"n": 2, "singletons": [], '
                               '"pairs": [{"ends": [1, 2], "label": 0}]}') from None
        if "k" in obj and int(obj["k"]) != d.k:
            raise DiagramError(f"k={obj['k']} disagrees with {d.k} singletons")
        return d


class DecompositionTriple(NamedTuple):
    bottom_dangle: Dangle  # the top row's arcs, dangling down
    top_dangle: Dangle  # the bottom row's arcs, dangling up
    wreath: WreathElem

    def to_json(self) -> dict:
        return {"bottom_dangle": self.bottom_dangle.to_json(),
                "top_dangle": self.top_dangle.to_json(),
                "wreath": str(self.wreath)}

    @classmethod
    def from_json(cls, obj: dict) -> DecompositionTriple:
        return cls(Dangle.from_json(obj["bottom_dangle"]), Dangle.from_json(obj["top_dangle"]),
                   WreathElem.parse(obj["wreath"]))


def decompose(d: ColoredDiagram) -> DecompositionTriple:
    n, P, L = d.n, d.partner, d.label
    bot = lambda pos: 2 * n - pos  # noqa: E731  bottom position -> ordinal
    top_free = [p + 1 for p in range(n) if P[p] >= n]
    bot_free = [pos for pos in range(1, n + 1) if P[bot(pos)] < n]
    top_pairs = tuple((p + 1, P[p] + 1, L[p]) for p in range(n) if p < P[p] < n)
    bot_pairs = tuple((i, 2 * n - P[bot(i)], L[bot(i)])
                      for i in range(1, n + 1) if P[bot(i)] >= n and 2 * n - P[bot(i)] > i)
    index = {pos: a for a, pos in enumerate(bot_free)}
    perm = [index[2 * n - P[p - 1]] for p in top_free]
    colors = [L[p - 1] for p in top_free]
    k = len(top_free)
    return DecompositionTriple(Dangle(n, k, tuple(top_free), top_pairs),
                               Dangle(n, k, tuple(bot_free), tuple(sorted(bot_pairs))),
                               WreathElem(perm, colors))


def reconstruct(t: DecompositionTriple) -> ColoredDiagram:
    up, down, w = t
    if up.n != down.n or up.k != down.k or w.k != up.k:
        raise InconsistentTripleError(
            f"dangles (n={up.n},k={up.k}), (n={down.n},k={down.k}) and wreath k={w.k} disagree")
    up.validate()
    down.validate()
    n = up.n
    strands = [(i - 1, j - 1, lab) for i, j, lab in up.pairs]
    strands += [(2 * n - i, 2 * n - j, lab) for i, j, lab in down.pairs]
    for a, p in enumerate(up.singletons):
        strands.append((p - 1, 2 * n - down.singletons[w.perm[a]], w.colors[a]))
    return from_ordinal_strands(n, strands)


def _layer_element(c1: Dangle, c2: Dangle, x: GroupAlgebraElem) -> AlgebraElement:
    terms = {}
    for w, coeff in x.items():
        terms[reconstruct(DecompositionTriple(c1, c2, w))] = coeff
    return AlgebraElement(c1.n, terms)


def phi(c2: Dangle, d1: Dangle) -> GroupAlgebraElem:
    """The A_k-valued pairing of an upward dangle ``c2`` with a downward ``d1``.

    Multiplies ``c2 (x) c2' (x) 1`` by ``d1 (x) d1' (x) 1`` and keeps the
    part with ``k`` through strands; returns 0 if the product falls lower.
    """
    if c2.n != d1.n or c2.k != d1.k:
        raise DiagramError(f"phi needs matching (n, k); got ({c2.n},{c2.k}) and ({d1.n},{d1.k})")
    k = c2.k
    ident = WreathElem.identity(k)
    x1 = reconstruct(DecompositionTriple(c2, c2, ident))
    x2 = reconstruct(DecompositionTriple(d1, d1, ident))
    coeff, z = multiply_diagrams(x1, x2)
    if z.through_count() < k:
        return GroupAlgebraElem.zero(k)
    up, down, w = decompose(z)
    assert up == c2 and down == d1, "outer dangles must survive the product"
    return GroupAlgebraElem.basis(w, coeff)


def filtration_project(a: AlgebraElement, k: int) -> tuple[AlgebraElement, AlgebraElement]:
    """Split ``a`` into its part in J_k (through count <= k) and the rest."""
    low, high = {}, {}
    for d, c in a.terms.items():
        (low if d.through_count() <= k else high)[d] = c
    return AlgebraElement(a.n, low), AlgebraElement(a.n, high)


def _layer(a: AlgebraElement, k: int) -> AlgebraElement:
    return filtration_project(filtration_project(a, k)[0], k - 1)[1]


def check_lemma42(c: ColoredDiagram, d: ColoredDiagram) -> bool:
    """``c.d == c1 (x) d2' (x) c~ phi(c2', d1) d~`` modulo J_{k-2}."""
    k = c.through_count()
    if d.through_count() != k or c.n != d.n:
        raise DiagramError(f"the product congruence needs equal through counts, got {k} and {d.through_count()}")
    c1, c2, cw = decompose(c)
    d1, d2, dw = decompose(d)
    lhs = _layer(multiply(AlgebraElement.basis(c), AlgebraElement.basis(d)), k)
    middle = group_algebra_mul(group_algebra_mul(GroupAlgebraElem.basis(cw), phi(c2, d1)),
                               GroupAlgebraElem.basis(dw))
    rhs = _layer(_layer_element(c1, d2, middle), k)
    return lhs == rhs


def _random_element(n: int, rng: random.Random, labels: tuple[int, int],
                    max_through: int | None = None) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        if max_through is None:
            d = random_diagram(n, rng, labels)
        else:
            choices = [t for t in range(n % 2, max_through + 1, 2)]
            d = random_diagram(n, rng, labels, through=rng.choice(choices))
        terms[d] = RingElem({((rng.randint(0, 3), rng.randint(0, 2)),): rng.choice([-2, -1, 1, 3])})
    return AlgebraElement(n, terms)


def check_ideal(n: int, k: int, samples: int = 200, seed: int = 0,
                labels: tuple[int, int] = (-3, 3)) -> bool:
    """Randomized check that J_k is a two-sided ideal.

    For ``t(d) > k = t(c)``, the ``k``-layer of ``d.c`` must be
    ``b (x) c2' (x) a.c~`` with ``a`` not depending on ``c~``; this is tested
    by swapping ``c~`` for a random ``c~*`` and predicting the new product.
    The mirrored statement for ``c.d`` is checked the same way.
    """
    rng = random.Random(seed)
    if k >= n:
        return True
    has_layer = k >= 0 and (n - k) % 2 == 0
    has_ideal = k >= n % 2
    for _ in range(samples):
        if has_ideal:
            x = _random_element(n, rng, labels)
            j = _random_element(n, rng, labels, max_through=k)
            for prod in (multiply(x, j), multiply(j, x)):
                if filtration_project(prod, k)[1]:
                    return False
        if not has_layer:
            continue
        higher = rng.choice(range(k + 2, n + 1, 2))
        d = random_diagram(n, rng, labels, through=higher)
        c = random_diagram(n, rng, labels, through=k)
        c1, c2, cw = decompose(c)
        other = WreathElem(rng.sample(range(k), k), [rng.randint(*labels) for _ in range(k)])
        c_star = reconstruct(DecompositionTriple(c1, c2, other))
        # left multiplication: d.c
        coeff, z = multiply_diagrams(d, c)
        coeff_s, z_s = multiply_diagrams(d, c_star)
        if z.through_count() < k:
            if z_s.through_count() >= k:
                return False
        else:
            b, bottom, w = decompose(z)
            if bottom != c2:
                return False
            a = wreath_mul(w, cw.inverse())
            if (coeff_s, z_s) != (coeff, reconstruct(DecompositionTriple(b, c2, wreath_mul(a, other)))):
                return False
        # right multiplication: c.d
        coeff, z = multiply_diagrams(c, d)
        coeff_s, z_s = multiply_diagrams(c_star, d)
        if z.through_count() < k:
            if z_s.through_count() >= k:
                return False
        else:
            top, b, w = decompose(z)
            if top != c1:
                return False
            a = wreath_mul(cw.inverse(), w)
            if (coeff_s, z_s) != (coeff, reconstruct(DecompositionTriple(c1, b, wreath_mul(other, a)))):
                return False
    return True


def check_lemma45(c: ColoredDiagram, d: ColoredDiagram) -> bool:
    """Reflection swaps the dangles and inverts the wreath part; phi is sigma-symmetric."""
    if c.n != d.n:
        raise DiagramError(f"n={c.n} vs n={d.n}")
    for x in (c, d):
        x1, x2, xw = decompose(x)
        if decompose(flip(x)) != DecompositionTriple(x2, x1, sigma(xw)):
            return False
    if c.through_count() != d.through_count():
        return True
    _, c2, _ = decompose(c)
    d1, _, _ = decompose(d)
    return sigma(phi(c2, d1)) == phi(d1, c2)


def flat_dangle_count(n: int, k: int) -> int:
    """Closed form C(n, k) (n-k-1)!! for flat (n, k)-dangles."""
    if k < 0 or k > n or (n - k) % 2:
        return 0
    return comb(n, k) * double_factorial(n - k - 1)


def _pairings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for idx in range(1, len(points)):
        rest = points[1:idx] + points[idx + 1:]
        for m in _pairings(rest):
            yield [(first, points[idx])] + m


def enumerate_dangles(n: int, k: int, labels: Iterable[int] = (0,)) -> Iterator[Dangle]:
    """All (n, k)-dangles with arc labels drawn from ``labels``."""
    labels = tuple(labels)
    if k < 0 or k > n or (n - k) % 2:
        return
    for singles in itertools.combinations(range(1, n + 1), k):
        rest = tuple(p for p in range(1, n + 1) if p not in singles)
        for pairing in _pairings(rest):
            for labs in itertools.product(labels, repeat=len(pairing)):
                yield Dangle(n, k, singles, tuple((i, j, lab) for (i, j), lab in zip(pairing, labs)))


def layer_sizes(n: int) -> dict[int, int]:
    """``k -> |D(n,k)|^2 * k!`` for flat dangles, summed over layers equals (2n-1)!!."""
    from math import factorial
    return {k: flat_dangle_count(n, k) ** 2 * factorial(k) for k in range(n % 2, n + 1, 2)}
