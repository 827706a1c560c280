"""Acceptance criteria, one test per criterion.

Each test records a ``CRITERION <n>: PASS|FAIL`` line; pytest prints them in
the terminal summary.  ``python tests/test_acceptance.py`` runs the same
checks without pytest.
"""

import functools
import itertools
import os
import random
import sys
import time
from math import factorial

sys.path.insert(0, os.path.dirname(__file__))

from affine_brauer.algebra import (AlgebraElement, check_relations, classical_multiply, evaluate_word,
                                   involution_i, multiply, summarize_relations)
from affine_brauer.cellular import (Dangle, DecompositionTriple, check_ideal, check_lemma42, check_lemma45,
                                    decompose, enumerate_dangles, phi, reconstruct)
from affine_brauer.concat import concatenate
from affine_brauer.diagram import enumerate_flat, flip, from_ordinal_strands, random_diagram
from affine_brauer.ring import RingElem, delta
from affine_brauer.wreath import WreathElem, sigma, wreath_mul
from oracles import brute_force_matchings, diagram_strand_map, involution_counts, trace_oracle
from report import RESULTS

SEED = 20261015


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except AssertionError as exc:
                RESULTS.append(f"CRITERION {number:>2}: FAIL  {title} ({exc})")
                raise
            elapsed = time.perf_counter() - start
            RESULTS.append(f"CRITERION {number:>2}: PASS  {title} [{detail}; {elapsed:.1f}s]")
        return run
    return wrap


def colored(n, window):
    for d in enumerate_flat(n):
        strands = d.ordinal_strands()
        for labs in itertools.product(window, repeat=n):
            yield from_ordinal_strands(n, [(a, b, lab) for (a, b, _), lab in zip(strands, labs)])


def random_element(n, rng, labels=(-3, 3)):
    terms = {}
    for _ in range(rng.randint(1, 2)):
        coeff = RingElem.const(rng.choice([-2, -1, 1, 2])) * delta(rng.randint(0, 3))
        terms[random_diagram(n, rng, labels)] = coeff
    return AlgebraElement(n, terms)


@criterion(1, "relations (a)-(o) hold for n in 2..5, a <= 4")
def test_presentation_soundness():
    instances = 0
    for n in (2, 3, 4, 5):
        report = check_relations(n, 4)
        failed = [r for r in report if not r.passed]
        assert not failed, f"n={n}: {failed[:3]}"
        summary = summarize_relations(report)
        assert len(summary) == 15
        instances += len(report)
    return f"{instances} instances"


@criterion(2, "|enumerate_flat(n)| = (2n-1)!! for n <= 6, matched against brute force")
def test_counting():
    expected = [1, 3, 15, 105, 945, 10395]
    for n, count in zip(range(1, 7), expected):
        ours = enumerate_flat(n)
        brute = brute_force_matchings(n)
        assert len(ours) == len(set(ours)) == count == len(brute), f"n={n}"
        assert {frozenset(frozenset((a, b)) for a, b, _ in d.ordinal_strands()) for d in ours} == brute
    return "1, 3, 15, 105, 945, 10395"


@criterion(3, "associativity and unit, 500 random colored triples, n <= 4, labels in [-3,3]")
def test_associativity_and_unit():
    rng = random.Random(SEED + 3)
    for _ in range(500):
        n = rng.randint(1, 4)
        a, b, c = (random_element(n, rng) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        one = AlgebraElement.one(n)
        assert multiply(one, a) == a == multiply(a, one)
    return "500 triples"


@criterion(4, "involution: i^2 = id, i(ab) = i(b)i(a), 200 random pairs")
def test_involution():
    rng = random.Random(SEED + 4)
    for _ in range(200):
        n = rng.randint(1, 4)
        a, b = random_element(n, rng), random_element(n, rng)
        assert involution_i(involution_i(a)) == a
        assert involution_i(multiply(a, b)) == multiply(involution_i(b), involution_i(a))
    return "200 pairs"


@criterion(5, "decompose/reconstruct inverse: exhaustive n <= 3 labels [-2,2], 500 random n <= 5")
def test_decomposition_roundtrip():
    window = range(-2, 3)
    count = 0
    for n in (1, 2, 3):
        for d in colored(n, window):
            assert reconstruct(decompose(d)) == d
            count += 1
        for k in range(n % 2, n + 1, 2):
            dangles = list(enumerate_dangles(n, k, window))
            wreaths = list(WreathElem.enumerate(k, window))
            for up, down, w in itertools.product(dangles, dangles, wreaths):
                t = DecompositionTriple(up, down, w)
                assert decompose(reconstruct(t)) == t
                count += 1
    rng = random.Random(SEED + 5)
    for _ in range(500):
        n = rng.randint(1, 5)
        d = random_diagram(n, rng, (-4, 4))
        assert reconstruct(decompose(d)) == d
        t = decompose(d)
        assert decompose(reconstruct(t)) == t
    return f"{count} exhaustive + 500 random"


@criterion(6, "product congruence mod J_{k-2}: exhaustive flat pairs n <= 3, 500 random colored pairs n <= 4")
def test_lemma42():
    exhaustive = 0
    for n in (1, 2, 3):
        diagrams = enumerate_flat(n)
        for c, d in itertools.product(diagrams, repeat=2):
            if c.through_count() == d.through_count():
                assert check_lemma42(c, d), f"{c} {d}"
                exhaustive += 1
    rng = random.Random(SEED + 6)
    for _ in range(500):
        n = rng.randint(1, 4)
        k = rng.choice(range(n % 2, n + 1, 2))
        c = random_diagram(n, rng, (-3, 3), through=k)
        d = random_diagram(n, rng, (-3, 3), through=k)
        assert check_lemma42(c, d), f"{c} {d}"
    return f"{exhaustive} flat + 500 colored"


@criterion(7, "J_k is an ideal and the left factor ignores the wreath part, all k, n <= 4, 200 samples each")
def test_ideal():
    cases = 0
    for n in (1, 2, 3, 4):
        for k in range(n + 1):
            assert check_ideal(n, k, samples=200, seed=SEED + 7 + 10 * n + k), f"n={n} k={k}"
            cases += 1
    return f"{cases} (n, k) cases"


@criterion(8, "flip decomposition and phi symmetry: exhaustive n <= 3, 300 random n <= 4")
def test_lemma45():
    window = range(-2, 3)
    count = 0
    for n in (1, 2, 3):
        for d in colored(n, window):
            d1, d2, w = decompose(d)
            assert decompose(flip(d)) == DecompositionTriple(d2, d1, sigma(w))
            count += 1
        for k in range(n % 2, n + 1, 2):
            dangles = list(enumerate_dangles(n, k, window))
            for c, d in itertools.product(dangles, repeat=2):
                assert sigma(phi(c, d)) == phi(d, c)
                count += 1
        for c, d in itertools.product(enumerate_flat(n), repeat=2):
            assert check_lemma45(c, d)
            count += 1
    rng = random.Random(SEED + 8)
    for _ in range(300):
        n = rng.randint(1, 4)
        k = rng.choice(range(n % 2, n + 1, 2))
        assert check_lemma45(random_diagram(n, rng, (-3, 3), through=k),
                             random_diagram(n, rng, (-3, 3), through=k))
    return f"{count} exhaustive + 300 random"


@criterion(9, "sum_k [C(n,k)(n-k-1)!!]^2 k! = (2n-1)!! for n in 2..4")
def test_layer_counts():
    for n, total in ((2, 3), (3, 15), (4, 105)):
        inv = involution_counts(n)
        lhs = sum(inv.get(k, 0) ** 2 * len(list(itertools.permutations(range(k)))) for k in range(n + 1))
        assert lhs == total == len(brute_force_matchings(n)) == len(enumerate_flat(n))
        # the decomposition hits every flat triple exactly once
        triples = {decompose(d) for d in enumerate_flat(n)}
        expected = {DecompositionTriple(a, b, WreathElem(p))
                    for k in range(n % 2, n + 1, 2)
                    for a in enumerate_dangles(n, k) for b in enumerate_dangles(n, k)
                    for p in itertools.permutations(range(k))}
        assert triples == expected
        assert sum(factorial(k) * (len(list(enumerate_dangles(n, k)))) ** 2 for k in range(n + 1)) == total
    return "3, 15, 105"


@criterion(10, "top layer: Z wr S_3 law equals diagram stacking, exhaustive labels [-2,2]")
def test_top_layer_isomorphism():
    elems = list(WreathElem.enumerate(3, range(-2, 3)))
    free = Dangle(3, 3, (1, 2, 3), ())
    diagrams = [reconstruct(DecompositionTriple(free, free, w)) for w in elems]
    for u, x in zip(elems, diagrams):
        assert decompose(x).wreath == u
    pairs = 0
    for u, x in zip(elems, diagrams):
        for v, y in zip(elems, diagrams):
            z, loops = concatenate(x, y)
            assert not loops
            assert decompose(z).wreath == wreath_mul(u, v)
            pairs += 1
    return f"{pairs} pairs"


@criterion(11, "classical specialization: label-0 products give B(n, d) with d = d0, n <= 4")
def test_classical():
    d = delta(0)
    e1 = evaluate_word("e1", 2)
    assert classical_multiply(e1, e1) == e1.scale(d)
    checked = 0
    rng = random.Random(SEED + 11)
    pairs = [(x, y) for n in (1, 2, 3) for x in enumerate_flat(n) for y in enumerate_flat(n)]
    flat4 = enumerate_flat(4)
    pairs += [(rng.choice(flat4), rng.choice(flat4)) for _ in range(500)]
    for x, y in pairs:
        strands, loops = trace_oracle(x, y)
        (z, coeff), = classical_multiply(AlgebraElement.basis(x), AlgebraElement.basis(y)).items()
        assert diagram_strand_map(z) == strands and z.is_flat()
        assert coeff == d ** len(loops) and all(lab == 0 for lab in loops)
        checked += 1
    for n in (2, 3, 4):
        for r in check_relations(n, 0):
            if r.relation in "abc":
                assert r.passed
        s = [evaluate_word(f"s{i}", n) for i in range(1, n)]
        for i in range(n - 2):
            lhs = classical_multiply(classical_multiply(s[i], s[i + 1]), s[i])
            rhs = classical_multiply(classical_multiply(s[i + 1], s[i]), s[i + 1])
            assert lhs == rhs
    for n in (2, 3, 4):
        flat = enumerate_flat(n)
        for _ in range(100):
            x, y, z = (AlgebraElement.basis(rng.choice(flat)) for _ in range(3))
            assert classical_multiply(classical_multiply(x, y), z) == classical_multiply(x, classical_multiply(y, z))
    return f"{checked} products vs graph oracle"


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
