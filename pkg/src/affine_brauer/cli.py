"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

Operands accept a generator word (``"s1 e2 t3^-1"``), an inline JSON diagram
or algebra element, or ``@path`` to a JSON file.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import re
import sys
from typing import Sequence

from . import __version__
from .algebra import (AlgebraElement, WordParseError, check_relations, evaluate_word,
                      involution_i, multiply, summarize_relations)
from .cellular import (Dangle, check_ideal, check_lemma42, check_lemma45, decompose, phi)
from .concat import BACKEND, DimensionMismatchError
from .diagram import (ColoredDiagram, DiagramError, enumerate_flat, from_ordinal_strands,
                      random_diagram)
from .ring import RingParseError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def render_tikz(d: ColoredDiagram) -> str:
    """TikZ picture: top row at y=1, bottom row at y=0, x = position."""
    n = d.n
    coord = lambda p: (p + 1, 1) if p < n else (2 * n - p, 0)  # noqa: E731
    lines = [r"\begin{tikzpicture}[scale=1,>=stealth]"]
    for p in range(2 * n):
        x, y = coord(p)
        name = f"{'T' if y else 'B'}{x}"
        lines.append(rf"  \fill ({x},{y}) circle (1.5pt) node[{'above' if y else 'below'}] {{\scriptsize {name}}};")
    for a, b, lab in d.ordinal_strands():
        (x1, y1), (x2, y2) = coord(a), coord(b)
        if y1 == y2 == 1:
            path = "to[out=-90,in=-90]"
        elif y1 == y2 == 0:
            path = "to[out=90,in=90]"
        else:
            path = "--"
        lines.append(rf"  \draw[->] ({x1},{y1}) {path} node[midway,fill=white,inner sep=1pt] "
                     rf"{{\scriptsize {lab}}} ({x2},{y2});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines)


def _load_json(text: str):
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_element(text: str, n: int | None) -> AlgebraElement:
    text = text.strip()
    if text.startswith("{") or text.startswith("@"):
        obj = _load_json(text)
        if "strands" in obj:
            elem = AlgebraElement.basis(ColoredDiagram.from_json(obj))
        else:
            elem = AlgebraElement.from_json(obj)
        if n is not None and elem.n != n:
            raise DimensionMismatchError(f"operand has n={elem.n} but --n {n} was given")
        return elem
    if n is None:
        raise InputError("--n is required for generator words")
    return evaluate_word(text, n)


def parse_diagram(text: str, n: int | None) -> ColoredDiagram:
    elem = parse_element(text, n)
    if len(elem) != 1 or elem.items()[0][1] != 1:
        raise InputError(f"expected a single diagram, got {elem}")
    return elem.items()[0][0]


def parse_labels(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise argparse.ArgumentTypeError(f"expected <min>..<max>, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _emit_element(elem: AlgebraElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(elem.to_json())
    if fmt == "tikz":
        blocks = []
        for d, c in elem.items():
            blocks.append(f"% coefficient: {c}\n{render_tikz(d)}")
        return "\n".join(blocks) if blocks else "% zero element"
    return str(elem)


def cmd_mul(args) -> int:
    a = parse_element(args.left, args.n)
    b = parse_element(args.right, args.n)
    if a.n != b.n:
        raise DimensionMismatchError(f"left operand has n={a.n}, right operand has n={b.n}")
    print(_emit_element(multiply(a, b), args.format))
    return EXIT_OK


def cmd_word(args) -> int:
    print(_emit_element(evaluate_word(" ".join(args.word), args.n), args.format))
    return EXIT_OK


def cmd_flip(args) -> int:
    print(_emit_element(involution_i(parse_element(args.operand, args.n)), args.format))
    return EXIT_OK


def cmd_decompose(args) -> int:
    t = decompose(parse_diagram(args.operand, args.n))
    if args.format == "json":
        print(json.dumps(t.to_json()))
    else:
        print(f"top row arcs (down dangle): {json.dumps(t.bottom_dangle.to_json())}")
        print(f"bottom row arcs (up dangle): {json.dumps(t.top_dangle.to_json())}")
        print(f"through part: {t.wreath}")
    return EXIT_OK


def cmd_phi(args) -> int:
    up = Dangle.from_json(_load_json(args.up))
    down = Dangle.from_json(_load_json(args.down))
    value = phi(up, down)
    print(json.dumps(value.to_json()) if args.format == "json" else str(value))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.flat:
        diagrams = enumerate_flat(args.n)
    else:
        lo, hi = args.labels
        diagrams = []
        for d in enumerate_flat(args.n):
            strands = d.ordinal_strands()
            diagrams += _colorings(args.n, strands, range(lo, hi + 1))
    for d in diagrams:
        if args.format == "json":
            print(json.dumps(d.to_json()))
        elif args.format == "tikz":
            print(render_tikz(d))
        else:
            print(d)
    print(f"# {len(diagrams)} diagrams", file=sys.stderr)
    return EXIT_OK


def _colorings(n, strands, window):
    return [from_ordinal_strands(n, [(a, b, lab) for (a, b, _), lab in zip(strands, labs)])
            for labs in itertools.product(window, repeat=len(strands))]


def cmd_relations(args) -> int:
    fault = bool(os.environ.get("BRAUER_INJECT_FAULT"))
    report = check_relations(args.n, args.a_max, inject_fault=fault)
    summary = summarize_relations(report)
    failed = [r for r in report if not r.passed]
    if args.format == "json":
        print(json.dumps({"n": args.n, "a_max": args.a_max,
                          "relations": {k: {"instances": t, "passed": p} for k, (t, p) in summary.items()},
                          "failures": [[r.relation, r.instance] for r in failed]}))
    else:
        for rel, (total, ok) in summary.items():
            note = " (vacuous)" if total == 0 else ""
            print(f"({rel}) {ok}/{total} pass{note}")
        for r in failed:
            print(f"FAIL ({r.relation}) {r.instance}")
        if failed:
            print(f"{len(failed)} relation instances fail")
        else:
            print("all 15 relation families pass")
    return EXIT_FAIL if failed else EXIT_OK


def _random_pairs(args, same_through: bool):
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        n = args.n
        if same_through:
            t = rng.choice(range(n % 2, n + 1, 2))
            yield (random_diagram(n, rng, args.labels, through=t),
                   random_diagram(n, rng, args.labels, through=t))
        else:
            yield random_diagram(n, rng, args.labels), random_diagram(n, rng, args.labels)


def _run_pair_check(args, check, name: str, same_through: bool) -> int:
    if args.pair:
        pairs = [(parse_diagram(args.pair[0], args.n), parse_diagram(args.pair[1], args.n))]
    else:
        pairs = _random_pairs(args, same_through)
    total = bad = 0
    for c, d in pairs:
        total += 1
        if not check(c, d):
            bad += 1
            print(f"FAIL {name}: c={c} d={d}")
    print(f"{name}: {total - bad}/{total} pass")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_lemma42(args) -> int:
    return _run_pair_check(args, check_lemma42, "lemma42", True)


def cmd_lemma45(args) -> int:
    return _run_pair_check(args, check_lemma45, "lemma45", False)


def cmd_ideal(args) -> int:
    ks = [args.k] if args.k is not None else list(range(args.n + 1))
    ok = True
    for k in ks:
        res = check_ideal(args.n, k, args.samples, args.seed, args.labels)
        ok &= res
        print(f"J_{k} (n={args.n}): {'pass' if res else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affine-brauer", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND})")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--format", choices=["text", "json", "tikz"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200)
    common.add_argument("--labels", type=parse_labels, default=(-3, 3), metavar="MIN..MAX")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("word", parents=[common], help="evaluate a generator word")
    p.add_argument("word", nargs="*")
    p.set_defaults(func=cmd_word, need_n=True)

    p = sub.add_parser("flip", parents=[common], help="apply the reflection involution")
    p.add_argument("operand")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("decompose", parents=[common], help="split a diagram into dangles and a wreath element")
    p.add_argument("operand")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("phi", parents=[common], help="pair an up dangle with a down dangle")
    p.add_argument("up", help="dangle JSON or @file")
    p.add_argument("down", help="dangle JSON or @file")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("enumerate", parents=[common], help="list diagrams")
    p.add_argument("--flat", action="store_true", help="label-0 diagrams only")
    p.set_defaults(func=cmd_enumerate, need_n=True)

    p = sub.add_parser("relations", parents=[common], help="verify relations (a)-(o)")
    p.add_argument("--a-max", type=int, default=4)
    p.set_defaults(func=cmd_relations, need_n=True)

    p = sub.add_parser("ideal-check", parents=[common], help="randomized ideal check of J_k")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_ideal, need_n=True)

    for verb, func in (("lemma42", cmd_lemma42), ("lemma45", cmd_lemma45)):
        p = sub.add_parser(verb, parents=[common], help=f"check {verb} on a pair or random pairs")
        p.add_argument("pair", nargs="*", help="two diagrams; random pairs when omitted")
        p.set_defaults(func=func, need_n=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "need_n", False) and args.n is None:
        parser.error(f"{args.verb} requires --n")
    if getattr(args, "pair", None) and len(args.pair) != 2:
        parser.error(f"{args.verb} takes exactly two diagrams or none")
    try:
        return args.func(args)
    except (InputError, RingParseError, WordParseError, DiagramError, ValueError, KeyError,
            TypeError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
