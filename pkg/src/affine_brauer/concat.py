"""Stacking two colored diagrams and extracting closed loops.

The tracer itself lives in a compiled extension (``_concat``) when it is
available and in ``_concat_py`` otherwise.  Set ``AFFINE_BRAUER_PURE=1`` to
force the fallback; :data:`BACKEND` names the one in use.
"""

from __future__ import annotations

import os
from typing import NamedTuple

from . import _concat_py
from .diagram import ColoredDiagram, DiagramError
from .ring import RingElem

__all__ = [
    "ConcatResult",
    "DimensionMismatchError",
    "concatenate",
    "loop_coefficient",
    "BACKEND",
    "set_backend",
]

_compiled = None
if not os.environ.get("AFFINE_BRAUER_PURE"):
    try:
        from . import _concat as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_kernel = _compiled.concat_kernel if _compiled is not None else _concat_py.concat_kernel


def set_backend(name: str) -> None:
    """Switch between ``"cython"`` and ``"python"`` at runtime (tests, benchmarks)."""
    global BACKEND, _kernel
    if name == "python":
        _kernel = _concat_py.concat_kernel
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled extension not built")
        _kernel = _compiled.concat_kernel
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


def compiled_available() -> bool:
    return _compiled is not None


class DimensionMismatchError(DiagramError):
    pass


class ConcatResult(NamedTuple):
    diagram: ColoredDiagram
    loop_labels: tuple[int, ...]  # sorted absolute values, one per removed loop


def concatenate(x: ColoredDiagram, y: ColoredDiagram) -> ConcatResult:
    """Place ``x`` above ``y``, glue ``x``'s bottom row to ``y``'s top row."""
    if x.n != y.n:
        raise DimensionMismatchError(f"cannot stack n={x.n} over n={y.n}")
    try:
        partner, label, loops = _kernel(x.n, x.partner, x.label, y.partner, y.label)
    except OverflowError:
        partner, label, loops = _concat_py.concat_kernel(x.n, x.partner, x.label, y.partner, y.label)
    # loop traversal direction is arbitrary; the coefficient only sees |l|
    return ConcatResult(ColoredDiagram(x.n, partner, label), tuple(sorted(abs(v) for v in loops)))


def loop_coefficient(label: int) -> RingElem:
    return RingElem.var(abs(label))


def loops_coefficient(loop_labels) -> RingElem:
    exps: dict[int, int] = {}
    for v in loop_labels:
        exps[abs(v)] = exps.get(abs(v), 0) + 1
    return RingElem._raw({tuple(sorted(exps.items())): 1})
