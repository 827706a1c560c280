"""Classical and affine Brauer algebras with exact coefficients.

Submodules: ``ring`` (Z[d0, d1, ...]), ``diagram`` (colored diagrams),
``concat`` (stacking and loop removal), ``algebra`` (products, generators,
relations), ``wreath`` (Z wr S_k and A_k), ``cellular`` (dangles, phi_k,
the through-strand filtration) and ``cli``.
"""

from .algebra import (AlgebraElement, GeneratorName, check_relations, classical_multiply,
                      evaluate_word, generator, involution_i, multiply, parse_word)
from .cellular import (Dangle, DecompositionTriple, check_ideal, check_lemma42, check_lemma45,
                       decompose, filtration_project, phi, reconstruct)
from .concat import BACKEND, ConcatResult, concatenate, loop_coefficient
from .diagram import (ColoredDiagram, Node, diagram_key, enumerate_flat, flip, identity,
                      make_diagram, random_diagram, through_count)
from .ring import RingElem, delta, ring_add, ring_eval, ring_mul
from .wreath import GroupAlgebraElem, WreathElem, group_algebra_mul, sigma, wreath_mul

__version__ = "0.1.0"
