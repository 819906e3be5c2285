"""Gray cubes, Θ₂ shapes, and Θ₂ objects as retracts of Gray cubes."""

from .cube import (Atom, CubeOneCell, NotAFunctorError, atomic_decompose, build_cube,
                   compose_cells, extend_from_atoms, hom_poset, rank_square)
from .gray import BlockSplit, block_embedding_first, block_embedding_second, gamma, verify_gray_relations
from .poset import FinitePoset, MonotoneMap, TotalOrder, interval, is_monotone, laxer_than, product
from .retract import RetractReport, idempotent_split, retraction, section, verify_retract
from .theta import ThetaShape, build_theta, rank_theta
from .twocat import (TwoCategory, TwoFunctor, check_axioms, check_functor, compose_functors,
                     equal_functors, identity_functor)

__all__ = [
    "Atom", "CubeOneCell", "NotAFunctorError", "atomic_decompose", "build_cube",
    "compose_cells", "extend_from_atoms", "hom_poset", "rank_square",
    "BlockSplit", "block_embedding_first", "block_embedding_second", "gamma",
    "verify_gray_relations",
    "FinitePoset", "MonotoneMap", "TotalOrder", "interval", "is_monotone", "laxer_than", "product",
    "RetractReport", "idempotent_split", "retraction", "section", "verify_retract",
    "ThetaShape", "build_theta", "rank_theta",
    "TwoCategory", "TwoFunctor", "check_axioms", "check_functor", "compose_functors",
    "equal_functors", "identity_functor",
]
