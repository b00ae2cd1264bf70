"""Exact computations with ideal families of local self-injective algebras,
their endomorphism algebras and the 1-quasi-hereditary axioms."""

from .field import FieldSpec
from .kernels import BACKEND
from .linalg import Matrix, Subspace, kernel_basis, rref
from .poset import Poset
from .algebra import FreePresentation, from_free_presentation, radical_chain
from .ideals import check_condition_ma, ideal_from_generator, opposite_transport
from .endo import build_endo, extract_quiver
from .relations import corner_pair, extract_relations, verify_relations
from .qh import check_1qh
from .duality import check_bgg, ringel_transfer, self_duality_permutation
from .problem import load_problem, parse_problem, render_problem

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FieldSpec", "FreePresentation", "Matrix", "Poset", "Subspace",
    "build_endo", "check_1qh", "check_bgg", "check_condition_ma", "corner_pair",
    "extract_quiver", "extract_relations", "from_free_presentation", "ideal_from_generator",
    "kernel_basis", "load_problem", "opposite_transport", "parse_problem", "radical_chain",
    "render_problem", "ringel_transfer", "rref", "self_duality_permutation", "verify_relations",
]
