"""Standard decompositions into Orlik blocks for integral monodromy of
quasihomogeneous singularities, with exact lattice certificates."""

from .errors import ConsistencyError, ValidationError
from .polyarith import IntPolynomial, cyclotomic, resultant
from .divisor import Divisor
from .singular import Chain, Cycle, Sum, Weights, WeightSystem, decompose, link_homology
from .certify import certify

__all__ = [
    "ConsistencyError", "ValidationError", "IntPolynomial", "cyclotomic", "resultant",
    "Divisor", "Chain", "Cycle", "Sum", "Weights", "WeightSystem", "decompose",
    "link_homology", "certify",
]
