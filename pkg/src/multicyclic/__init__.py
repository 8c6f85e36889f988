"""Multicyclic code construction over finite fields via tensor-product
primitive idempotents and cyclotomic orbits."""

from .codes import (
    CodeRecord,
    construct,
    k_profile,
    min_distance,
    product_bound,
    search,
)
from .gf import Field
from .linalg import GfMatrix, in_span, rank, rref
from .orbits import (
    DefiningSet,
    Orbit,
    all_orbits,
    closure,
    combinatorial_form,
    frobenius,
    orbit_of,
)
from .ring import Poly, Ring
from .spectral import (
    Spectrum,
    fourier,
    fourier_inverse,
    idempotent_from_set,
    primitive_idempotent,
    theta,
)

__all__ = [
    "CodeRecord", "DefiningSet", "Field", "GfMatrix", "Orbit", "Poly",
    "Ring", "Spectrum", "all_orbits", "closure", "combinatorial_form",
    "construct", "fourier", "fourier_inverse", "frobenius",
    "idempotent_from_set", "in_span", "k_profile", "min_distance",
    "orbit_of", "primitive_idempotent", "product_bound", "rank", "rref",
    "search", "theta",
]

__version__ = "0.1.0"
