"""Shotgun assembly of Linial-Meshulam random complexes.

Sampling of Y_d(n, p), anonymized 1-neighbourhood extraction, exact
fingerprint reconstruction, canonical forms for small face-sets, and the
Monte Carlo / numerical verification harness around them.
"""

from .complexes import (
    Complex,
    DimensionError,
    Fragment,
    FourTupleStats,
    NeighbourPairStats,
    as_simplex,
)
from .isomorphism import CanonicalForm, canonical_form, complexes_isomorphic, is_isomorphic
from .reconstruction import (
    AmbiguityReport,
    CollectionError,
    NeighbourhoodCollection,
    RootedNeighbourhood,
    center_fingerprints,
    extract_collection,
    reconstruct,
    verify_exact,
)
from .sampler import LMParams, degree_law_check, enumerate_complexes, p_from_alpha, sample_lm

__version__ = "0.1.0"

__all__ = [
    "AmbiguityReport",
    "CanonicalForm",
    "CollectionError",
    "Complex",
    "DimensionError",
    "Fragment",
    "FourTupleStats",
    "LMParams",
    "NeighbourPairStats",
    "NeighbourhoodCollection",
    "RootedNeighbourhood",
    "as_simplex",
    "canonical_form",
    "center_fingerprints",
    "complexes_isomorphic",
    "degree_law_check",
    "enumerate_complexes",
    "extract_collection",
    "is_isomorphic",
    "p_from_alpha",
    "reconstruct",
    "sample_lm",
    "verify_exact",
]
