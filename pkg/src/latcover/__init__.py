"""Exact enumeration of minimal lattice coverings of Z^2 and the
certificates deciding extraordinariness of dihedral binary forms.
"""

from .catalog import (
    Catalog,
    CatalogEntry,
    generate_catalog,
    parse,
    serialize,
    verify_catalog,
)
from .enumeration import enumerate_minimal_coverings, raw_solutions
from .forms import (
    BinaryForm,
    cross_value_check,
    dagger,
    discriminant,
    extraordinary_by_C3,
    sextic,
)
from .groebner import verify_pair_lemma, verify_triple_lemma
from .lattices import Subgroup, canonicalize, index, intersect, is_cover, lattice_of
from .mat2 import RatMat2, parse_mat2
from .modular import run_all_scans

__all__ = [
    "BinaryForm",
    "Catalog",
    "CatalogEntry",
    "RatMat2",
    "Subgroup",
    "canonicalize",
    "cross_value_check",
    "dagger",
    "discriminant",
    "enumerate_minimal_coverings",
    "extraordinary_by_C3",
    "generate_catalog",
    "index",
    "intersect",
    "is_cover",
    "lattice_of",
    "parse",
    "parse_mat2",
    "raw_solutions",
    "run_all_scans",
    "serialize",
    "sextic",
    "verify_catalog",
    "verify_pair_lemma",
    "verify_triple_lemma",
]

__version__ = "1.0.0"
