"""Exact computations with 6-dimensional Drinfeld doubles and their Manin triples."""

from .bianchi import BianchiLabel, bianchi_classify, catalog_bianchi
from .catalog import PRIMARY_LABELS, catalog_on_grid, catalog_triple, default_grid
from .exactmath import ContractViolation, Matrix, Polynomial, char_poly, signature
from .invariants import (
    InvariantProfile,
    LeviRestrictionClass,
    MIACensus,
    SplitInvariant,
    center_form_signature,
    first_difference,
    invariant_profile,
    levi_restriction_class,
    mia_census,
    semisimple_split_coeffs,
)
from .isomorph import (
    DUALITY_WITNESS,
    PROOF_MATRICES,
    ClassificationReport,
    IsoCandidate,
    catalog_iso,
    compose,
    invert,
    search_iso,
    verify_double_iso,
    verify_matrix,
    verify_theorem,
)
from .liecore import LieAlgebra, SeriesProfile, Subspace, killing_gram, series_profile
from .manin import B, DoubleAlgebra, ManinTriple, axiom_report, build_double, dualize
from .specio import emit_report, emit_triple, parse_algebra, parse_document

__version__ = "0.1.0"

__all__ = [
    "B", "BianchiLabel", "ClassificationReport", "ContractViolation", "DUALITY_WITNESS", "DoubleAlgebra",
    "InvariantProfile", "IsoCandidate", "LeviRestrictionClass", "LieAlgebra", "MIACensus", "ManinTriple",
    "Matrix", "PRIMARY_LABELS", "PROOF_MATRICES", "Polynomial", "SeriesProfile", "SplitInvariant", "Subspace",
    "axiom_report", "bianchi_classify", "build_double", "catalog_bianchi", "catalog_iso", "catalog_on_grid",
    "catalog_triple", "center_form_signature", "char_poly", "compose", "default_grid", "dualize",
    "emit_report", "emit_triple", "first_difference", "invariant_profile", "invert", "killing_gram",
    "levi_restriction_class", "mia_census", "parse_algebra", "parse_document", "search_iso",
    "semisimple_split_coeffs", "series_profile", "signature", "verify_double_iso", "verify_matrix",
    "verify_theorem",
]
