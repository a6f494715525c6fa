"""Koszul algebra classification for m-primary monomial ideals in k[x, y, z]."""

from .classify import (
    AuditRecord,
    InvariantReport,
    KoszulClass,
    RationalSeries,
    audit_conjectures,
    bass_series,
    canonical_betti_oracle,
    classify,
    classify_generic,
    expand_series,
    family_bclass,
    family_staircase,
    family_tnongen,
)
from .fields import GF32003, QQ, get_field
from .generators import GeneratorConfig, random_generic_ideal, random_ideal
from .invariants import (
    BassData,
    CanonicalPresentation,
    bass_mu0_mu1,
    build_canonical_presentation,
    count_p_structural,
    dependent_row_count,
    dependent_row_count_generic,
)
from .koszul import (
    HomologyAlgebra,
    KoszulModel,
    build_homology_algebra,
    build_koszul_model,
    canonical_a1_generators,
    homology_dims,
    rank_a1_a2,
    rank_a1_squared,
    rank_delta2,
    truncated_exterior_check,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    StandardBasis,
    divides,
    format_ideal,
    is_complete_intersection,
    is_generic,
    is_primary_artinian,
    lcm,
    parse_ideal,
    standard_monomials,
    strictly_divides,
    strongly_divides,
)
from .resolution import (
    MultigradedMatrix,
    Resolution,
    SyzygyVector,
    build_resolution,
    ordered_minimal_second_syzygies,
    resolution_for,
    scarf_resolution,
    second_syzygy,
    verify_resolution,
)

__version__ = "0.1.0"
