"""Exact arithmetic for the 5-dimensional twist representation of the
genus-2 mapping class group, its h-adic Torelli filtration, and the
isotypic decomposition of its degree-0 conjugation module."""

from .rings import LaurentPoly, TruncSeries, exp_series, laurent_to_series
from .matrices import (
    SquareMatrix,
    adjugate,
    determinant_by_permutations,
    exact_rank,
    matrix_determinant,
    matrix_inverse,
    matrix_trace,
    series_matrix_valuation,
)
from .linkpatterns import LinkPattern, enumerate_link_patterns, loop_value, tl_generator
from .tableaux import partitions, syt_count
from .words import MCGWord, abelianization_class, evaluate_word, parse_word
from .symplectic import is_torelli, symplectic_generators, symplectic_image
from .presentation import RelationReport, check_presentation
from .rep import (
    Normalization,
    RepDefinition,
    build_rep,
    rep_from_document,
    rep_to_document,
    search_valid_rep,
    solve_normalization,
    validate_representation,
)
from .filtration import (
    DEFAULT_ORDER,
    FiltrationReport,
    analyze,
    check_bracket,
    check_delta_additivity,
    check_equivariance,
    degree0_matrix,
    verify_det_lemma,
    word_series,
)
from .characters import CharacterTable, mn_character
from .isotypic import (
    ConjugationModule,
    decompose_conjugation_module,
    isotypic_projector,
    project_trivial,
)
from .sp4 import weyl_dim_c2, weight_multiplicity_dim
from .catalog import builtin_catalog, load_catalog, parse_catalog

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "TruncSeries", "exp_series", "laurent_to_series",
    "SquareMatrix", "adjugate", "determinant_by_permutations", "exact_rank",
    "matrix_determinant", "matrix_inverse", "matrix_trace",
    "series_matrix_valuation",
    "LinkPattern", "enumerate_link_patterns", "loop_value", "tl_generator",
    "partitions", "syt_count",
    "MCGWord", "abelianization_class", "evaluate_word", "parse_word",
    "is_torelli", "symplectic_generators", "symplectic_image",
    "RelationReport", "check_presentation",
    "Normalization", "RepDefinition", "build_rep", "rep_from_document",
    "rep_to_document", "search_valid_rep", "solve_normalization",
    "validate_representation",
    "DEFAULT_ORDER", "FiltrationReport", "analyze", "check_bracket",
    "check_delta_additivity", "check_equivariance", "degree0_matrix",
    "verify_det_lemma", "word_series",
    "CharacterTable", "mn_character",
    "ConjugationModule", "decompose_conjugation_module", "isotypic_projector",
    "project_trivial",
    "weyl_dim_c2", "weight_multiplicity_dim",
    "builtin_catalog", "load_catalog", "parse_catalog",
]
