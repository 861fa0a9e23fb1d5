"""Presentations of multiparameter persistent homology.

Build the chain complex of free N^r-graded modules presenting the n-th
homology of a compact multifiltered simplicial complex, evaluate it
grade by grade over exact fields, cross-check against direct simplicial
homology, and export to CAS formats.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionError,
    EmptyIdealError,
    HomogeneityError,
    IncompleteInputError,
    InternalInconsistencyError,
    MultipresError,
    NoElementBelowError,
    NotAMultifiltrationError,
    ParseError,
    SchemaError,
    UnsupportedDialectError,
    ValidationFailedError,
)
from .grades import (
    Antichain,
    Grade,
    format_grade,
    grades_below,
    join,
    join_all,
    leq,
    lex_min_below,
    minimal_elements,
    sat_contains,
)
from .matrices import FreeGradedModule, GradedMatrix, ModuleGenerator, hconcat
from .setfiltration import (
    SetMultifiltration,
    SetPresentation,
    free_presentation,
    from_tabulated,
    from_tabulated_doc,
    modules_isomorphic,
    to_monomial_ideal,
)
from .simplicial import (
    MultifilteredComplex,
    SimplicialComplex,
    ValidationReport,
    Violation,
    close_births,
    face,
    simplex_label,
)
from .presentation import (
    PresentationComplex,
    ambient_boundary_matrix,
    ambient_module,
    difference_matrix,
    generator_module,
    induced_face_matrix,
    pair_module,
    presentation_complex,
)
from .homology import (
    GF2,
    FieldSpec,
    HilbertTable,
    OracleReport,
    evaluate_at,
    hilbert,
    homology_dim_at,
    matrix_rank,
    oracle_check,
    simplicial_homology_dim,
)
from .export import (
    bundle_to_json,
    export_cas,
    filtration_from_doc,
    import_filtration,
    macaulay2_script,
    presentation_bundle,
    presentation_from_bundle,
)

__all__ = [
    "Antichain",
    "DimensionError",
    "EmptyIdealError",
    "FieldSpec",
    "FreeGradedModule",
    "GF2",
    "Grade",
    "GradedMatrix",
    "HilbertTable",
    "HomogeneityError",
    "IncompleteInputError",
    "InternalInconsistencyError",
    "ModuleGenerator",
    "MultifilteredComplex",
    "MultipresError",
    "NoElementBelowError",
    "NotAMultifiltrationError",
    "OracleReport",
    "ParseError",
    "PresentationComplex",
    "SchemaError",
    "SetMultifiltration",
    "SetPresentation",
    "SimplicialComplex",
    "UnsupportedDialectError",
    "ValidationFailedError",
    "ValidationReport",
    "Violation",
    "ambient_boundary_matrix",
    "ambient_module",
    "bundle_to_json",
    "close_births",
    "difference_matrix",
    "evaluate_at",
    "export_cas",
    "face",
    "filtration_from_doc",
    "format_grade",
    "free_presentation",
    "from_tabulated",
    "from_tabulated_doc",
    "generator_module",
    "grades_below",
    "hconcat",
    "hilbert",
    "homology_dim_at",
    "import_filtration",
    "induced_face_matrix",
    "join",
    "join_all",
    "leq",
    "lex_min_below",
    "macaulay2_script",
    "matrix_rank",
    "minimal_elements",
    "modules_isomorphic",
    "oracle_check",
    "pair_module",
    "presentation_bundle",
    "presentation_complex",
    "presentation_from_bundle",
    "sat_contains",
    "simplex_label",
    "simplicial_homology_dim",
    "to_monomial_ideal",
]
