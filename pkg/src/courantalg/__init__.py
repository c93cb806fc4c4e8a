"""Leibniz cohomology and exact Courant algebras in exact arithmetic."""

from .errors import (
    BadScalarError,
    BaseMismatchError,
    CourantAlgError,
    DimensionMismatchError,
    DocumentError,
    DocumentSyntaxError,
    DuplicateEntryError,
    FieldMismatchError,
    InvalidRepresentationError,
    NotACocycleError,
    NotADifferentialError,
    NotALieModuleError,
    NotAnAutomorphismError,
    NotAnIdealError,
    NotSurjectiveError,
    UnknownBasisNameError,
    ValueOutsideKernelError,
)
from .linalg import (
    GF,
    QQ,
    Field,
    FpElement,
    LinearMap,
    Matrix,
    PrimeField,
    Rationals,
    field_from_string,
)
from .algebra import (
    AlgebraKindReport,
    AlgebraPresentation,
    DifferentialLieAlgebra,
    Representation,
    RepresentationReport,
    bracket_eval,
    check_algebra,
    check_representation,
    derived_bracket,
    leibniz_kernel,
    quotient_algebra,
    self_representation,
    trivial_representation,
)
from .cohomology import (
    DEFAULT_MAX_DEGREE,
    Cochain,
    CohomologyReport,
    coboundary,
    coboundary_matrix,
    cohomologous,
    cohomology,
    is_coboundary,
    is_cocycle,
)
from .courant import (
    AutomorphismSpace,
    Classification,
    CourantAlgebra,
    CourantMorphism,
    CourantReport,
    ExactCourantPresentation,
    IsomorphismVerdict,
    Section,
    are_isomorphic,
    automorphism_from_cocycle,
    automorphism_space,
    characteristic_class,
    check_courant,
    choose_section,
    classify,
    cocycle_from_automorphism,
    extract_cocycle,
    from_cocycle,
    hemisemidirect,
    induced_actions,
    is_exact,
    kernel_basis,
    morphism_violations,
    normalize,
)
from .documents import (
    Document,
    NamedCochain,
    parse_document,
    serialize_document,
)
from .catalog import CatalogEntry, catalog, catalog_entry

__version__ = "0.1.0"
