"""Exception types shared across the package."""


class CourantAlgError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(CourantAlgError):
    """Operands have incompatible dimensions."""


class FieldMismatchError(CourantAlgError):
    """Operands belong to different scalar fields."""


class InvalidRepresentationError(CourantAlgError):
    """The coefficient space fails the two-action compatibility axioms."""


class NotADifferentialError(CourantAlgError):
    """The declared differential is not square-zero or not a bracket derivation."""


class NotAnIdealError(CourantAlgError):
    """The given subspace is not closed under bracket multiplication."""


class NotACocycleError(CourantAlgError):
    """The given cochain has a nonzero coboundary."""


class NotALieModuleError(CourantAlgError):
    """The given action matrices do not define a Lie-algebra module."""


class NotSurjectiveError(CourantAlgError):
    """The projection does not reach the whole base."""


class ValueOutsideKernelError(CourantAlgError):
    """A vector expected to lie in the projection kernel does not."""


class NotAnAutomorphismError(CourantAlgError):
    """The given linear map violates one of the morphism conditions."""


class BaseMismatchError(CourantAlgError):
    """The two structures are not presented over the same base algebra."""


class DocumentError(CourantAlgError):
    """Base class for problems with the JSON document format."""


class DocumentSyntaxError(DocumentError):
    """The document is not valid JSON or violates the schema."""


class UnknownBasisNameError(DocumentError):
    """A bracket, action or cochain refers to an undeclared basis name."""


class BadScalarError(DocumentError):
    """A scalar string does not parse under the declared field."""


class DuplicateEntryError(DocumentError):
    """The same table slot is given twice."""
