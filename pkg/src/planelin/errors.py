"""Domain errors raised by the kernel.

Every error the CLI reports by name derives from :class:`PlanelinError`.
"""


class PlanelinError(Exception):
    """Base class for domain failures."""


class FieldMismatch(PlanelinError):
    """Operands live over different fields."""


class SingularMatrix(PlanelinError):
    """A matrix that must be invertible has determinant zero."""


class ParseError(PlanelinError):
    """Text input does not match the grammar.

    Attributes:
        offset: Byte offset into the UTF-8 encoded input.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NotAnAutomorphism(PlanelinError):
    """Degree reduction stalled or the residual affine part is singular."""


class SpecViolation(PlanelinError):
    """An amalgam instance broke the coset representative contract."""


class NeedsHWitness(PlanelinError):
    """Conjugating an element of A requires a hypothesis H witness."""


class BadShape(PlanelinError):
    """A polynomial does not have the required shape (e.g. f not in t^2 K[t])."""


class NotInAut1(PlanelinError):
    """The automorphism does not fix the origin with identity differential."""


class NotInGL1(PlanelinError):
    """The matrix is not in GL_1(2, K[t])."""


class InternalAssertion(PlanelinError):
    """An internal consistency check failed."""


class ZeroVector(PlanelinError):
    """The zero vector has no degree or highest component."""


class LawViolation(PlanelinError):
    """A degree law did not hold."""


class SectionInconsistency(PlanelinError):
    """An orbit section failed a multiplicativity or stabilizer check."""


class ImageCapExceeded(PlanelinError):
    """The finite image grew beyond the configured cap."""


class CosetError(PlanelinError):
    """An element fell outside every coset of the subgroup."""


class IsIdentity(PlanelinError):
    """The identity has no hypothesis H witness."""


class NotInB0(PlanelinError):
    """The matrix is not lower triangular invertible."""


class NotInSubgroup(PlanelinError):
    """The differential at the origin is not reachable in the subgroup."""


class UnsupportedField(PlanelinError):
    """The operation is only defined over the rationals."""
