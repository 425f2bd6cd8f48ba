"""Exceptions raised by the hurwitz_strata package."""


class StrataError(Exception):
    """Base class for all errors raised by this package."""


class NotHomogeneous(StrataError):
    """A polynomial mixes monomials of different weighted degree."""


class ZeroPolynomial(StrataError):
    """An operation needs a nonzero polynomial."""


class PartitionSyntaxError(StrataError, ValueError):
    """A partition label could not be parsed."""


class ExpressionSyntaxError(StrataError, ValueError):
    """A class expression typed by the user could not be parsed."""


class NegativeSimplePoints(StrataError):
    """The Riemann-Hurwitz count of simple critical values is negative."""


class SystemNotSquare(StrataError):
    """The number of vanishing constraints differs from the number of unknowns."""


class InconsistentSystem(StrataError):
    """An undetermined-coefficients system has no exact solution."""


class UnderDeterminedSystem(StrataError):
    """An undetermined-coefficients system has more than one solution."""


class MalformedClass(StrataError):
    """A class on the universal curve cannot be put into canonical form."""


class PoleObstruction(StrataError):
    """A factor of a pushed product is not annihilated by the pole divisor."""


class ConventionMismatch(StrataError):
    """An assembled stratum class disagrees with the stored table."""


class UnknownLabel(StrataError, KeyError):
    """No stored data exists for the requested label."""


class UnknownCheck(StrataError, KeyError):
    """A requested check name is not registered."""


class UnknownMonomialDegree(StrataError):
    """A class contains a monomial whose degree is not tabulated."""


class DimensionMismatch(StrataError):
    """A psi-exponent vector does not match the dimension of the moduli space."""


class TooLarge(StrataError):
    """A reduced partition does not fit into the requested number of sheets."""


class ResourceBound(StrataError):
    """A symmetric-group computation exceeds the configured degree bound."""
