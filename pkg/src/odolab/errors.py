"""Domain errors raised by odolab.

Every exception name is part of the public contract: the CLI reports the
class name verbatim and maps any of these to exit code 1.
"""


class OdolabError(Exception):
    """Base class for all domain errors in this package."""


# -- scale validation ---------------------------------------------------------

class BadFirstEntry(OdolabError):
    """First scale entry is smaller than 2."""


class NotIncreasing(OdolabError):
    """A scale entry does not strictly exceed its predecessor."""


class DivisibilityViolation(OdolabError):
    """A scale entry does not divide its successor."""


# -- odometer points and digit expansions -------------------------------------

class OutOfRange(OdolabError):
    """An integer argument lies outside the range covered by the scale."""


class LevelMismatch(OdolabError):
    """Operands live at incompatible truncation levels or scales."""


class GammaOfZero(OdolabError):
    """The carry-reduction map is undefined at zero."""


# -- dual group ----------------------------------------------------------------

class NotInGroup(OdolabError):
    """A root of unity whose order does not divide the truncated group order."""


# -- length functions ----------------------------------------------------------

class DomainNotSubgroup(OdolabError):
    """A length table whose domain is not a finite subgroup of the dual."""


class AxiomViolation(OdolabError):
    """A length table that fails one of the length-function axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SublevelNotSubgroup(OdolabError):
    """Diagnostic: a sublevel set failed the subgroup check during classification."""


# -- harmonic analysis ----------------------------------------------------------

class ScaleTooShallow(OdolabError):
    """The length specification does not cover the level of the function."""


class NotRealValued(OdolabError):
    """A real-valued function was required."""


class LevelOverflow(OdolabError):
    """A function level beyond the depth of its scale was requested."""


# -- cohomology ------------------------------------------------------------------

class NonzeroMean(OdolabError):
    """The mean-zero obstruction to solving the cohomological equation."""


# -- K-theory ---------------------------------------------------------------------

class NonIntegerValues(OdolabError):
    """A class with non-integer values where integrality is required."""


class NotAProjection(OdolabError):
    """A function with values outside {0, 1} used where a projection is required."""
