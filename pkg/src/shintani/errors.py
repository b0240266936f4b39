"""Exception hierarchy for the library.

Mathematical invariant violations (signalling implementation bugs, not bad
user input) derive from InvariantViolation so callers can tell them apart.
"""


class ShintaniError(Exception):
    """Base class for all library errors."""


class ConfigError(ShintaniError):
    """Malformed configuration or unsupported parameter combination."""


class BudgetExceeded(ShintaniError):
    """An enumeration would exceed the configured point budget."""


class InvariantViolation(ShintaniError):
    """A mathematical invariant failed; indicates a bug, not a user error."""


# --- exact algebra ---

class NotTotallyReal(ShintaniError):
    pass


class Reducible(ShintaniError):
    pass


class ZeroElement(ShintaniError):
    pass


class BadIndexPrime(ShintaniError):
    pass


class PDenominator(ShintaniError):
    pass


class RamifiedLevel(ShintaniError):
    pass


class NotAUnit(ShintaniError):
    pass


# --- cones ---

class DegenerateSystem(InvariantViolation):
    """Symbolic Cramer determinant vanished identically; contradicts general position."""


class ResidualDegenerate(ShintaniError):
    pass


class NotInIdeal(ShintaniError):
    pass


# --- cocycle ---

class WrongDegree(ShintaniError):
    pass


class ExhaustedSearch(ShintaniError):
    pass


class ColmezViolation(ShintaniError):
    pass


# --- idele classes ---

class UnsupportedDegree(ShintaniError):
    pass


class UnsupportedModulus(ShintaniError):
    pass


class NotCoprime(ShintaniError):
    pass


class RamifiedAtP(ShintaniError):
    pass


class NotTotallyOdd(ShintaniError):
    pass


# --- smoothed evaluation ---

class GeneratorNotUnitAtQ(ShintaniError):
    pass


class PeriodDivisibleByQ(ShintaniError):
    pass


class SmoothingFactorVanishes(ShintaniError):
    pass
