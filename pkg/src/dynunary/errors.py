"""Exception types raised across the package."""


class MalformedUnaryError(ValueError):
    """A bit string does not parse as a sequence of terminus-first unary codes."""


class MalformedConstructError(ValueError):
    """A string is not a valid construct output for the given anchor."""


class GoldenParseError(ValueError):
    """Embedded golden data failed to parse or violated a structural check."""


class BudgetExceededError(RuntimeError):
    """An enumeration or file request exceeded the configured resource budget."""


class OrbitBoundError(RuntimeError):
    """A combined orbit walk failed to recur within its guaranteed bound."""
