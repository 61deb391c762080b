"""Exception types shared across the package."""


class RangeError(ValueError):
    """A position or interval lies outside the valid range."""


class StateError(RuntimeError):
    """An operation is illegal in the current object state."""


class WidthError(ValueError):
    """A range-minimum query is wider than the construction-time limit."""
