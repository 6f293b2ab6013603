"""Exception types shared across the package."""


class GrasscodeError(ValueError):
    """Malformed input: bad matrix, wrong dimensions, invalid parameters."""


class OutOfRangeError(GrasscodeError):
    """An index or parameter lies outside its admissible range."""
