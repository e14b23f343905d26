"""Exception types shared across the package."""


class SpherexError(Exception):
    pass


class NotRationalError(SpherexError):
    """Raised when a cyclotomic value expected to be rational is not.

    Carries the canonical form for diagnostics.
    """

    def __init__(self, value):
        self.value = value
        super().__init__("not a rational number: %s" % (value,))


class NotRootOfUnityError(SpherexError):
    def __init__(self, value):
        self.value = value
        super().__init__("not a root of unity: %s" % (value,))


class ParameterError(SpherexError, ValueError):
    """Invalid family parameters or malformed group spec."""


class ResourceLimitError(SpherexError):
    """Group closure exceeded the configured element cap."""


class ConstructionError(SpherexError):
    """An internal construction invariant failed (indicates a bug)."""


class SpinCharacterError(SpherexError):
    """No valid square-root character, or an invalid override was supplied."""


class IrrationalXiError(SpherexError):
    """The reduced xi value was not rational; carries the cyclotomic residue."""

    def __init__(self, residue):
        self.residue = residue
        super().__init__("xi value is not rational: %s" % (residue,))


class CatalogError(SpherexError):
    """Irreducible catalog is incomplete or could not be completed."""
