"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class DegenerateAngleError(DomainError):
    """The sensing angle sits at cos(theta) = 0, where intracell couplings
    vanish and ratio- or recursion-based operations are undefined."""


class SizeLimitError(DomainError):
    """Requested excitation number exceeds the dense-solver ceiling."""


class NumericFailureError(RuntimeError):
    """A numerical routine produced non-finite values or failed to converge."""
