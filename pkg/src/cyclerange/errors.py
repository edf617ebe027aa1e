"""Exception types raised by cyclerange."""


class ValidationError(ValueError):
    """Invalid input (bad weights, out-of-range parameters, malformed permutations)."""


class PreconditionError(ValidationError):
    """Input is well formed but violates an operation's mathematical precondition."""


class UnsupportedSize(ValidationError):
    """No closed-form result exists for this matrix size."""


class UnsupportedParity(ValidationError):
    """Operation is only defined for one parity of n."""


class NoRealRoot(ArithmeticError):
    """A polynomial expected to have a real root has none in its bracket."""
