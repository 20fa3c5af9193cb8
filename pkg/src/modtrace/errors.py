"""Exception types raised by modtrace."""


class CoherenceError(ValueError):
    """Base class for invalid-input errors."""


class NotHermitianError(CoherenceError):
    pass


class NotPSDError(CoherenceError):
    pass


class InvalidStateError(CoherenceError):
    """A matrix fails density-matrix validation (trace, positivity, shape)."""


class DimensionMismatchError(CoherenceError):
    pass


class WrongDimensionError(CoherenceError):
    pass


class DimensionTooLargeError(CoherenceError):
    pass


class BadParameterError(CoherenceError):
    pass


class BlochOutOfBallError(CoherenceError):
    pass


class IndexOutOfRangeError(CoherenceError):
    pass


class NotIncoherentError(CoherenceError):
    pass


class NoConvergenceError(RuntimeError):
    """An iterative routine exhausted its iteration budget."""


class NoSignChangeError(CoherenceError):
    """A bisection bracket has the same sign at both ends."""

    def __init__(self, lo, hi, g_lo, g_hi):
        super().__init__(f"no sign change on [{lo}, {hi}]: g({lo}) = {g_lo:.9g}, g({hi}) = {g_hi:.9g}")
        self.lo, self.hi, self.g_lo, self.g_hi = lo, hi, g_lo, g_hi
