"""Shared exception types."""


class DomainError(ValueError):
    """A parameter lies outside its mathematical domain.

    The message names the violated inequality, e.g. ``w = L - W = -4.6
    not > 0``.
    """


class EigenConvergenceError(RuntimeError):
    """QR iteration exhausted its sweep budget.

    Raised instead of returning partially converged values.  ``lo`` and
    ``hi`` bound the active diagonal block that failed to deflate.
    """

    def __init__(self, lo, hi, sweeps):
        self.lo = int(lo)
        self.hi = int(hi)
        self.sweeps = int(sweeps)
        super().__init__(
            "QR iteration did not converge within %d sweeps; "
            "unconverged block rows %d..%d" % (self.sweeps, self.lo, self.hi)
        )
