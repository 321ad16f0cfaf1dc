"""Exception types shared by all evaluators."""


class LegasymError(Exception):
    """Base class for all library errors."""


class DomainError(LegasymError):
    """A hypothesis of the requested estimate or expansion is violated.

    The message names the violated condition so callers (and the CLI) can
    report which hypothesis failed.
    """


class PoleError(LegasymError):
    """Evaluation was requested at, or within 1e-8 of, a gamma pole."""


class ConvergenceError(LegasymError):
    """A convergent reference series failed to reach its tolerance."""


class NearZeroDivisor(LegasymError):
    """A connection-formula divisor is too close to zero to certify."""
