"""Exception and warning types shared across the toolkit."""


class MasenseError(Exception):
    """Base class for all toolkit errors."""


class InfeasibleSfp(MasenseError):
    """A (u, v) spatial-frequency pair lies outside the unit disk."""


class BadSubarray(MasenseError):
    """Subarray size violates the spatial-smoothing bounds."""


class InsufficientPeaks(MasenseError):
    """Fewer separated pseudo-spectrum peaks than requested paths."""


class SearchSpaceTooLarge(MasenseError):
    """Factorial permutation search refused for too many paths."""


class DiagnosticWarning(UserWarning):
    """Base class for non-fatal diagnostics."""


class FrontSideViolationWarning(DiagnosticWarning):
    """A path arrives from the back side of the plate."""


class IllConditionedWarning(DiagnosticWarning):
    """A least-squares system is nearly singular; result still returned."""


class NoFeasiblePointWarning(DiagnosticWarning):
    """Every orientation restart ended constraint-infeasible."""


class SingularScaleWarning(DiagnosticWarning):
    """Noise level is zero, so the information-matrix scale is undefined."""
