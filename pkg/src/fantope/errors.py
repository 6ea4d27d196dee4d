"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Malformed input: wrong shape, non-finite entries, out-of-range parameter."""


class NumericalFailure(RuntimeError):
    """A dense linear-algebra routine failed to converge or returned garbage."""


class NotConverged(RuntimeError):
    """Iterative solver hit max_iters before meeting its residual tolerances.

    Carries the partial solution so callers can inspect or resume.
    """

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class InfeasibleConstraint(ValueError):
    """A constraint level that no feasible point can satisfy (e.g. R < k)."""


class SearchFailure(RuntimeError):
    """A parameter search failed to bracket its target; carries the trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = tuple(trace or ())


class GapCollapsed(RuntimeError):
    """An eigenvalue gap required by a procedure is zero or negative."""


class SpsViolated(ValueError):
    """The population matrix lacks the spectral structure a check requires."""


class DegenerateModel(RuntimeError):
    """Model generation produced a degenerate instance (after retries)."""
