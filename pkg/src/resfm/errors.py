"""Exception hierarchy shared by all resfm modules."""


class ResfmError(Exception):
    """Base class for all resfm errors."""


class InvalidPattern(ResfmError):
    """A structural pattern violates its declared dimensions or has duplicates."""


class FailureOutsideLinks(ResfmError):
    """A failure set references communication links not present in the link set."""


class DimensionMismatch(ResfmError):
    """Numeric matrices do not conform to the expected shapes."""


class PerfectMatchingRequired(ResfmError):
    """The state bipartite graph has no perfect matching, so the full
    co-design route is unavailable (the stabilization-only route is not)."""


class NotControllable(ResfmError):
    """The pair (state pattern, actuator set) is not structurally controllable."""


class NotObservable(ResfmError):
    """The pair (state pattern, sensor set) is not structurally observable."""


class EmptyMatching(ResfmError):
    """Sequential pairing needs at least one matched actuator-sensor pair."""


class InfeasibleAfterExclusion(ResfmError):
    """No further disjoint sparsest information pattern exists: the
    actuator-to-sensor reachability graph is exhausted."""


class LimitExceeded(ResfmError):
    """An exact search was requested beyond its configured size limits."""


class Infeasible(ResfmError):
    """No point satisfies the constraint set (for gain synthesis: the system
    cannot be stabilized under the given information pattern and failures)."""


class MaxIterations(ResfmError):
    """Iteration cap reached before the termination test was met.

    For the gain-synthesis loop the best iterate found so far is attached to
    ``best_gain`` / ``best_state`` / ``cost_trace``.
    """

    def __init__(self, message, *, best_gain=None, best_state=None, cost_trace=None):
        super().__init__(message)
        self.best_gain = best_gain
        self.best_state = best_state
        self.cost_trace = cost_trace


class NumericalBreakdown(ResfmError):
    """The numeric solver lost positive definiteness or produced non-finite values."""


class ParseError(ResfmError):
    """A system / solution / gain file could not be parsed."""


class VerificationFailed(ResfmError):
    """A constructed co-design solution failed its own resilience check."""
