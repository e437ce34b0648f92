"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph input or an invalid request on a graph."""


class InvalidFamilyError(GraphError):
    pass


class InvalidPairError(GraphError):
    pass


class Graph6Error(GraphError):
    """Text that is not a valid graph6 / edge-list encoding."""


class BudgetExceeded(RuntimeError):
    """A search ran past its configured node limit.

    ``lower_bound`` is filled in by the distinguishing solvers: it is the
    largest label count already proven insufficient plus one.
    """

    def __init__(self, what: str, limit: int, count: int, lower_bound: int | None = None):
        self.what = what
        self.limit = limit
        self.count = count
        self.lower_bound = lower_bound
        msg = f"{what}: budget of {limit} exceeded after {count}"
        if lower_bound is not None:
            msg += f" (proven lower bound {lower_bound})"
        super().__init__(msg)


class SearchTimeout(BudgetExceeded):
    def __init__(self, what: str, count: int, lower_bound: int | None = None):
        RuntimeError.__init__(self, f"{what}: deadline passed after {count} nodes")
        self.what = what
        self.limit = count
        self.count = count
        self.lower_bound = lower_bound


class UndefinedIndexError(ValueError):
    """The distinguishing index does not exist for this graph."""


class NoEdgesError(UndefinedIndexError):
    pass


class NonFaithfulActionError(UndefinedIndexError):
    pass


class PreconditionError(ValueError):
    """A named hypothesis of a construction does not hold."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"precondition failed: {hypothesis}" + (f" ({detail})" if detail else ""))
