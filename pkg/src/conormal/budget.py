from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .errors import BudgetExceeded, SearchTimeout


@dataclass(frozen=True)
class Budget:
    """Search limits shared by the group, isomorphism and labeling solvers.

    node_limit:    refinement / backtracking nodes allowed per search call.
    element_limit: largest automorphism group materialised as an explicit
                   element list.
    retries:       randomized candidate labelings tried per label count.
    deadline:      absolute ``time.monotonic()`` value, or None.
    """

    node_limit: int = 2_000_000
    element_limit: int = 500_000
    retries: int = 512
    deadline: float | None = None

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.element_limit <= 0 or self.retries <= 0:
            raise ValueError("budgets must be positive")

    @classmethod
    def with_timeout(cls, seconds: float | None, **kw) -> Budget:
        deadline = None if seconds is None else time.monotonic() + seconds
        return cls(deadline=deadline, **kw)

    def replace(self, **kw) -> Budget:
        return replace(self, **kw)

    def meter(self, what: str) -> Meter:
        return Meter(what, self.node_limit, self.deadline)


DEFAULT_BUDGET = Budget()


class Meter:
    """Node counter for one search call."""

    __slots__ = ("what", "limit", "deadline", "count")

    def __init__(self, what: str, limit: int, deadline: float | None):
        self.what = what
        self.limit = limit
        self.deadline = deadline
        self.count = 0

    def tick(self, k: int = 1) -> None:
        self.count += k
        if self.count > self.limit:
            raise BudgetExceeded(self.what, self.limit, self.count)
        # clock reads are comparatively expensive
        if self.deadline is not None and self.count % 64 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout(self.what, self.count)
