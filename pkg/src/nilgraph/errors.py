"""Exception hierarchy for nilgraph."""


class NilgraphError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(NilgraphError):
    pass


class NotAGroup(NilgraphError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class CapExceeded(NilgraphError):
    pass


class UnknownFamily(NilgraphError):
    pass


class NotASubgroup(NilgraphError):
    pass


class NotNormal(NilgraphError):
    pass


class PrimeNotDividing(NilgraphError):
    pass


class EmptySet(NilgraphError):
    pass


class CliqueTimeout(NilgraphError):
    """The clique search exhausted its node budget before proving optimality."""

    def __init__(self, budget: int, best: int):
        super().__init__(f"clique search exceeded {budget} nodes (best so far {best})")
        self.budget = budget
        self.best = best
