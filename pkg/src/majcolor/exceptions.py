class InstanceFormatError(ValueError):
    """Malformed or structurally invalid instance text."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class RankOverflowError(ArithmeticError):
    """A rank or a derived rank value does not fit in signed 64 bits."""


class InfeasibleInstanceError(ValueError):
    """The rank condition does not hold, so the coloring engine refuses to run."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"instance is infeasible: {len(report.violations)} violating vertices")


class EngineInvariantError(RuntimeError):
    """Raised when an invariant that the theory guarantees is broken (a bug)."""


class CyclicGraphError(ValueError):
    """An acyclic digraph was required."""


class OracleBudgetExceeded(RuntimeError):
    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super().__init__(f"search space of {size} candidates exceeds budget {budget}")
