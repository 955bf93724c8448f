class CayleyHamError(Exception):
    """Base class for all errors raised by the package."""


class GraphError(CayleyHamError, ValueError):
    pass


class PresentationError(CayleyHamError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CosetEnumerationError(CayleyHamError):
    def __init__(self, message: str, status: str):
        self.status = status
        super().__init__(message)


class GroupValidationError(CayleyHamError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid (2,s,3) generators: " + "; ".join(report.errors))


class InvariantViolation(CayleyHamError):
    """A structural identity that must hold did not.  Always a bug or corrupt input."""


class BudgetExhausted(CayleyHamError):
    def __init__(self, message: str, stats=None):
        self.stats = stats
        super().__init__(message)


class NoWitnessFound(CayleyHamError):
    """Exhaustive search finished without a witness the theory guarantees."""
