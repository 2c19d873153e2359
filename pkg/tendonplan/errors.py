class TendonPlanError(Exception):
    """Base class for all errors raised by tendonplan."""


class UnknownNodeError(TendonPlanError, ValueError):
    def __init__(self, node_id: int, size: int):
        super().__init__(f"Unknown node id {node_id} (valid ids are 0..{size - 1})")
        self.node_id = node_id


class InvalidPathError(TendonPlanError, ValueError):
    pass


class WearFileError(TendonPlanError, ValueError):
    """Raised when a wear store cannot be parsed. The message names the offending record."""

    def __init__(self, locator: str, record: str, reason: str):
        super().__init__(f"{locator}: {record}: {reason}")
        self.locator = locator
        self.record = record


class ConvergenceError(TendonPlanError, RuntimeError):
    pass


class UnreachableGoalError(TendonPlanError, RuntimeError):
    pass


class UsageError(TendonPlanError, ValueError):
    """Bad command-line arguments."""
