class NetmendError(Exception):
    """Base class for all netmend errors."""


class DomainError(NetmendError, ValueError):
    """Input outside the domain of an operation."""


class UndefinedTrustError(DomainError):
    """Trust value requested for a node without any transactions."""


class NumericError(NetmendError, ArithmeticError):
    """Numerical routine failed (e.g. eigensolver did not converge)."""


class ConfigError(NetmendError):
    """Invalid run configuration or parameters."""


class GraphParseError(NetmendError):
    """Malformed line in an edge-list or transaction file."""

    def __init__(self, message: str, line_number: int, path: str | None = None):
        self.message = message
        self.line_number = line_number
        self.path = path
        where = f"{path}:{line_number}" if path else f"line {line_number}"
        super().__init__(f"{where}: {message}")

    def __reduce__(self):
        return (self.__class__, (self.message, self.line_number, self.path))


class AttackFailedError(NetmendError):
    """Target component count not reached within the removal cap."""

    def __init__(self, message: str, trace=None):
        self.message = message
        self.trace = trace
        super().__init__(message)

    def __reduce__(self):
        return (self.__class__, (self.message, self.trace))
