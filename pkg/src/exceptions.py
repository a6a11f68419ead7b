"""Exception hierarchy shared by the numerical modules and the CLI."""


class HermiteGutzmerError(Exception):
    """Base class for all library errors."""

    pass


class InputError(HermiteGutzmerError):
    """Raised for malformed arguments: shapes, non-finite values, non-unitary matrices."""

    pass


class CapabilityError(HermiteGutzmerError):
    """Raised when an argument exceeds a configured capability limit."""

    def __init__(self, what: str, value: float, limit: float):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the configured limit {limit}")


class DomainError(HermiteGutzmerError):
    """Raised when a formula is evaluated outside its region of validity."""

    pass


class AccuracyError(HermiteGutzmerError):
    """Raised when a doubling test shows the quadrature has not converged."""

    def __init__(self, what: str, coarse: complex, fine: complex, rtol: float):
        self.what = what
        self.coarse = coarse
        self.fine = fine
        self.rtol = rtol
        super().__init__(
            f"{what}: doubling test failed (coarse={coarse!r}, fine={fine!r}, rtol={rtol:g})"
        )


class ExpansionFormatError(HermiteGutzmerError):
    """Raised when an expansion file cannot be parsed."""

    def __init__(self, row: int, message: str):
        self.row = row
        super().__init__(f"row {row}: {message}")


class ConfigFileError(HermiteGutzmerError):
    """Raised when a key-value run configuration file is malformed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
