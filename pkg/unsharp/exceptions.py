"""Exception hierarchy shared by models, services and the CLI."""


class UnsharpError(Exception):
    """Base class for all errors raised by this package."""
    pass


class InputError(UnsharpError, ValueError):
    """Raised for malformed or inconsistent user input."""
    pass


class ParseError(InputError):
    """
    Raised when an input file cannot be parsed.

    Attributes:
        line: 1-indexed line number of the offending text
        column: 1-indexed column number (1 when the whole line is at fault)
    """

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownElementError(InputError):
    """Raised when an element or time-point id is not declared."""
    pass


class NonSerialFrameError(InputError):
    """Raised when tense operators are requested on a frame that cannot supply them."""
    pass


class FamilyTooLargeError(InputError):
    """Raised when a transformation-function family exceeds the configured cap."""
    pass


class UndefinedOperationError(InputError):
    """
    Raised when a pointwise partial operation is undefined somewhere.

    Attributes:
        time_point: The time point at which the operation is undefined
    """

    def __init__(self, message: str, time_point: str):
        super().__init__(f"{message} (undefined at time point {time_point})")
        self.time_point = time_point


class ExpressionError(InputError):
    """Raised for malformed tense expressions."""
    pass


class AxiomViolation(UnsharpError, ValueError):
    """
    Raised when a table fails to be an effect algebra.

    Attributes:
        axiom: Short name of the violated condition (E1, E2, E3, E4, order, supplement)
        witness: Tuple of element ids demonstrating the violation
    """

    def __init__(self, axiom: str, message: str, witness: tuple[str, ...] = ()):
        super().__init__(f"({axiom}) {message}")
        self.axiom = axiom
        self.witness = witness


class InvariantError(UnsharpError, RuntimeError):
    """Raised when a validated structure breaks an internal invariant."""
    pass
