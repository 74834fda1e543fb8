"""Exception types raised across the package."""


class FuzzyTwinError(Exception):
    """Base class for every error raised by fuzzytwin."""


class FormatError(FuzzyTwinError, ValueError):
    """A dataset or report file does not follow its expected layout."""


class ParseError(FormatError):
    """A cell could not be parsed; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnsupportedDatasetError(FuzzyTwinError, ValueError):
    """The data is not a two-class problem."""


class DegenerateDatasetError(FuzzyTwinError, ValueError):
    """One of the classes is empty."""


class StratificationError(FuzzyTwinError, ValueError):
    """A class has fewer samples than the requested number of folds."""


class ShapeError(FuzzyTwinError, ValueError):
    pass


class ContractError(FuzzyTwinError, ValueError):
    """An argument violates a documented precondition."""


class NumericalError(FuzzyTwinError, ArithmeticError):
    """A factorization failed or a solve missed its residual bound."""


class UndefinedMetricError(FuzzyTwinError, ValueError):
    pass
