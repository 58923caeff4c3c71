"""Exception hierarchy shared by every module of the package."""


class NovikovError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(NovikovError, ZeroDivisionError):
    pass


class FieldMismatch(NovikovError, TypeError):
    pass


class NotPrime(NovikovError, ValueError):
    pass


class DimensionMismatch(NovikovError, ValueError):
    pass


class NotGraded(NovikovError, ValueError):
    pass


class SingularTransform(NovikovError, ValueError):
    pass


class NotNovikovSuper(NovikovError, ValueError):
    pass


class NotNovikov(NovikovError, ValueError):
    pass


class ParameterConstraint(NovikovError, ValueError):
    pass


class NotAssociative(NovikovError, ValueError):
    pass


class NotSupercommutative(NovikovError, ValueError):
    pass


class NotModule(NovikovError, ValueError):
    pass


class NotDerivation(NovikovError, ValueError):
    pass


class OddDerivation(NovikovError, ValueError):
    pass


class NotEvenElement(NovikovError, ValueError):
    pass


class BudgetExceeded(NovikovError, RuntimeError):
    def __init__(self, candidates, budget):
        super().__init__(
            f"search would examine {candidates} candidates, budget is {budget}"
        )
        self.candidates = candidates
        self.budget = budget


class DocumentError(NovikovError, ValueError):
    """Parse error carrying a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
