"""Exception hierarchy shared by every evoalg module."""


class EvoAlgError(Exception):
    pass


class DivisionByZero(EvoAlgError, ZeroDivisionError):
    pass


class MixedFields(EvoAlgError, TypeError):
    pass


class FieldError(EvoAlgError, ValueError):
    """Unsupported field, e.g. characteristic two or a composite modulus."""


class ParseError(EvoAlgError, ValueError):
    pass


class DenominatorZero(ParseError):
    pass


class DenominatorNotInvertible(ParseError):
    pass


class DimensionMismatch(EvoAlgError, ValueError):
    pass


class NotASubalgebra(EvoAlgError, ValueError):
    pass


class NotAnIdeal(EvoAlgError, ValueError):
    pass


class NotTK(EvoAlgError, ValueError):
    pass


class NotFiniteField(EvoAlgError, ValueError):
    pass


class BudgetExceeded(EvoAlgError):
    pass


class TheoremViolation(EvoAlgError, AssertionError):
    """A proven identity failed on concrete data. Always an implementation bug."""
