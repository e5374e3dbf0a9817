"""Exception types raised across the package."""


class CliffordKitError(Exception):
    """Base class for all errors raised by clifford_kit."""


class IndexOutOfRange(CliffordKitError):
    def __init__(self, i, j, value, size):
        self.i, self.j, self.value, self.size = i, j, value, size
        super().__init__(
            f"table[{i}][{j}] = {value} is outside [0, {size})")


class NotAssociative(CliffordKitError):
    def __init__(self, i, j, k, left, right):
        self.triple = (i, j, k)
        self.left, self.right = left, right
        super().__init__(
            f"(x{i}*x{j})*x{k} = x{left} but x{i}*(x{j}*x{k}) = x{right}")


class SizeLimitExceeded(CliffordKitError):
    def __init__(self, what, required, limit, name="CK_MAX_ELEMENTS"):
        self.required, self.limit, self.name = required, limit, name
        super().__init__(f"{what} needs {required}, over the limit {name}={limit}")


class BudgetExceeded(SizeLimitExceeded):
    pass


class TargetTooLarge(SizeLimitExceeded):
    pass


class NotClifford(CliffordKitError):
    pass


class NotSemilattice(CliffordKitError):
    pass


class NotAGroup(CliffordKitError):
    pass


class NotAnIdeal(CliffordKitError):
    pass


class NotIdempotent(CliffordKitError):
    pass


class NotUDense(CliffordKitError):
    pass


class PreconditionError(CliffordKitError):
    pass


class InvalidMetric(CliffordKitError):
    def __init__(self, axiom, witness):
        self.axiom, self.witness = axiom, witness
        super().__init__(f"metric axiom '{axiom}' fails at {witness}")


class SampleNotClosed(CliffordKitError):
    pass


class MalformedOracle(CliffordKitError):
    pass


class ParseError(CliffordKitError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line, self.column, self.source = line, column, source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
            if column is not None:
                where += f"{column}:"
        super().__init__(f"{where} {message}" if where else message)


class InternalError(CliffordKitError):
    """A cross-check between two independent computations disagreed."""
