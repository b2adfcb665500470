"""Exception hierarchy shared by all modules."""


class FiberFieldError(Exception):
    """Base class for every error raised by the package."""

    module = "fiberfield"


class NotAFunctionError(FiberFieldError, ValueError):
    module = "exact_alg"

    def __init__(self, msg="not a function"):
        super().__init__(msg)


class FieldMismatchError(FiberFieldError, TypeError):
    module = "exact_alg"


class NotIrreducibleError(FiberFieldError, ValueError):
    module = "exact_alg"


class CoincidentPointsError(FiberFieldError, ValueError):
    module = "exact_alg"


class DegenerateMapError(FiberFieldError, ValueError):
    """Raised for maps of degree 0 or 1 where ramification data is required."""

    module = "ramification"

    def __init__(self, msg="no ramification"):
        super().__init__(msg)


class NotAConjugacyClassError(FiberFieldError, ValueError):
    module = "ramification"

    def __init__(self, msg="not a conjugacy class"):
        super().__init__(msg)


class CoveringStructureError(FiberFieldError, ArithmeticError):
    """Internal: a local degree failed to divide the target ramification index."""

    module = "ramification"


class NoUniversalCoveringError(FiberFieldError, ValueError):
    module = "classifier"

    def __init__(self, signature):
        self.signature = tuple(signature)
        super().__init__(f"no universal covering for signature {list(self.signature)}")


class SingularCurveError(FiberFieldError, ValueError):
    module = "classifier"


class NeedsExtensionError(FiberFieldError):
    """A required algebraic number is not in the working field.

    ``minpoly`` is the polynomial whose root has to be adjoined.
    """

    module = "semiconjugacy"

    def __init__(self, msg, minpoly=None):
        self.minpoly = minpoly
        if minpoly is not None:
            msg = f"{msg} (adjoin a root of {minpoly})"
        super().__init__(msg)


class NotCoprimeError(FiberFieldError, ValueError):
    module = "semiconjugacy"

    def __init__(self, msg="coprimality required"):
        super().__init__(msg)


class NotFiberCompatibleError(FiberFieldError, ValueError):
    module = "semiconjugacy"

    def __init__(self, msg="F is not fiber-compatible with theta"):
        super().__init__(msg)


class NotALeftFactorError(FiberFieldError, ValueError):
    module = "semiconjugacy"

    def __init__(self, msg="V is not a left factor of theta"):
        super().__init__(msg)


class BasisDegenerateError(FiberFieldError, ValueError):
    module = "semiconjugacy"

    def __init__(self, msg="U does not generate"):
        super().__init__(msg)


class ConstructionNotImplemented(FiberFieldError):
    """Structured outcome for signatures that are classified but not constructed."""

    module = "semiconjugacy"

    def __init__(self, signature_class, reason):
        self.signature_class = signature_class
        self.reason = reason
        super().__init__(f"construction not implemented for {signature_class}: {reason}")


class ParseError(FiberFieldError, ValueError):
    module = "cli"

    def __init__(self, msg, position=None):
        self.position = position
        if position is not None:
            msg = f"{position}: {msg}"
        super().__init__(msg)


class ValidationError(FiberFieldError, ValueError):
    module = "cli"


class UsageError(FiberFieldError, ValueError):
    module = "cli"
