"""Exception types shared across the engine."""


class LinklabError(Exception):
    """Base class for all engine errors."""


class DimensionError(LinklabError, ValueError):
    """Exponent vectors or module ranks of incompatible length."""


class RingMismatchError(LinklabError, ValueError):
    """Operands live in different polynomial rings."""


class ZeroPolynomialError(LinklabError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class BudgetExceeded(LinklabError, RuntimeError):
    """A Groebner computation processed more S-pairs than allowed."""

    def __init__(self, budget, what="S-pairs"):
        super().__init__(f"budget exceeded: more than {budget} {what} processed")
        self.budget = budget


class NotHomogeneousError(LinklabError, ValueError):
    """A graded-only operation received inhomogeneous input."""


class UnsupportedFieldError(LinklabError, ValueError):
    """Operation is only available over a particular coefficient field."""


class NotSquarefreeError(LinklabError, ValueError):
    """Input is not a squarefree monomial ideal."""


class ContainmentError(LinklabError, ValueError):
    """An ideal expected to contain another does not."""


class ZeroModuleError(LinklabError, ValueError):
    """Depth and projective dimension are undefined for the zero module."""


class RegularSequenceNotFound(LinklabError, RuntimeError):
    """Seeded search for a regular sequence ran out of retries."""


class LinkageError(LinklabError, ValueError):
    """A linkage hypothesis failed; ``hypothesis`` names which one."""

    def __init__(self, hypothesis, message):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis


class DegenerateLinkError(LinkageError):
    """c : a is the unit ideal, which happens exactly when a = c."""

    def __init__(self, message="c : a is the unit ideal (a equals its linking ideal)"):
        super().__init__("degenerate-link", message)


class ParseError(LinklabError, ValueError):
    """Malformed ideal text; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column
