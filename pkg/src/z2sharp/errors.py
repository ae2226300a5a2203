"""Exception hierarchy shared by every module of the workbench."""


class Z2Error(Exception):
    """Base class for all errors raised by z2sharp."""


class ParseError(Z2Error, SyntaxError):
    """Malformed formula text.

    Carries the UTF-8 byte offset as well as the 1-based line and column of
    the offending character.
    """

    def __init__(self, message, *, offset=0, line=1, column=1, text=""):
        self.byte_offset = offset
        self.line = line
        self.column = column
        self.source = text
        super().__init__(f"{message} (line {line}, column {column}, byte {offset})")


class RankError(Z2Error, ValueError):
    """A rank annotation is negative, malformed, or used where none is allowed."""

    def __init__(self, message, *, offset=None, line=None, column=None):
        self.byte_offset = offset
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column}, byte {offset})"
        super().__init__(message)


class SortError(Z2Error, TypeError):
    """A number-sort object was used where a set-sort object is required, or vice versa."""


class UnboundVariable(Z2Error, LookupError):
    """A free variable has no value in the current assignment."""


class ResourceError(Z2Error, RuntimeError):
    """An enumeration or assignment space exceeds its configured cap."""


class SchemeError(Z2Error, ValueError):
    """A comprehension or axiom scheme was applied outside its side conditions."""


class NoFixpoint(Z2Error, RuntimeError):
    """A comprehension instance fails even paraconsistently."""


class SoundnessFailure(Z2Error, AssertionError):
    """An axiom instance evaluated to a non-designated value.

    ``report`` holds the full check report, including every offending
    instance and assignment.
    """

    def __init__(self, report):
        self.report = report
        lines = [f"{len(report.failures)} axiom instance(s) not designated"]
        lines += [f"  {failure}" for failure in report.failures[:10]]
        super().__init__("\n".join(lines))


class ZeroDenominator(Z2Error, ZeroDivisionError):
    pass


class DepthExceeded(Z2Error, ValueError):
    pass


class AllDefined(Z2Error, RuntimeError):
    """Every element of the searched slice is definable, so no Berry number exists."""


class ShortTable(Z2Error, ValueError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"digit table {position} has fewer than {position} digits")
