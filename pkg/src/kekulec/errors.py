"""Exception hierarchy shared by all kekulec modules."""


class KekulecError(Exception):
    """Domain error: a precondition or invariant of an operation was violated."""


class ParseError(KekulecError):
    """A graph document failed to parse; the message names the offending element."""


class CellError(KekulecError):
    """Cell-algebra error (port-set mismatch, member missing, empty cell...)."""


class SwitchError(KekulecError):
    """Functional-cell error (bad construction, socket invariant violation...)."""
