"""Exception types raised by the package."""

from __future__ import annotations


class ReebError(Exception):
    """Base class for all errors raised by :mod:`reebrp2`."""


class ParseError(ReebError, ValueError):
    """Input text does not conform to a grammar.

    ``offset`` is a 0-based character offset (canonical strings); ``line`` and
    ``column`` are 1-based (edge-list documents). Unused fields are ``None``.
    """

    def __init__(self, message, *, offset=None, line=None, column=None):
        self.message = message
        self.offset = offset
        self.line = line
        self.column = column
        if offset is not None:
            where = f"at offset {offset}"
        elif line is not None:
            where = f"at line {line}, column {column}"
        else:
            where = ""
        super().__init__(f"{message} {where}".strip())


class InvalidStructureError(ReebError, ValueError):
    """An explicit graph is not the Reeb graph of a simple Morse function on RP^2."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.condition for c in report.checks if not c.passed)
        super().__init__(f"not a valid RP^2 Reeb graph (failed: {failed})")


class ResourceLimitError(ReebError):
    """The projected size of an enumeration exceeds the configured cap."""

    def __init__(self, projected, cap):
        self.projected = projected
        self.cap = cap
        super().__init__(f"enumeration would produce {projected} objects, cap is {cap}")


class MutationInapplicable(ReebError, ValueError):
    """A test mutation cannot be applied to the given graph."""
