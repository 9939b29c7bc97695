"""Exception hierarchy shared by the library and the CLI."""


class AlcaError(Exception):
    """Base class for all errors raised by alca."""


class SchemaError(AlcaError):
    """A machine or time set violates a structural invariant."""


class ParseError(AlcaError):
    """A machine document is not well-formed JSON."""

    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            msg = f"{msg} (line {line}, column {column})"
        super().__init__(msg)


class SymbolError(AlcaError):
    """A word uses a symbol that is not in the machine alphabet."""


class AlphabetMismatch(AlcaError):
    """Two machines that must share an alphabet do not."""


class ResourceLimit(AlcaError):
    """A product exploration exceeded its node budget."""
