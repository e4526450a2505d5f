"""Shared exception classes."""


class InputError(ValueError):
    """Bad user input: out-of-range operands, invalid parameters, bad files."""


class FormatError(InputError):
    """Malformed serialized file.  Carries a 1-based line number."""

    def __init__(self, message, path=None, line_no=None):
        prefix = ""
        if path is not None:
            prefix = f"{path}: " if line_no is None else f"{path}:{line_no}: "
        super().__init__(prefix + message)
        self.path = path
        self.line_no = line_no


class SearchBoundExceeded(InputError):
    """A search or enumeration was requested above its configured bound."""


class InternalCheckError(RuntimeError):
    """A property that is guaranteed by construction failed to verify.

    Raised only when a build-time self-check trips; it signals a bug in
    this library, not bad input.
    """
