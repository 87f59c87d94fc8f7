class PeriodicLawError(Exception):
    """
    Base error carrying a detail message and the process exit code it maps to.

    Attributes:
        detail (str): Human-readable description, taken from ``src.conf.messages``.
        exit_code (int): Exit status used by the command-line surface.
    """
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InputError(PeriodicLawError):
    exit_code = 1


class TableFormatError(InputError):
    """
    Malformed CSV input. ``row`` is 1-based over physical lines, header included.
    """

    def __init__(self, detail: str, row: int | None = None, column: str | None = None):
        super().__init__(detail)
        self.row = row
        self.column = column


class LookupFailure(InputError):
    pass


class PreconditionError(InputError):
    pass


class InvariantError(PeriodicLawError):
    exit_code = 2
