"""Exceptions raised by cskit operations.

Each error carries the process exit code the CLI uses when it surfaces.
"""

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class CskitError(Exception):
    exit_code = EXIT_USAGE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidType(CskitError):
    pass


class IndexOutOfRange(CskitError):
    pass


class NotPositiveRoot(CskitError):
    pass


class TooLong(CskitError):
    pass


class NotMinimalRep(CskitError):
    pass


class TypeMismatch(CskitError):
    pass


class NotDescentSubset(CskitError):
    pass


class NotReduced(CskitError):
    pass


class BadSubsets(CskitError):
    pass


class HypothesisFailed(CskitError):
    pass


class Undecidable(CskitError):
    pass


class NotWonderful(CskitError):
    pass


class GroupTooLarge(CskitError):
    pass


class UnknownProperty(CskitError):
    pass


class ParseError(CskitError):
    pass


class IoError(CskitError):
    pass
