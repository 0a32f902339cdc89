"""
Process exit codes of the command-line interface.
"""

from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    VERIFIED_FALSE = 1
    USAGE = 2
    RESOURCE = 3

    @classmethod
    def from_verdict(cls, passed: bool) -> "ExitCode":
        return cls.OK if passed else cls.VERIFIED_FALSE


class UsageError(Exception):
    """Raised by handlers for argument combinations argparse cannot express."""
