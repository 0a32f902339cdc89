"""
Command handlers.

Each handler takes the parsed arguments, the configuration and the stream
reports are written to, and returns an ExitCode.
"""

from loopext.app.commands import conditions, extensions, smooth, tables

__all__ = ["conditions", "extensions", "smooth", "tables"]
