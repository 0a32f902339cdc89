"""
loopext command-line application package.

This package contains the argument parser, the command handlers and the
helpers they share.
"""

from loopext.app.app import main

__all__ = ["main"]
