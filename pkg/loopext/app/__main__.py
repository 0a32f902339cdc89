#!/usr/bin/env python3

"""
Application entry point for the loopext command.

This module provides the main entry point when the app package is executed
directly with `python -m loopext.app`.
"""

import sys

from loopext.app import main


def run() -> None:
    """
    Run the command line and exit with its status.

    This function ensures that the main application is only executed when this
    file is run directly, not when imported as a module.
    """
    sys.exit(main())


if __name__ == "__main__":
    run()  # pragma: no cover
