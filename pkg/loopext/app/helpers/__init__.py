"""
Helpers shared by the command handlers: argument validation, input loading
and report rendering.
"""
