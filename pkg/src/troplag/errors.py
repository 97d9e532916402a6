"""Shared exception base for the package."""


class TroplagError(Exception):
    """Base class for every error raised by troplag."""
