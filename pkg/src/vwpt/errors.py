"""Shared exception types."""


class TruncationError(Exception):
    """A coefficient outside the validity region was requested, or a
    computation cannot reach the requested window."""


class GridError(Exception):
    """An exponent landed off the representable half-integer grid."""
