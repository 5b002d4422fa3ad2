"""Shared exception types."""


class UnsupportedGroupError(ValueError):
    """Requested a Cartan type / rank combination outside the implemented range."""


class UnacceptableInputError(ValueError):
    """An oracle or bit vector violated the acceptability contract."""
