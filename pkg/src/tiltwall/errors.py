class TiltwallError(Exception):
    """Base class for all tiltwall errors."""


class InputError(TiltwallError):
    """Malformed user input (bad literal, unknown name, invalid flag value)."""


class DomainError(TiltwallError):
    """Operation applied outside its mathematical domain."""
