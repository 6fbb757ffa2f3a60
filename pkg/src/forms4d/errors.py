"""Shared error types."""


class CapExceededError(ValueError):
    """An input is past a documented size cap (the message names the cap)."""


class NonUnimodularFormError(ValueError):
    """A form with |det| != 1 was offered where an intersection form is required."""
