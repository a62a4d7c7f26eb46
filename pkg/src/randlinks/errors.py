class ResourceLimitError(ValueError):
    """Requested size exceeds a configured cap (see :mod:`randlinks.config`)."""


class FalsificationError(AssertionError):
    """A checked mathematical claim did not hold; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
