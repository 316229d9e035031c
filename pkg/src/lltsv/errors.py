"""Exception types shared across the package."""


class LltsvError(Exception):
    """Base class for all errors raised by lltsv."""


class ParseError(LltsvError):
    def __init__(self, message: str, position: int, expected: tuple = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(detail)


class UnknownActionError(LltsvError):
    def __init__(self, name: str, position: int = -1):
        self.name = name
        self.position = position
        where = f" at offset {position}" if position >= 0 else ""
        super().__init__(f"action '{name}' is not in the declared alphabet{where}")


class AlphabetTooLarge(LltsvError):
    pass


class EmptyListError(LltsvError):
    pass


class NotInFragmentError(LltsvError):
    """Raised when a term falls outside the characteristic-formula fragment."""

    def __init__(self, offender):
        self.offender = offender
        from .syntax import print_term

        super().__init__(f"subterm not in the translatable fragment: {print_term(offender)}")


class StateLimitExceeded(LltsvError):
    def __init__(self, limit: int, frontier: int, sample):
        self.limit = limit
        self.frontier = frontier
        self.sample = sample
        from .syntax import print_term

        super().__init__(
            f"state limit {limit} exceeded with {frontier} states on the frontier; "
            f"sample deep state: {print_term(sample)}"
        )
