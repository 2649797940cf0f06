"""Exception types shared across the package."""


class PentrError(Exception):
    """Base class for all pentr errors."""


class FormulaSyntaxError(PentrError):
    """Raised when a formula string cannot be parsed.

    Carries the character offset of the failure and a human-readable
    description of what was expected there.
    """

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at position {position}"
                         + (f" (expected {', '.join(expected)})" if expected else ""))
        self.position = position
        self.expected = tuple(expected)


class UnknownVariableError(PentrError):
    def __init__(self, name, vocab_names):
        super().__init__(f"unknown variable {name!r}; vocabulary is {' '.join(vocab_names)}")
        self.name = name


class VocabularyTooLargeError(PentrError):
    """An operation would scan more of the algebra than its cap allows."""


class ConnectivityRequired(PentrError):
    """Guard failure: the operation needs a connected ordering."""


class WeakDisjunctionRequired(PentrError):
    """Guard failure: the operation needs a weakly disjunctive ordering."""


class TableFormatError(PentrError):
    """Malformed relation-table file."""
