"""Exception types shared across the package.

Two kinds of failure are kept apart because the command line maps them to
different exit codes: malformed input text (ParseError) versus well-formed
input that violates a mathematical precondition (DomainError).
"""


class ParseError(ValueError):
    """Input text does not match the expected syntax."""


class DomainError(ValueError):
    """Input is syntactically fine but mathematically invalid."""
