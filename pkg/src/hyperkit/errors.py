"""Exception hierarchy.

``ValidationError`` covers bad input (parameters, documents); the CLI maps it
to exit code 2. ``DomainError`` covers inputs that are well formed but on
which an operation is undefined; the CLI maps it to exit code 3.
"""


class HyperkitError(Exception):
    pass


class ValidationError(HyperkitError, ValueError):
    pass


class DomainError(HyperkitError):
    pass


class EmptyEdge(ValidationError):
    pass


class InvalidProbability(ValidationError):
    pass


class InvalidBound(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class InvalidParameter(ValidationError):
    pass


class UnknownMode(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(ValidationError):
    pass


class UnknownVertex(DomainError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EmptyHypergraph(DomainError):
    pass


class NoEdges(DomainError):
    pass


class IsolatedVertex(DomainError):
    pass


class DisconnectedDenominator(DomainError):
    pass


class UnlabeledVertex(DomainError):
    pass


class NoUnlabeledVertex(DomainError):
    pass
