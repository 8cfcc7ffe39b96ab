"""Error types for credalkit.

Every error carries a stable ``code`` (the strings listed in
docs/14-Error-Handling-and-Validation.md) and a ``details`` dict so the CLI
can render it both as text and as structured output.
"""


class CredalError(Exception):
    """Base class for all credalkit errors."""
    code = 'CREDAL_ERROR'

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {
            'code': self.code,
            'message': self.message,
            'details': {key: str(value) for key, value in self.details.items()}
        }


class InvalidStateSpace(CredalError):
    code = 'INVALID_STATE_SPACE'


class InvalidPartition(CredalError):
    code = 'INVALID_PARTITION'


class InvalidPrior(CredalError):
    code = 'INVALID_PRIOR'


class EmptyCredalSet(CredalError):
    code = 'EMPTY_CREDAL_SET'


class DimensionMismatch(CredalError):
    code = 'DIMENSION_MISMATCH'


class ZeroMassConditioning(CredalError):
    code = 'ZERO_MASS_CONDITIONING'


class AlphaOutOfRange(CredalError):
    code = 'ALPHA_OUT_OF_RANGE'


class SupportViolation(CredalError):
    code = 'SUPPORT_VIOLATION'


class WeightNotNormalized(CredalError):
    code = 'WEIGHT_NOT_NORMALIZED'


class UnknownConsequence(CredalError):
    code = 'UNKNOWN_CONSEQUENCE'


class ParseError(CredalError):
    """Scenario text is not a well-formed document."""
    code = 'PARSE_ERROR'

    def __init__(self, message, line=None, column=None):
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.message
        return f'line {self.line}, column {self.column}: {self.message}'


class ValidationError(CredalError):
    """Scenario document is well formed but violates an invariant."""
    code = 'VALIDATION_ERROR'

    def __init__(self, message, field=None, line=None):
        super().__init__(message, field=field, line=line)
        self.field = field
        self.line = line

    def __str__(self):
        where = []
        if self.field:
            where.append(f'field {self.field}')
        if self.line is not None:
            where.append(f'line {self.line}')
        if not where:
            return self.message
        return f'{", ".join(where)}: {self.message}'
