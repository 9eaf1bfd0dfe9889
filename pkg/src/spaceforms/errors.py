"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands disagree on variable count or truncation degree."""


class DomainError(ValueError):
    """Input violates an operation's mathematical precondition."""


class NormalizationError(ValueError):
    """Series is not in the normalized shape an operation requires."""


class IncommensurableError(ValueError):
    """Curvatures carry different unit tags, so their ratio is not rational."""


class FormParseError(ValueError):
    """Space-form literal does not match the grammar or its invariants."""


class ModeError(TypeError):
    """Exact arithmetic was required but approximate scalars were supplied."""


class ValidationError(ValueError):
    """A value violates its type invariants."""
