"""Exception hierarchy shared across the toolkit."""


class HtsError(Exception):
    """Base class for all toolkit errors."""


class NumericalFailure(HtsError):
    """A numerical routine (quadrature, optimizer) failed to converge."""


class DegenerateSample(HtsError):
    """Sample has too little variation to be fitted."""


class SampleTooSmall(HtsError):
    """Sample does not meet the minimum size precondition."""


class InvalidOrder(HtsError):
    """Unsupported moment order."""


class RankDeficient(HtsError):
    """Design matrix is rank deficient after fixed-effect expansion."""

    def __init__(self, message, columns=None):
        super().__init__(message)
        self.columns = list(columns) if columns else []


class EmptyAfterFiltering(HtsError):
    """Listwise deletion removed every observation."""


class NonConvergence(HtsError):
    """Iterative fit hit its iteration budget; best iterate is attached."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NegativeShare(HtsError):
    """An Euler step would push a population share below zero."""


class InconsistentHierarchy(HtsError):
    """Firm/sector hierarchy does not match the replicator state."""


class CapacityExceeded(HtsError):
    """A sector is already above its capacity boundary."""


class SchemaMismatch(HtsError):
    """CSV columns do not match the declared schema."""

    def __init__(self, message, missing=None):
        super().__init__(message)
        self.missing = list(missing) if missing else []


class DuplicateKey(HtsError):
    """Duplicate (entity, year) pair in a panel."""


class ParseError(HtsError):
    """A CSV cell failed to parse; carries row/column location."""

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class UnknownCode(HtsError):
    """Sector code missing from the correspondence map."""


class ZeroDenominator(HtsError):
    """Derived variable with a zero denominator."""


class SpanTooShort(HtsError):
    """Requested lag exceeds the series span."""


class InsufficientPairs(HtsError):
    """Fewer than the minimum valid pairs for a correlation cell."""


class TooFewBins(HtsError):
    """Conditional-growth binning cannot be built."""


class ConfigError(HtsError):
    """Bad run configuration; carries the offending line when known."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
