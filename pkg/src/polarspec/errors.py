"""Exception types shared across the toolkit."""


class PolarSpecError(Exception):
    """Base class for all toolkit errors."""


class CapacityError(PolarSpecError):
    """A requested computation exceeds the configured size/enumeration budget."""


class InconsistencyError(PolarSpecError):
    """Exact integer arithmetic produced an impossible result (negative count,
    failed divisibility), meaning the input is not a valid code distribution."""


class SpectrumFormatError(PolarSpecError):
    """A spectrum or sequence file is malformed or fails its integrity check."""


class DependencyError(PolarSpecError):
    """A required input artifact (e.g. a spectrum table) is missing."""
