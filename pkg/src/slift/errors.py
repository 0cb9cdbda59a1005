"""Exception types shared across the package."""


class SliftError(Exception):
    """Base class for all slift errors."""


class ShapeError(SliftError):
    """Operand shapes are inconsistent or an output extent is invalid."""


class AxisError(SliftError):
    """A reduction axis is out of range or repeated."""


class ConfigError(SliftError):
    """Invalid configuration value, architecture spec, or CLI argument."""


class NumericError(SliftError):
    """A computation produced non-finite values where finiteness is required."""


class DegenerateNormError(SliftError):
    """Normalization requested over a spatial volume too small to have statistics."""


class InvalidMaskError(SliftError):
    """A valid-pixel mask selects no pixels."""


class ConstantInputError(SliftError):
    """Correlation statistics are undefined for a constant input vector."""


class FormatError(SliftError):
    """An on-disk artifact is malformed; message carries the byte offset."""
