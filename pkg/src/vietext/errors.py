"""Exception hierarchy shared across the library."""


class VietextError(Exception):
    """Base class for all library errors."""


class DecodeError(VietextError):
    """Input bytes are not valid UTF-8."""


class CsvParseError(VietextError):
    """CSV input violates RFC-4180 quoting."""


class ColumnNotFound(VietextError):
    """CSV column selector matched no header."""


class MixedLanguage(VietextError):
    """Inputs to a single-language operation disagree on language."""


class InvalidInput(VietextError):
    """Argument violates an operation precondition."""


class SpanMismatch(VietextError):
    """Predicted and gold segmentations do not cover the same text."""


class InvalidThresholds(VietextError):
    """Classification cut points are not strictly ascending."""


class BackendUnavailable(VietextError):
    """An external service could not be reached."""


class SchemaError(VietextError):
    """An external service returned a malformed response."""


class GenerationTimeout(BackendUnavailable):
    """The generation endpoint did not answer within the timeout."""


class UnknownAspect(VietextError):
    """Requested aspect is not in the catalogue."""


class EmptyInput(VietextError):
    """Operation requires non-empty text."""


class QueryNotFound(VietextError):
    """Word-tree query has zero matches."""


class PathNotFound(VietextError):
    """Requested path does not exist in the word tree."""


class GoldFormatError(VietextError):
    """Gold corpus file is malformed."""


class ConfigError(VietextError):
    """Service configuration failed validation."""
