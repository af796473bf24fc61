"""Exception hierarchy shared across the package."""


class CotlabError(Exception):
    """Base class for all package errors."""


class ConfigError(CotlabError):
    """Invalid or inconsistent experiment configuration."""


class SequenceTooLongError(CotlabError):
    """Input (plus prefix) exceeds the backend's maximum sequence length."""


class InvalidTokenError(CotlabError):
    """Token id outside the vocabulary."""


class MaskedLossError(CotlabError):
    """A loss was requested over a fully masked sequence."""


class SampleError(CotlabError):
    """A sample is missing a field required by the requested operation."""


class DataFormatError(CotlabError):
    """Malformed data file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TeacherError(CotlabError):
    """Teacher endpoint failure after retries, or a cache-only miss."""


class FeatureUnavailableError(CotlabError):
    """Requested perception feature has no implementation."""


class NonFiniteLossError(CotlabError):
    """Training produced a NaN/Inf loss; aborts with diagnostics."""
