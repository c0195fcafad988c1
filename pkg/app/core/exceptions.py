"""
Custom exceptions for the star representation toolkit.
Every exception carries the process exit code the CLI reports for it.
"""
from typing import Any, Dict, Optional


class StarRepresentationException(Exception):
    """Base exception for all toolkit errors."""

    exit_code: int = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class InvalidInputError(StarRepresentationException):
    """Raised when user-supplied data violates a precondition."""
    exit_code = 2


class InvalidFrameError(InvalidInputError):
    """Raised when frame or image data is malformed."""
    pass


class ClipTooShortError(InvalidInputError):
    """Raised when a clip has too few frames for the requested encoding."""
    pass


class DimensionMismatchError(InvalidInputError):
    """Raised when frames, images or vectors disagree in shape."""
    pass


class InvalidEncodeConfigError(InvalidInputError):
    """Raised when an encode configuration combines incompatible options."""
    pass


class ManifestError(InvalidInputError):
    """Raised when a manifest line cannot be parsed or validated."""

    def __init__(self, message: str, line_number: Optional[int] = None, details: Optional[Dict[str, Any]] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"manifest line {line_number}: {message}"
        super().__init__(message, {**(details or {}), "line": line_number})


class MissingFrameError(InvalidInputError):
    """Raised when a frame index referenced by a manifest entry is absent."""
    pass


class InvalidParamsError(InvalidInputError):
    """Raised when scorer parameters are malformed or inconsistent."""
    pass


class InvalidFeatureError(InvalidInputError):
    """Raised when feature vectors are malformed or inconsistent."""
    pass


class StorageError(StarRepresentationException):
    """Raised when a file cannot be read or written."""
    exit_code = 3


class ConfigurationError(StarRepresentationException):
    """Raised when configuration is invalid."""
    exit_code = 2
