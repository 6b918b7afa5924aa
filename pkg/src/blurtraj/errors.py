"""Exception types shared across the package.

File-system problems raise the built-in OSError; everything below covers
malformed data and invalid arguments.
"""


class BlurtrajError(Exception):
    """Base class for all package-specific errors."""


class FormatError(BlurtrajError):
    """File content does not match the expected format (magic, version, bit depth)."""


class TooSmallError(BlurtrajError):
    """Raster smaller than the 2x2 minimum required for bilinear sampling."""


class DimensionError(BlurtrajError):
    """Array shapes are inconsistent with each other or with a header."""


class EvenStepCountError(BlurtrajError):
    """Step count N must be odd so the mid index (N-1)/2 exists exactly."""


class StepMismatchError(BlurtrajError):
    """Free-form trajectory expanded at an N different from its stored step count."""


class UnsupportedModeError(BlurtrajError):
    """Operation needs a closed-form trajectory curve, which this mode lacks."""


class SupportTooSmallError(BlurtrajError):
    """Kernel support radius cannot hold all trajectory taps at this pixel."""


class TooSmallForScalesError(BlurtrajError):
    """Image too small for the requested number of similarity scales."""


class NonFiniteLossError(BlurtrajError):
    """Optimization diverged: the objective became NaN or infinite."""
