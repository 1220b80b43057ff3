"""
Exceptions
==========
One hierarchy for every failure the library reports.

Each error carries a ``detail`` string; the CLI prints it verbatim and
maps the error to a nonzero exit code.
"""

from typing import Optional


class GradpixError(Exception):
    """Base class for all gradpix errors."""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __reduce__(self):
        # Subclass constructors take other arguments; rebuild from the message
        # so errors survive the trip back from a worker process
        return _rebuild, (type(self), self.detail)


def _rebuild(cls, detail: str) -> GradpixError:
    err = cls.__new__(cls)
    GradpixError.__init__(err, detail)
    return err


# ========================
# IMAGE ERRORS
# ========================
class ImageError(GradpixError):
    pass


class ImageReadError(ImageError):
    """The file could not be opened or is not a PNG."""


class UnsupportedImageError(ImageError):
    """A valid PNG that uses a feature this codec does not accept."""

    def __init__(self, feature: str, path: Optional[str] = None):
        where = f" in {path}" if path else ""
        super().__init__(f"unsupported PNG feature: {feature}{where}")
        self.feature = feature


class ImageWriteError(ImageError):
    pass


class InvalidImageError(ImageError):
    """RasterImage invariants do not hold."""


# ========================
# PREDICTOR ERRORS
# ========================
class NeighborhoodError(GradpixError):
    """Pixel coordinates or channel index out of bounds."""


# ========================
# CONTAINER ERRORS
# ========================
class ContainerError(GradpixError):
    pass


class BadMagicError(ContainerError):
    def __init__(self, found: bytes):
        super().__init__(f"bad magic: expected b'GPX1', found {found!r}")


class VersionMismatchError(ContainerError):
    def __init__(self, found: int, expected: int):
        super().__init__(f"version mismatch: container version {found}, decoder supports {expected}")


class TruncatedPayloadError(ContainerError):
    def __init__(self, what: str):
        super().__init__(f"truncated payload: {what}")


class ChecksumMismatchError(ContainerError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"checksum mismatch: header {expected:08x}, decoded samples {actual:08x}")


class CoderDesyncError(ContainerError):
    def __init__(self, what: str):
        super().__init__(f"range coder desync: {what}")


class CorruptContainerError(ContainerError):
    pass


# ========================
# BENCH ERRORS
# ========================
class BenchError(GradpixError):
    pass


class EmptyCorpusError(BenchError):
    def __init__(self, directory: str):
        super().__init__(f"no PNG images found in {directory}")


class VerificationError(BenchError):
    """A container did not decode to its source image. Always fatal."""


# ========================
# PLOT ERRORS
# ========================
class PlotError(GradpixError):
    pass


class MalformedCsvError(PlotError):
    pass


class UnknownMetricError(PlotError):
    def __init__(self, metric: str, allowed: tuple):
        super().__init__(f"unknown metric '{metric}', expected one of: {', '.join(allowed)}")


class EmptyGroupError(PlotError):
    pass
