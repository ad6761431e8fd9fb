"""Exception types raised across the package.

Every domain error carries a stable ``code`` string so the CLI can report it
without parsing messages.
"""

from __future__ import annotations


class MppError(Exception):
    code = "MPP_ERROR"


class DimensionMismatch(MppError, ValueError):
    code = "DIMENSION_MISMATCH"


class LengthMismatch(MppError, ValueError):
    code = "LENGTH_MISMATCH"


class PointNotInCloud(MppError, ValueError):
    code = "POINT_NOT_IN_CLOUD"


class NotGeneric(MppError, ValueError):
    code = "NOT_GENERIC"

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class NotAFace(MppError, ValueError):
    code = "NOT_A_FACE"


class InvalidPath(MppError, ValueError):
    code = "INVALID_PATH"


class InvalidString(MppError, ValueError):
    code = "INVALID_STRING"


class NotCoherentEncoding(MppError, ValueError):
    code = "NOT_COHERENT_ENCODING"


class IncoherentInput(MppError, ValueError):
    code = "INCOHERENT_INPUT"


class IndexOutOfRange(MppError, ValueError):
    code = "INDEX_OUT_OF_RANGE"


class DimOutOfRange(MppError, ValueError):
    code = "DIM_OUT_OF_RANGE"


class LabelMismatch(MppError, ValueError):
    code = "LABEL_MISMATCH"
