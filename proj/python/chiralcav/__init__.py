"""Two resonant cavities coupled through a non-reciprocal mirror."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, FockBasis, ModelParams

__all__ = ["DomainError", "FockBasis", "ModelParams"]
