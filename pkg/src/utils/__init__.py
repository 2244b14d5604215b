from .decorators import log_io
from .errors import NegabetaError

__all__ = ["log_io", "NegabetaError"]
