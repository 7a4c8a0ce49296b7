"""Toolkit for binary single-deletion-correcting codes."""
from .errors import CapacityError, DomainError
from .vt import (
    Code,
    DecodeOutcome,
    VTParams,
    decode_single_deletion,
    linear_encode,
    vt_checksum,
    vt_code,
    vt_size_formula,
)
from .words import Word, deletion_distance, descendants, runs

__version__ = "0.1.0"
