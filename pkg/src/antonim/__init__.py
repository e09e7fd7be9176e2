"""Perfect-play solver and analysis toolkit for Antonim."""

from .core import (
    CanonicalPosition,
    Classification,
    DuplicatePositiveHeap,
    EmptyState,
    GameError,
    IllegalMove,
    Move,
    NegativeHeap,
    RawState,
    apply_move,
    canonicalize,
    legal_moves,
    validate_state,
)
from .oracle import OracleCache, oracle_classify
from .solver import (
    CompletionCache,
    InvalidInput,
    NimCorrespondenceReport,
    best_move,
    classify,
    completion,
    nim_classify,
    nim_correspondence_check,
)
from .tables import PTable, PTableSpec, UnsupportedFormat, build_table, render_table

__version__ = "0.1.0"

__all__ = [
    "CanonicalPosition",
    "Classification",
    "CompletionCache",
    "DuplicatePositiveHeap",
    "EmptyState",
    "GameError",
    "IllegalMove",
    "InvalidInput",
    "Move",
    "NegativeHeap",
    "NimCorrespondenceReport",
    "OracleCache",
    "PTable",
    "PTableSpec",
    "RawState",
    "UnsupportedFormat",
    "apply_move",
    "best_move",
    "build_table",
    "canonicalize",
    "classify",
    "completion",
    "legal_moves",
    "nim_classify",
    "nim_correspondence_check",
    "oracle_classify",
    "render_table",
    "validate_state",
]
