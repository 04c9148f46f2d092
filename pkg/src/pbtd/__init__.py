"""Partitioned balanced tournament designs: verification and search."""

from pbtd.core import (
    DesignArray,
    Dims,
    all_pairs,
    dims,
    make_pair,
    permute_rows,
    permute_window_columns,
    reflect_horizontal,
    relabel,
)
from pbtd.io import emit_structured, emit_text, parse_structured, parse_text, table1
from pbtd.verify import VerificationReport, Violation, ViolationKind, verify

__version__ = "0.1.0"
