"""Big-integer decimal subtraction over base-10^18 limbs.

Two interchangeable algorithms: a single-worker left-scan subtraction
and a multi-worker speculative-borrow scheme that resolves borrows over
synchronized passes.  A digit-wise reference implementation and a
benchmark CLI round out the package.
"""

from .errors import (
    BorrowExhausted,
    EmptyInput,
    InvalidDigit,
    IterationLimitExceeded,
    LengthUnderflow,
    NegativeResult,
    VerificationFailure,
)
from .magnitude import (
    LIMB_BASE,
    LIMB_DIGITS,
    DecimalMagnitude,
    compare_magnitude,
    format_magnitude,
    pad_to_length,
    parse_magnitude,
)
from .oracle import add_digitwise, subtract_digitwise
from .parallel import (
    BorrowBoard,
    ChunkAssignment,
    IterationStats,
    borrow_pass,
    has_pending_borrows,
    initial_pass,
    partition_limbs,
    subtract_parallel,
)
from .rng import SplitMix64
from .sequential import OpCount, borrow_from_left, subtract_sequential

__version__ = "0.1.0"

__all__ = [
    "BorrowBoard",
    "BorrowExhausted",
    "ChunkAssignment",
    "DecimalMagnitude",
    "EmptyInput",
    "InvalidDigit",
    "IterationLimitExceeded",
    "IterationStats",
    "LengthUnderflow",
    "LIMB_BASE",
    "LIMB_DIGITS",
    "NegativeResult",
    "OpCount",
    "SplitMix64",
    "VerificationFailure",
    "add_digitwise",
    "borrow_from_left",
    "borrow_pass",
    "compare_magnitude",
    "format_magnitude",
    "has_pending_borrows",
    "initial_pass",
    "pad_to_length",
    "parse_magnitude",
    "partition_limbs",
    "subtract_digitwise",
    "subtract_parallel",
    "subtract_sequential",
]
