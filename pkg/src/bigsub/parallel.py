"""Multi-worker subtraction with speculative borrows.

Each worker owns a fixed contiguous limb range.  In the first pass every
worker subtracts its limbs; where a limb would underflow it speculates
that a borrow is available, corrects the limb by +10^18, and flags the
next more significant limb on a shared borrow board.  Later passes
consume flagged borrows, possibly flagging new ones, until the board is
clean.

The board is double-buffered: workers read the flags produced by the
previous pass and write flags for the next one, so every pass is a pure
function of the pass before it and the outcome is independent of worker
count.  Boards swap at a full barrier, where a single coordinator also
decides termination.  Result limbs and write-board cells are each
written by at most one worker per pass.
"""

import threading
from dataclasses import dataclass

import numpy as np

from .errors import BorrowExhausted, IterationLimitExceeded, NegativeResult
from .magnitude import LIMB_BASE, DecimalMagnitude, canonical_limbs, compare_magnitude

_BASE64 = np.int64(LIMB_BASE)


@dataclass(frozen=True)
class ChunkAssignment:
    """Contiguous half-open limb range [start, stop) owned by one worker."""

    worker_id: int
    start: int
    stop: int


@dataclass(frozen=True)
class IterationStats:
    """Synchronized passes executed, plus run geometry.

    iterations counts every pass including the initial subtraction pass,
    so borrow resolution took iterations - 1 extra sweeps.
    """

    iterations: int
    limb_count: int
    workers: int

    def __post_init__(self):
        if not 1 <= self.iterations <= self.limb_count:
            raise ValueError(
                f"iterations {self.iterations} outside [1, {self.limb_count}]"
            )


class BorrowBoard:
    """Double-buffered per-limb borrow flags.

    `read` holds flags produced by the previous pass, `write` collects
    flags for the next one.  Only the barrier coordinator may swap.
    """

    def __init__(self, limb_count: int):
        self.read = np.zeros(limb_count, dtype=np.uint8)
        self.write = np.zeros(limb_count, dtype=np.uint8)

    def swap_and_reset(self) -> None:
        self.read, self.write = self.write, self.read
        self.write[:] = 0


def has_pending_borrows(flags) -> bool:
    """True iff any borrow flag is set."""
    return bool(np.any(flags))


def partition_limbs(limb_count: int, workers: int) -> list[ChunkAssignment]:
    """Split [0, limb_count) into contiguous chunks whose sizes differ by <= 1.

    The remainder goes to the earlier chunks.  More workers than limbs
    produces exactly limb_count single-limb chunks.
    """
    if limb_count < 1:
        raise ValueError("limb_count must be positive")
    if workers < 1:
        raise ValueError("workers must be positive")
    workers = min(workers, limb_count)
    base, extra = divmod(limb_count, workers)
    chunks = []
    start = 0
    for w in range(workers):
        stop = start + base + (1 if w < extra else 0)
        chunks.append(ChunkAssignment(w, start, stop))
        start = stop
    return chunks


def initial_pass(
    chunk: ChunkAssignment,
    a_limbs: np.ndarray,
    b_limbs: np.ndarray,
    result_limbs: np.ndarray,
    write_board: np.ndarray,
) -> None:
    """First pass over one chunk: subtract limbs, speculating on borrows.

    Underflowing limbs get +10^18 and flag their left neighbour on the
    write board.  An underflow at limb 0 has no neighbour to flag and
    raises BorrowExhausted.
    """
    s, e = chunk.start, chunk.stop
    a = a_limbs[s:e]
    b = b_limbs[s:e]
    out = result_limbs[s:e]
    np.subtract(a, b, out=out)
    under = np.flatnonzero(a < b)
    if under.size:
        if s == 0 and under[0] == 0:
            raise BorrowExhausted(0)
        out[under] += _BASE64
        write_board[s + under - 1] = 1


def borrow_pass(
    chunk: ChunkAssignment,
    result_limbs: np.ndarray,
    read_board: np.ndarray,
    write_board: np.ndarray,
) -> None:
    """Resolution pass over one chunk: apply the borrows flagged last pass.

    A flagged limb is decremented; a flagged zero limb becomes 10^18 - 1
    and passes the borrow further left on the write board.  Unflagged
    limbs are untouched, so a chunk with a clean read board does no limb
    work at all.
    """
    s, e = chunk.start, chunk.stop
    flags = read_board[s:e]
    if not flags.any():
        return
    out = result_limbs[s:e]
    hits = np.flatnonzero(flags)
    zero = out[hits] == 0
    out[hits[~zero]] -= 1
    drained = hits[zero]
    if drained.size:
        if s == 0 and drained[0] == 0:
            raise BorrowExhausted(0)
        out[drained] = LIMB_BASE - 1
        write_board[s + drained - 1] = 1


class _SharedRun:
    """State shared by the worker pool for one subtraction."""

    def __init__(self, a_arr, b_arr, parties: int):
        n = len(a_arr)
        self.a = a_arr
        self.b = b_arr
        self.result = np.empty(n, dtype=np.int64)
        self.board = BorrowBoard(n)
        self.limb_count = n
        self.pass_index = 1
        self.done = False
        self.error: BaseException | None = None
        self._error_lock = threading.Lock()
        self.barrier = threading.Barrier(parties, action=self._coordinate)

    def record_error(self, exc: BaseException) -> None:
        with self._error_lock:
            if self.error is None:
                self.error = exc

    def _coordinate(self) -> None:
        # Runs in exactly one thread per barrier trip, while all workers
        # are parked; must never raise or the barrier breaks.
        if self.error is not None:
            self.done = True
        elif not has_pending_borrows(self.board.write):
            self.done = True
        elif self.pass_index >= self.limb_count:
            self.error = IterationLimitExceeded(
                f"borrows still pending after {self.pass_index} passes "
                f"over {self.limb_count} limbs"
            )
            self.done = True
        else:
            self.board.swap_and_reset()
            self.pass_index += 1


def _worker(chunk: ChunkAssignment, run: _SharedRun) -> None:
    try:
        while True:
            try:
                if run.pass_index == 1:
                    initial_pass(chunk, run.a, run.b, run.result, run.board.write)
                else:
                    borrow_pass(chunk, run.result, run.board.read, run.board.write)
            except Exception as exc:
                run.record_error(exc)
            run.barrier.wait()
            if run.done:
                return
    except threading.BrokenBarrierError:
        return


def subtract_parallel(
    a: DecimalMagnitude,
    b: DecimalMagnitude,
    workers: int,
) -> tuple[DecimalMagnitude, IterationStats]:
    """Compute a - b with a pool of workers; requires a >= b.

    Returns the difference (bit-identical to subtract_sequential for any
    worker count) and the pass statistics.  The pool is created once per
    call and reused across passes; total passes are hard-capped at the
    limb count, beyond which IterationLimitExceeded signals corruption.
    """
    if workers < 1:
        raise ValueError("workers must be positive")
    if compare_magnitude(a, b) < 0:
        raise NegativeResult("minuend is smaller than subtrahend")
    n = a.limb_count
    a_arr = np.array(a.limbs, dtype=np.int64)
    b_arr = np.zeros(n, dtype=np.int64)
    b_arr[n - b.limb_count :] = b.limbs
    chunks = partition_limbs(n, workers)
    run = _SharedRun(a_arr, b_arr, parties=len(chunks))
    pool = [
        threading.Thread(target=_worker, args=(chunk, run), name=f"limb-{chunk.worker_id}")
        for chunk in chunks
    ]
    for t in pool:
        t.start()
    for t in pool:
        t.join()
    if run.error is not None:
        raise run.error
    result = DecimalMagnitude(canonical_limbs(run.result.tolist()))
    return result, IterationStats(run.pass_index, n, len(chunks))
