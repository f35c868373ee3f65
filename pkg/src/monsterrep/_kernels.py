"""JIT kernel selection.

The hot inner loops (signed lane gathers between packed vectors) are
compiled with numba when it is available.  Setting the environment
variable ``MONSTERREP_JIT=0`` before import forces the pure-numpy
fallback; ``set_jit`` toggles it at runtime (used by the benchmark to
time both paths).
"""

import os

import numpy as np

try:
    if os.environ.get("MONSTERREP_JIT", "1") == "0":
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func
        return wrap if not (args and callable(args[0])) else args[0]


_USE_JIT = HAVE_NUMBA


def jit_enabled() -> bool:
    return _USE_JIT


def set_jit(enabled: bool) -> bool:
    """Enable/disable the numba path; returns the previous setting."""
    global _USE_JIT
    prev = _USE_JIT
    _USE_JIT = bool(enabled) and HAVE_NUMBA
    return prev


@njit(cache=True)
def _gather_signed_njit(dst, src, dst_word, dst_shift, src_word, src_shift,
                        neg, lane_mask):
    for t in range(dst_word.shape[0]):
        v = (src[src_word[t]] >> src_shift[t]) & lane_mask
        v ^= neg[t]
        dst[dst_word[t]] |= v << dst_shift[t]


def _gather_signed_np(dst, src, dst_word, dst_shift, src_word, src_shift,
                      neg, lane_mask, slot_starts, k):
    # Entries are pre-sorted by destination slot; one vector op per slot.
    for s in range(len(slot_starts) - 1):
        lo, hi = slot_starts[s], slot_starts[s + 1]
        if lo == hi:
            continue
        v = (src[src_word[lo:hi]] >> src_shift[lo:hi]) & lane_mask
        v ^= neg[lo:hi]
        dst[dst_word[lo:hi]] |= v << np.uint64(s * k)


def gather_signed(dst, src, table, lane_mask, k):
    """dst_lane |= +-src_lane per the precomputed signed-permutation table.

    Destination lanes must be zero beforehand.  ``table`` is a GatherTable;
    its entries are sorted by destination slot so the numpy fallback can
    run one vectorized pass per slot.
    """
    if _USE_JIT:
        _gather_signed_njit(dst, src, table.dst_word, table.dst_shift,
                            table.src_word, table.src_shift, table.neg,
                            np.uint64(lane_mask))
    else:
        _gather_signed_np(dst, src, table.dst_word, table.dst_shift,
                          table.src_word, table.src_shift, table.neg,
                          np.uint64(lane_mask), table.slot_starts, k)


class GatherTable:
    """A signed lane permutation in packed address form."""

    __slots__ = ("dst_word", "dst_shift", "src_word", "src_shift", "neg",
                 "slot_starts")

    def __init__(self, dst_lane, src_lane, sign, lanes_per_word, k, p):
        dst_lane = np.asarray(dst_lane, dtype=np.int64)
        src_lane = np.asarray(src_lane, dtype=np.int64)
        sign = np.asarray(sign, dtype=np.uint64)
        slot = dst_lane % lanes_per_word
        order = np.argsort(slot, kind="stable")
        dst_lane, src_lane = dst_lane[order], src_lane[order]
        slot = slot[order]
        self.dst_word = (dst_lane // lanes_per_word).astype(np.int64)
        self.dst_shift = (slot * k).astype(np.uint64)
        self.src_word = (src_lane // lanes_per_word).astype(np.int64)
        self.src_shift = ((src_lane % lanes_per_word) * k).astype(np.uint64)
        self.neg = sign[order] * np.uint64(p)
        counts = np.bincount(slot, minlength=lanes_per_word)
        self.slot_starts = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
