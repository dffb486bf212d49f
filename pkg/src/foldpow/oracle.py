"""Brute-force ground truth for everything the closed forms claim.

Every operation here works by scanning actual positions, never by the
floor-plus-correction arithmetic it is meant to check.  Scans are vectorized
but definitional.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .folding import _CHUNK, SCAN_BOUND, ScanBoundError, _instruction_table, _minus_mask, count_minus
from .instructions import InstructionSeq, Letter
from .strata import expected_count


def scan_d_count(seq: InstructionSeq, k: int, b: Letter, l: int, n: int) -> int:
    """Count i in (l, n] with i == (2 + b) * 2**k (mod 2**(k+2)) by testing every position.

    The count never depends on seq; the argument mirrors scan_delta so the two
    scanning oracles share a call shape.
    """
    if b != 1 and b != -1:
        raise ValueError(f"letter must be +1 or -1, got {b!r}")
    if k < 0:
        raise ValueError("order must be >= 0")
    if l < 0 or n < l:
        raise ValueError(f"bad interval ({l}, {n}]")
    if n > SCAN_BOUND:
        raise ScanBoundError(f"position {n} exceeds the scan bound 2**32")
    step = 1 << (k + 2)
    target = ((2 + b) << k) % step
    if step > n:
        # the class meets (0, n] at most once, at its least positive member
        # (target is (2+b)*2**k itself, already reduced and nonzero)
        return 1 if l < target <= n else 0
    total = 0
    for start in range(l + 1, n + 1, _CHUNK):
        i = np.arange(start, min(start + _CHUNK, n + 1), dtype=np.int64)
        total += int(np.count_nonzero(i % step == target))
    return total


def scan_delta(seq: InstructionSeq, s: int, d: int, m: int) -> tuple[int, ...]:
    """Per-block excess of -1s, with every block count obtained by direct scan."""
    if s < 0 or d < 1 or m < 1:
        raise ValueError("need s >= 0, d >= 1, m >= 1")
    if s + m * d > SCAN_BOUND:
        raise ScanBoundError(f"position {s + m * d} exceeds the scan bound 2**32")
    base = expected_count(d)
    entries = tuple(count_minus(seq, s + j * d, s + (j + 1) * d) - base for j in range(m))
    if any(e < 0 for e in entries):
        raise RuntimeError(f"block held fewer -1s than the guaranteed minimum: {entries}")
    return entries


def is_abelian_power(seq: InstructionSeq, s: int, d: int, m: int) -> bool:
    """Do the m consecutive length-d blocks starting at s + 1 all hold the same
    number of -1s?  Equal +1 counts follow from the equal lengths."""
    if s < 0 or d < 1 or m < 1:
        raise ValueError("need s >= 0, d >= 1, m >= 1")
    if s + m * d > SCAN_BOUND:
        raise ScanBoundError(f"position {s + m * d} exceeds the scan bound 2**32")
    first = count_minus(seq, s, s + d)
    return all(
        count_minus(seq, s + j * d, s + (j + 1) * d) == first for j in range(1, m)
    )


@dataclass(frozen=True)
class SearchBounds:
    """Search grid limits: offsets 0..s_max, block lengths 1..d_max."""

    s_max: int
    d_max: int


def find_minimal_power(
    seq: InstructionSeq, m: int, bounds: SearchBounds
) -> tuple[int, int] | None:
    """Exhaustive search for the abelian m-power with the smallest block length.

    Returns the (s, d) minimizing d, ties broken by the smaller s, or None when
    nothing inside the bounds qualifies.  Scans the whole grid, so keep the
    bounds at desk scale.
    """
    if m < 1:
        raise ValueError("block count must be >= 1")
    if bounds.s_max < 0 or bounds.d_max < 1:
        raise ValueError("need s_max >= 0 and d_max >= 1")
    total = bounds.s_max + m * bounds.d_max
    if total > SCAN_BOUND:
        raise ScanBoundError(f"search grid reaches {total}, past the scan bound 2**32")
    # cum[i] = number of -1s among f_1 .. f_i; block counts become differences
    table = _instruction_table(seq, total.bit_length())
    cum = np.zeros(total + 1, dtype=np.int64)
    for start in range(1, total + 1, _CHUNK):
        i = np.arange(start, min(start + _CHUNK, total + 1), dtype=np.int64)
        cum[start : start + i.size] = _minus_mask(i, table)
    np.cumsum(cum, out=cum)
    offsets = np.arange(bounds.s_max + 1, dtype=np.int64)
    for d in range(1, bounds.d_max + 1):
        edges = offsets[None, :] + d * np.arange(m + 1, dtype=np.int64)[:, None]
        counts = np.diff(cum[edges], axis=0)
        hits = np.flatnonzero(np.all(counts == counts[:1], axis=0))
        if hits.size:
            return int(hits[0]), d
    return None
