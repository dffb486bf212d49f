"""Letters of a paper-folding word, evaluated directly from its defining rule."""

from __future__ import annotations

import numpy as np

from .instructions import InstructionSeq, Letter

SCAN_BOUND = 1 << 32  # scanning operations refuse to walk past this position
_CHUNK = 1 << 20


class ScanBoundError(ValueError):
    """A scanning operation was asked to walk past SCAN_BOUND positions."""


def _check_scan_limit(n: int) -> None:
    if n > SCAN_BOUND:
        raise ScanBoundError(f"position {n} exceeds the scan bound 2**32")


def decompose(i: int) -> tuple[int, int]:
    """Write i >= 1 as 2**k * (2j + 1) and return (k, j)."""
    if i < 1:
        raise ValueError(f"position {i} is not >= 1")
    k = (i & -i).bit_length() - 1
    return k, i >> (k + 1)


def letter(seq: InstructionSeq, i: int) -> Letter:
    """Letter f_i (positions start at 1): instruction b_k, negated when j is odd."""
    k, j = decompose(i)
    b = seq.letter_at(k)
    return -b if j & 1 else b


def minus_one_order(seq: InstructionSeq, i: int) -> int | None:
    """Order of the -1 at position i, or None when f_i = +1.

    f_i is -1 exactly when i lies in the residue class (2 + b_k) * 2**k
    modulo 2**(k+2), where k is the 2-adic valuation of i; that k is the
    order.
    """
    k, _ = decompose(i)
    mod = 1 << (k + 2)
    if i % mod == ((2 + seq.letter_at(k)) << k) % mod:
        return k
    return None


def prefix(seq: InstructionSeq, n: int) -> list[Letter]:
    """The first n letters f_1 .. f_n as a list."""
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    _check_scan_limit(n)
    return [letter(seq, i) for i in range(1, n + 1)]


def _instruction_table(seq: InstructionSeq, bits: int) -> np.ndarray:
    # b_k for every 2-adic valuation k that can occur below 2**bits
    return np.array([seq.letter_at(k) for k in range(bits + 1)], dtype=np.int64)


def _minus_mask(i: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Boolean mask marking positions whose letter is -1, per the defining rule."""
    low = i & -i
    k = np.frexp(low.astype(np.float64))[1] - 1  # exact: low is a power of two < 2**53
    j_odd = (i >> (k + 1)) & 1
    return table[k] * (1 - 2 * j_odd) == -1


def count_minus(seq: InstructionSeq, l: int, n: int) -> int:
    """Number of -1 letters among f_(l+1) .. f_n, counted by scanning every position."""
    if l < 0 or n < l:
        raise ValueError(f"bad interval ({l}, {n}]")
    _check_scan_limit(n)
    table = _instruction_table(seq, n.bit_length())
    total = 0
    for start in range(l + 1, n + 1, _CHUNK):
        i = np.arange(start, min(start + _CHUNK, n + 1), dtype=np.int64)
        total += int(np.count_nonzero(_minus_mask(i, table)))
    return total
