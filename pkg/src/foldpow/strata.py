"""Closed-form counting of -1s of each order over intervals and block runs.

Positions carrying a -1 of order k are exactly those in the residue class
(2 + b_k) * 2**k modulo 2**(k+2).  Everything here counts such positions with
integer arithmetic only, so all operations work on arbitrarily large inputs.
"""

from __future__ import annotations

from .instructions import InstructionSeq, Letter


def _check_letter(b: int) -> None:
    if b != 1 and b != -1:
        raise ValueError(f"letter must be +1 or -1, got {b!r}")


def _check_interval(l: int, n: int) -> None:
    if l < 0:
        raise ValueError(f"interval start {l} is negative")
    if n < l:
        raise ValueError(f"interval ({l}, {n}] has negative length")


def _check_blocks(s: int, d: int, m: int) -> None:
    if s < 0:
        raise ValueError("start offset must be >= 0")
    if d < 1:
        raise ValueError("block length must be >= 1")
    if m < 1:
        raise ValueError("block count must be >= 1")


def gmod_gt(a: int, b: int, n: int) -> bool:
    """(a mod n) > (b mod n), both residues normalized into 0 .. n-1."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return a % n > b % n


def epsilon(k: int, b: Letter, l: int, n: int) -> int:
    """0/1 correction: one extra order-k hit in (l, n] beyond the whole-period hits.

    An interval of length n - l is guaranteed floor((n - l) / 2**(k+2)) members
    of the class (2 + b) * 2**k mod 2**(k+2); the leftover stretch holds one
    more exactly when n - l beats (2 + b) * 2**k - (l + 1) in the residue
    order mod 2**(k+2).  The right-hand side is routinely negative, which is
    why both sides are normalized first.
    """
    _check_letter(b)
    _check_interval(l, n)
    mod = 1 << (k + 2)
    return 1 if (n - l) % mod > (((2 + b) << k) - (l + 1)) % mod else 0


def d_count(k: int, b: Letter, l: int, n: int) -> int:
    """How many i in (l, n] lie in the order-k class (2 + b) * 2**k mod 2**(k+2)."""
    return ((n - l) >> (k + 2)) + epsilon(k, b, l, n)


def e_vector(k: int, b: Letter, s: int, d: int, m: int) -> tuple[int, ...]:
    """Per-block epsilon flags over m consecutive length-d blocks starting after s."""
    _check_blocks(s, d, m)
    return tuple(epsilon(k, b, s + j * d, s + (j + 1) * d) for j in range(m))


def delta(seq: InstructionSeq, s: int, d: int, m: int) -> tuple[int, ...]:
    """Per-block excess of -1s over the count forced by the block length alone.

    Sums the epsilon flags of every order; orders above bit_length(s + m*d)
    cannot contribute because the least member of an order-k class is 2**k.
    A constant result certifies that the m blocks form an abelian power.
    """
    _check_blocks(s, d, m)
    acc = [0] * m
    for k in range(0, (s + m * d).bit_length() + 1):
        b = seq.letter_at(k)
        mod = 1 << (k + 2)
        lead = (2 + b) << k
        for j in range(m):
            l = s + j * d
            if d % mod > (lead - (l + 1)) % mod:
                acc[j] += 1
    return tuple(acc)


def expected_count(d: int) -> int:
    """-1s that any length-d window must contain: sum of floor(d / 2**(k+2))."""
    if d < 1:
        raise ValueError("block length must be >= 1")
    return sum(d >> (k + 2) for k in range(d.bit_length() + 1))
