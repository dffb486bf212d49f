"""Witness construction: clean interval starts and shift-and-add of block vectors."""

from __future__ import annotations

from dataclasses import dataclass

from . import strata
from .instructions import InstructionSeq, Letter

# Start offsets keyed by the first four instructions: with (b_0..b_3) = (x0..x3)
# the three letters after position ell are all +1, and no position in
# (ell, ell + 3] lies in an order-k class for any k.  Kept in display order.
ELL_ROWS: tuple[tuple[tuple[Letter, Letter, Letter, Letter], int], ...] = (
    ((1, 1, 1, 1), 7),
    ((-1, 1, 1, 1), 1),
    ((1, -1, 1, 1), 3),
    ((-1, -1, 1, 1), 5),
    ((1, 1, -1, 1), 7),
    ((-1, 1, -1, 1), 9),
    ((1, -1, -1, 1), 11),
    ((-1, -1, -1, 1), 5),
    ((1, 1, 1, -1), 23),
    ((-1, 1, 1, -1), 1),
    ((1, -1, 1, -1), 3),
    ((-1, -1, 1, -1), 21),
    ((1, 1, -1, -1), 23),
    ((-1, 1, -1, -1), 9),
    ((1, -1, -1, -1), 11),
    ((-1, -1, -1, -1), 21),
)

ELL_TABLE: dict[tuple[Letter, Letter, Letter, Letter], int] = dict(ELL_ROWS)


class CombineError(ValueError):
    """A hypothesis of the shift-and-add rule was violated."""


class ParityError(CombineError):
    """The shifted-in pair must have an even offset and an even block length."""


class MagnitudeError(CombineError):
    """The scaling power 2**r does not exceed the span of the kept pair."""


class SynchronizationError(CombineError):
    """Instructions disagree across the shift at an order where block flags differ."""


def ell_base(x0: Letter, x1: Letter, x2: Letter, x3: Letter) -> int:
    """Start offset whose next three letters are all +1 under instructions x0..x3."""
    key = (x0, x1, x2, x3)
    try:
        return ELL_TABLE[key]
    except KeyError:
        raise ValueError(f"letters must be +1 or -1, got {key}") from None


def ell_t(seq: InstructionSeq, t: int) -> int:
    """Scaled clean start 2**t * ell_base(b_t, ..., b_(t+3)).

    The window (ell_t, ell_t + 2**(t+2) - 1] then contains no -1 of any
    order >= t, for the given sequence.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    return (1 << t) * ell_base(*(seq.letter_at(t + i) for i in range(4)))


def check_precondition(seq: InstructionSeq, s_b: int, d_b: int, m: int, r: int) -> bool:
    """Shift synchronization: wherever the per-block flags of the two letter
    choices differ at order i, the instructions must satisfy b_i == b_(i+r)."""
    if s_b < 0 or d_b < 0:
        raise ValueError("pair entries must be >= 0")
    if d_b == 0:
        return True
    for i in range((s_b + m * d_b).bit_length() + 1):
        if strata.e_vector(i, 1, s_b, d_b, m) != strata.e_vector(i, -1, s_b, d_b, m):
            if seq.letter_at(i) != seq.letter_at(i + r):
                return False
    return True


def combine(
    seq: InstructionSeq,
    a: tuple[int, int],
    b: tuple[int, int],
    m: int,
    r: int,
) -> tuple[int, int]:
    """Merge two block runs: (sa, da), (sb, db) -> (sa + 2**r * sb, da + 2**r * db).

    Under the three hypotheses below, the per-block excess vectors at block
    count m add entrywise, so runs with constant excess stay constant:

    * parity: sb and db are even;
    * magnitude: 2**r > sa + m * da;
    * synchronization: b_i == b_(i+r) at every order i where the block flags
      of the shifted-in run differ between the two letter choices.

    Each violation raises its own error type so callers can tell which
    hypothesis failed.
    """
    sa, da = a
    sb, db = b
    if sa < 0 or sb < 0 or da < 1 or db < 1:
        raise ValueError("pairs must have s >= 0 and d >= 1")
    if m < 1:
        raise ValueError("block count must be >= 1")
    if r < 0:
        raise ValueError("shift must be >= 0")
    if sb % 2 != 0 or db % 2 != 0:
        raise ParityError(f"shifted-in pair ({sb}, {db}) must have even entries")
    if (1 << r) <= sa + m * da:
        raise MagnitudeError(f"2**{r} must exceed {sa} + {m}*{da} = {sa + m * da}")
    if not check_precondition(seq, sb, db, m, r):
        raise SynchronizationError(
            f"instructions disagree across shift {r} at an order with differing block flags"
        )
    return sa + (1 << r) * sb, da + (1 << r) * db


def constant_family(seq: InstructionSeq, t: int, u: int) -> list[tuple[int, int]]:
    """The 2**(t-u) runs (ell_(t-1) + 2**u * p, 2**u) whose excess vectors sum to
    the constant vector with every entry 2**(t-u) - 1, at block count 2**(t-u)."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if not 1 <= u < t:
        raise ValueError("u must satisfy 1 <= u < t")
    base = ell_t(seq, t - 1)
    step = 1 << u
    return [(base + step * p, step) for p in range(1 << (t - u))]


@dataclass(frozen=True)
class CombineStep:
    """One shift-and-add: the pair merged in and the scaling power used."""

    base_s: int
    base_d: int
    r: int


@dataclass(frozen=True)
class PowerWitness:
    """Explicit abelian power: the m blocks f_(s+jd+1) .. f_(s+(j+1)d), j < m,
    all hold the same number of -1s; delta is their common per-block excess."""

    s: int
    d: int
    m: int
    delta: tuple[int, ...]
    trace: tuple[CombineStep, ...]
    u: int
    t: int
    q: int

    def to_json_dict(self) -> dict:
        """Wire form; s and d go out as decimal strings since they outgrow 64 bits."""
        return {
            "s": str(self.s),
            "d": str(self.d),
            "m": self.m,
            "delta": list(self.delta),
            "params": {"u": self.u, "t": self.t, "q": self.q},
            "trace": [
                {"base_s": str(st.base_s), "base_d": str(st.base_d), "r": st.r}
                for st in self.trace
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> PowerWitness:
        return cls(
            s=int(obj["s"]),
            d=int(obj["d"]),
            m=int(obj["m"]),
            delta=tuple(int(x) for x in obj["delta"]),
            trace=tuple(
                CombineStep(int(st["base_s"]), int(st["base_d"]), int(st["r"]))
                for st in obj["trace"]
            ),
            u=int(obj["params"]["u"]),
            t=int(obj["params"]["t"]),
            q=int(obj["params"]["q"]),
        )


def build_abelian_power(seq: InstructionSeq, m: int) -> PowerWitness:
    """Construct an explicit abelian m-power in the folding word of seq.

    Runs at the next power of two m' >= m: picks u past the preperiod so the
    synchronization window sits in the periodic part, t = u + log2(m'), and
    folds the constant-sum family together one pair at a time, each time with
    the smallest admissible shift.  For m < m' the first m of the m' equal
    blocks are reported.  The result is validated before returning.
    """
    if m < 1:
        raise ValueError("block count must be >= 1")
    if m == 1:
        # a single nonempty block is trivially an abelian 1-power
        return PowerWitness(0, 1, 1, strata.delta(seq, 0, 1, 1), (), 0, 0, 0)
    m2 = 1 << (m - 1).bit_length()
    q = m2.bit_length() - 1
    u = max(1, len(seq.preperiod) + 1)  # window [u-1, t+2] avoids the preperiod
    t = u + q
    pairs = constant_family(seq, t, u)
    s, d = pairs[0]
    trace: list[CombineStep] = []
    for base_s, base_d in pairs[1:]:
        r = seq.find_shift(u - 1, t + 2, s + m2 * d)
        s, d = combine(seq, (s, d), (base_s, base_d), m2, r)
        trace.append(CombineStep(base_s, base_d, r))
    vec = strata.delta(seq, s, d, m2)
    if any(x != m2 - 1 for x in vec):
        raise RuntimeError(f"construction produced non-constant excess {vec}")
    report = vec if m == m2 else strata.delta(seq, s, d, m)
    return PowerWitness(s, d, m, report, tuple(trace), u, t, q)
