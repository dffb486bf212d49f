"""Eventually periodic fold-instruction sequences and synchronizing shifts."""

from __future__ import annotations

from dataclasses import dataclass

Letter = int  # +1 or -1


def _validate_letters(letters: tuple[int, ...], what: str) -> None:
    for x in letters:
        if x != 1 and x != -1:
            raise ValueError(f"{what} contains {x!r}; letters must be +1 or -1")


@dataclass(frozen=True)
class InstructionSeq:
    """The fold-direction sequence b0 b1 b2 ..., a preperiod followed by a repeating period.

    Instances are immutable and safe to share between threads.  The regular
    (all +1) sequence is the special case of an empty preperiod with period
    (1,); it is not represented any differently.
    """

    preperiod: tuple[Letter, ...] = ()
    period: tuple[Letter, ...] = (1,)

    def __post_init__(self) -> None:
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        _validate_letters(self.preperiod, "preperiod")
        _validate_letters(self.period, "period")

    @classmethod
    def regular(cls) -> InstructionSeq:
        """The all +1 instruction sequence."""
        return cls((), (1,))

    def letter_at(self, k: int) -> Letter:
        """Instruction b_k; indices start at 0."""
        if k < 0:
            raise ValueError(f"instruction index {k} is negative")
        p = len(self.preperiod)
        if k < p:
            return self.preperiod[k]
        return self.period[(k - p) % len(self.period)]

    def _window_shift_ok(self, lo: int, hi: int, r: int) -> bool:
        return all(self.letter_at(i) == self.letter_at(i + r) for i in range(lo, hi + 1))

    def find_shift(self, lo: int, hi: int, bound: int) -> int:
        """Smallest r with 2**r > bound and b_i == b_(i+r) for every i in [lo, hi].

        The search starts at bit_length(bound), the least r clearing the
        power condition, and walks upward.  Once every compared position
        i + r is past the preperiod, the window comparison depends on r only
        modulo the period length, so the walk either succeeds within one full
        cycle of shifts or proves that no shift ever matches; the latter
        raises instead of looping forever (it can only happen when the window
        overlaps a preperiod position that disagrees with every repetition).
        """
        if lo < 0 or hi < lo:
            raise ValueError(f"bad window [{lo}, {hi}]")
        if bound < 0:
            raise ValueError("bound must be >= 0")
        r0 = bound.bit_length()
        stable = max(r0, len(self.preperiod) - lo, 0)
        limit = stable + len(self.period)
        for r in range(r0, limit + 1):
            if self._window_shift_ok(lo, hi, r):
                return r
        raise ValueError(
            f"no shift r with 2**r > {bound} matches the instructions on [{lo}, {hi}]"
        )

    def spec_string(self) -> str:
        """Render in the CLI grammar: regular | periodic:<bits> | preperiod:<bits>,period:<bits>."""
        if not self.preperiod:
            return "regular" if self.period == (1,) else f"periodic:{_bits(self.period)}"
        return f"preperiod:{_bits(self.preperiod)},period:{_bits(self.period)}"


def _bits(letters: tuple[Letter, ...]) -> str:
    return "".join("1" if x == 1 else "0" for x in letters)


REGULAR = InstructionSeq.regular()
