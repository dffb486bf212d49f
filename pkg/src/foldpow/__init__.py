"""Abelian powers in paper-folding words.

A folding word over {+1, -1} is determined by an eventually periodic
instruction sequence.  This package counts its -1 letters order by order in
closed form, constructs explicit abelian m-powers for every m by shift-and-add
of per-block excess vectors, and double-checks everything against brute-force
scanning oracles.  All values are immutable and all functions pure, so the
whole API is safe for concurrent use.
"""

from .cli import SeqSpecError, main, parse_seq_spec
from .construct import (
    ELL_ROWS,
    ELL_TABLE,
    CombineError,
    CombineStep,
    MagnitudeError,
    ParityError,
    PowerWitness,
    SynchronizationError,
    build_abelian_power,
    check_precondition,
    combine,
    constant_family,
    ell_base,
    ell_t,
)
from .folding import (
    SCAN_BOUND,
    ScanBoundError,
    count_minus,
    decompose,
    letter,
    minus_one_order,
    prefix,
)
from .instructions import REGULAR, InstructionSeq, Letter
from .oracle import (
    SearchBounds,
    find_minimal_power,
    is_abelian_power,
    scan_d_count,
    scan_delta,
)
from .strata import d_count, delta, e_vector, epsilon, expected_count, gmod_gt

__version__ = "0.1.0"

__all__ = [
    "ELL_ROWS",
    "ELL_TABLE",
    "REGULAR",
    "SCAN_BOUND",
    "CombineError",
    "CombineStep",
    "InstructionSeq",
    "Letter",
    "MagnitudeError",
    "ParityError",
    "PowerWitness",
    "ScanBoundError",
    "SearchBounds",
    "SeqSpecError",
    "SynchronizationError",
    "build_abelian_power",
    "check_precondition",
    "combine",
    "constant_family",
    "count_minus",
    "d_count",
    "decompose",
    "delta",
    "e_vector",
    "ell_base",
    "ell_t",
    "epsilon",
    "expected_count",
    "find_minimal_power",
    "gmod_gt",
    "is_abelian_power",
    "letter",
    "main",
    "minus_one_order",
    "parse_seq_spec",
    "prefix",
    "scan_d_count",
    "scan_delta",
]
