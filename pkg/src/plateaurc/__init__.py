"""Plateau-k-rollercoasters: longest, counted, enumerated and common to several words."""

from plateaurc.counting import RollercoasterTable, compute_rollercoaster_table, count_maximum_rollercoasters
from plateaurc.enumeration import MaximumRollercoasterEnumerator, enumerate_maximum
from plateaurc.errors import (
    EmptyWord,
    InvalidH,
    InvalidWord,
    InvariantViolation,
    MemoryBudgetExceeded,
    PlateauError,
    ResourceLimit,
    TableMismatch,
    TooFewWords,
    TooLarge,
)
from plateaurc.lcr import LcrTables, compute_lcr_tables, lcr_length, lcr_witness
from plateaurc.longest import LongestTables, compute_longest_tables, longest_length, longest_witness
from plateaurc.neg import Label, NegGraph, build_neg
from plateaurc.predecessor import MultiPredecessorTable, PredecessorTable, build_predecessor_table
from plateaurc.words import (
    DOWN,
    UP,
    Orientation,
    Run,
    Word,
    decompose_runs,
    is_plateau_k_h_xi_rollercoaster,
    is_plateau_k_rollercoaster,
    is_plateau_k_run,
    is_plateau_run,
)

__version__ = "0.1.0"
