"""Last-occurrence tables.

``P[i, x]`` is the largest ``i' <= i`` with ``w[i'] = x``, or ``None`` when
``x`` does not occur in ``w[1, i]``. Row 0 (the empty prefix) is all ``None``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from plateaurc.errors import TooFewWords, TooLarge
from plateaurc.words import Word, as_word

_ABSENT = -1
# 1 GiB of int64 entries; larger alphabets should be relabeled first
MAX_CELLS = 1 << 27


class PredecessorTable:
    """Dense ``(n + 1) x (sigma + 1)`` table; column 0 and row 0 are padding."""

    def __init__(self, w):
        w = as_word(w)
        self.word = w
        self.n = len(w)
        self.sigma = w.sigma
        if (self.n + 1) * (self.sigma + 1) > MAX_CELLS:
            raise TooLarge(f"predecessor table of {self.n + 1} x {self.sigma + 1} entries exceeds {MAX_CELLS}")
        entries = np.full((self.n + 1, self.sigma + 1), _ABSENT, dtype=np.int64)
        for i, x in enumerate(w.letters, 1):
            entries[i] = entries[i - 1]
            entries[i, x] = i
        entries.flags.writeable = False
        self.entries = entries

    def get(self, i: int, x: int) -> int | None:
        if not 1 <= x <= self.sigma:
            return None
        p = int(self.entries[i, x])
        return None if p == _ABSENT else p

    __call__ = get

    def row(self, i: int) -> list[int]:
        """Row ``i`` as a list indexed by letter, with 0 for absent entries.

        Position 0 never occurs in a 1-based word, so the DPs can use it
        as a falsy sentinel in their inner loops.
        """
        r = self.entries[i].tolist()
        return [p if p > 0 else 0 for p in r]

    def __repr__(self) -> str:
        return f"PredecessorTable(n={self.n}, sigma={self.sigma})"


def build_predecessor_table(w) -> PredecessorTable:
    return PredecessorTable(w)


class MultiPredecessorTable:
    """Tuple-valued last occurrences for several words, computed on access."""

    def __init__(self, words: Sequence[Word | str]):
        words = [as_word(w) for w in words]
        if len(words) < 2:
            raise TooFewWords(f"need at least 2 words, got {len(words)}")
        self.sigma = max(w.sigma for w in words)
        self.words = [Word(w.letters, self.sigma) for w in words]
        self.dims = tuple(len(w) for w in self.words)
        self.tables = [PredecessorTable(w) for w in self.words]

    def get(self, index: Sequence[int], x: int) -> tuple[int, ...] | None:
        out = []
        for table, i in zip(self.tables, index):
            p = table.get(i, x)
            if p is None:
                return None
            out.append(p)
        return tuple(out)

    __call__ = get


def build_multi_predecessor(words: Sequence[Word | str]) -> MultiPredecessorTable:
    return MultiPredecessorTable(words)
