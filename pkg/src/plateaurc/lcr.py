"""Longest common plateau-k-rollercoaster of 2-4 words.

The tables mirror the single-word ones (same exact-h convention, same
h = 1 rule) over index tuples ``(i_1, ..., i_m)``. Tuples are stored as
rows over ``i_1`` and a flat row-major "slab" over the remaining
coordinates. Every predecessor tuple ``P_W[i - 1, x]`` is strictly smaller
in the first coordinate, so a whole slab is computed at once from earlier
rows with numpy gathers; the work stays O(N k sigma).
"""

from __future__ import annotations

from math import prod
from typing import Sequence

import numpy as np

from plateaurc.errors import MemoryBudgetExceeded, TooFewWords, TooLarge
from plateaurc.predecessor import MultiPredecessorTable
from plateaurc.words import DOWN, UP, Orientation, Word, as_word

DEFAULT_MEMORY_BUDGET = 1 << 30
MAX_WORDS = 4
_XI = {UP: 0, DOWN: 1}


def required_bytes(dims: Sequence[int], k: int, sigma: int) -> int:
    """Peak memory of ``compute_lcr_tables`` for words of these lengths."""
    n0, slab = dims[0], prod(dims[1:])
    cells = n0 * (slab + 1)
    # 2k value grids + unary grid (int32), per-letter predecessor maps (int64)
    # and per-letter equality masks (bool)
    return (2 * k + 1) * cells * 4 + sigma * slab * 8 + (sigma + 1) * slab


class LcrTables:
    """``grid[xi, h, r, f]`` for ``i_1 = r + 1`` and slab offset ``f``.

    Column ``slab`` of every row is a zero sentinel used for absent
    predecessors.
    """

    def __init__(self, words: list[Word], k: int, grid: np.ndarray, unary: np.ndarray, pred: MultiPredecessorTable):
        self.words = words
        self.k = k
        self.dims = tuple(len(w) for w in words)
        self.grid = grid
        self.unary = unary
        self.predecessors = pred
        self._rest = self.dims[1:]

    def _offset(self, index: Sequence[int]) -> tuple[int, int]:
        flat = int(np.ravel_multi_index(tuple(i - 1 for i in index[1:]), self._rest))
        return index[0] - 1, flat

    def value(self, xi: Orientation, h: int, index: Sequence[int]) -> int:
        r, f = self._offset(index)
        return int(self.grid[_XI[xi], h, r, f])

    def unary_value(self, index: Sequence[int]) -> int:
        r, f = self._offset(index)
        return int(self.unary[r, f])

    def values(self, xi: Orientation, h: int) -> np.ndarray:
        """Dense m-dimensional view of one table (0-based indices)."""
        return self.grid[_XI[xi], h, :, :-1].reshape(self.dims)

    def length(self) -> int:
        cells = self.grid[:, self.k, :, :-1]
        return int(cells.max()) if cells.size else 0

    def best_cell(self) -> tuple[Orientation, tuple[int, ...]] | None:
        """Maximal complete cell: UP before DOWN, then lexicographically first tuple."""
        m = self.length()
        if m == 0:
            return None
        for xi in (UP, DOWN):
            hits = np.argwhere(self.values(xi, self.k) == m)
            if len(hits):
                return xi, tuple(int(t) + 1 for t in hits[0])
        return None

    def witness_indices(self, xi: Orientation, h: int, index: Sequence[int]) -> list[tuple[int, ...]]:
        k = self.k
        target = self.value(xi, h, index)
        if target == 0:
            raise ValueError(f"empty LCR cell {(xi, h, tuple(index))}")
        index = tuple(index)
        out = [index]
        sigma = self.predecessors.sigma
        if k == 1:
            while target > 1:
                prev = tuple(i - 1 for i in index)
                for x in range(1, sigma + 1):
                    p = self.predecessors.get(prev, x)
                    if p is not None and self.value(xi, 1, p) == target - 1:
                        index, target = p, target - 1
                        out.append(index)
                        break
                else:
                    raise AssertionError("broken k = 1 LCR chain")
            out.reverse()
            return out
        while True:
            c = self.words[0][index[0]]
            if h == 1:
                if self.value(xi.complement(), k, index) == target:
                    xi, h = xi.complement(), k
                else:
                    p = self.predecessors.get(tuple(i - 1 for i in index), c)
                    while p is not None:
                        out.append(p)
                        p = self.predecessors.get(tuple(i - 1 for i in p), c)
                    break
            prev = tuple(i - 1 for i in index)
            strict = range(1, c) if xi is UP else range(c + 1, sigma + 1)
            best = None
            for x in list(strict) + [c]:
                p = self.predecessors.get(prev, x)
                if p is None:
                    continue
                options = [h] if x == c else ([k, k - 1] if h == k else [h - 1])
                for hh in options:
                    if self.value(xi, hh, p) == target - 1:
                        best = (p, hh)
                        break
                if best is not None:
                    break
            if best is None:
                raise AssertionError(f"no predecessor for LCR cell {(xi, h, index)}")
            index, h = best
            target -= 1
            out.append(index)
        out.reverse()
        return out


def _check_input(words, k: int, max_words: int) -> list[Word]:
    words = [as_word(w) for w in words]
    if len(words) < 2:
        raise TooFewWords(f"LCR needs at least 2 words, got {len(words)}")
    if len(words) > max_words:
        raise TooLarge(f"LCR accepts at most {max_words} words, got {len(words)}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    sigma = max(w.sigma for w in words)
    return [Word(w.letters, sigma) for w in words]


def compute_lcr_tables(
    words,
    k: int,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
    max_words: int = MAX_WORDS,
) -> LcrTables:
    words = _check_input(words, k, max_words)
    sigma = words[0].sigma
    dims = tuple(len(w) for w in words)
    need = required_bytes(dims, k, sigma)
    if need > memory_budget:
        raise MemoryBudgetExceeded(need, memory_budget)

    pred = MultiPredecessorTable(words)
    n0, rest = dims[0], dims[1:]
    slab = prod(rest)
    grid = np.zeros((2, k + 1, n0, slab + 1), dtype=np.int32)
    unary = np.zeros((n0, slab + 1), dtype=np.int32)
    if n0 == 0 or slab == 0:
        return LcrTables(words, k, grid, unary, pred)

    coords = np.unravel_index(np.arange(slab), rest)
    trailing = list(zip(words[1:], pred.tables[1:], coords))
    same = np.zeros((sigma + 1, slab), dtype=bool)
    pred_flat = np.full((sigma + 1, slab), slab, dtype=np.int64)
    for x in range(1, sigma + 1):
        eq = np.ones(slab, dtype=bool)
        ok = np.ones(slab, dtype=bool)
        parts = []
        for w, table, t in trailing:
            eq &= np.asarray(w.letters, dtype=np.int64)[t] == x
            # 0-based coordinate t holds i_j = t + 1, so P[i_j - 1, x] is row t
            p = table.entries[t, x]
            ok &= p > 0
            parts.append(np.where(p > 0, p - 1, 0))
        same[x] = eq
        pred_flat[x] = np.where(ok, np.ravel_multi_index(tuple(parts), rest), slab)

    first = words[0].letters
    first_table = pred.tables[0]
    zeros = np.zeros(slab, dtype=np.int32)
    up, down = _XI[UP], _XI[DOWN]

    for r in range(n0):
        c = first[r]
        mask = same[c]
        if not mask.any():
            continue
        prow = first_table.row(r)
        # gathered[x][...] holds the tables at P_W[(i_1, ...) - 1, x] for the slab
        gathered = {}
        for x in range(1, sigma + 1):
            if prow[x]:
                gathered[x] = (grid[:, :, prow[x] - 1, pred_flat[x]], unary[prow[x] - 1, pred_flat[x]])

        def pick(xs, o, h):
            arrs = [gathered[x][0][o, h] for x in xs if x in gathered]
            return np.maximum.reduce(arrs) if arrs else zeros

        row = grid[:, :, r, :slab]
        u_prev = gathered[c][1] if c in gathered else zeros
        u_row = np.where(mask, u_prev + 1, 0)
        unary[r, :slab] = u_row
        if k == 1:
            for o in (up, down):
                best = pick(range(1, sigma + 1), o, 1)
                row[o, 1] = np.where(mask, best + 1, 0)
            continue
        for o, strict in ((up, range(1, c)), (down, range(c + 1, sigma + 1))):
            for h in range(2, k):
                best = np.maximum(pick(strict, o, h - 1), pick([c], o, h))
                row[o, h] = np.where(mask & (best > 0), best + 1, 0)
            best = np.maximum(pick(strict, o, k - 1), pick(list(strict) + [c], o, k))
            row[o, k] = np.where(mask & (best > 0), best + 1, 0)
        row[up, 1] = np.where(mask, np.maximum(row[down, k], u_row), 0)
        row[down, 1] = np.where(mask, np.maximum(row[up, k], u_row), 0)

    return LcrTables(words, k, grid, unary, pred)


def lcr_length(words, k: int, **kwargs) -> int:
    return compute_lcr_tables(words, k, **kwargs).length()


def lcr_witness(words, k: int, **kwargs) -> Word | None:
    tables = compute_lcr_tables(words, k, **kwargs)
    cell = tables.best_cell()
    if cell is None:
        return None
    xi, index = cell
    first = tables.words[0]
    return Word((first[t[0]] for t in tables.witness_indices(xi, k, index)), first.sigma)
