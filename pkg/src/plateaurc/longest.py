"""Longest plateau-(k,h)-rollercoasters ending at each position.

``values[xi][h][i]`` is the length of the longest subsequence of ``w[1, i]``
that ends at position ``i``, has only complete runs (>= k distinct letters)
before its last run, and whose last run has orientation ``xi`` and holds
exactly ``h`` distinct letters (at least ``k`` when ``h = k``). Zero means
no such subsequence exists.

The ``h = 1`` row needs a convention: a last run with a single distinct
letter is either the whole (unary) word or the turning plateau of a
complete run of the opposite orientation. Both are admitted, so

    values[xi][1][i] = max(values[~xi][k][i], unary[i])

with ``unary[i]`` the number of occurrences of ``w[i]`` in ``w[1, i]``.
"""

from __future__ import annotations

from plateaurc.errors import EmptyWord
from plateaurc.predecessor import PredecessorTable
from plateaurc.words import DOWN, UP, Orientation, Word, as_word

ORIENTATIONS = (UP, DOWN)


class LongestTables:
    def __init__(self, w: Word, k: int, values, unary, predecessors: PredecessorTable):
        self.word = w
        self.k = k
        self.n = len(w)
        self.values = values
        self.unary = unary
        self.predecessors = predecessors

    def value(self, xi: Orientation, h: int, i: int) -> int:
        return self.values[xi][h][i]

    def row(self, xi: Orientation, h: int) -> list[int]:
        """Row as a 1-based list of length n (index 0 dropped)."""
        return self.values[xi][h][1:]

    def longest(self) -> int:
        return max(max(self.values[xi][self.k]) for xi in ORIENTATIONS)

    def end_cells(self, length: int):
        """Cells ``(i, xi)`` ending a complete rollercoaster of ``length``.

        Ordered by ascending letter of the final position, then UP before
        DOWN; only final occurrences ``P[n, x]`` can end a longest one.
        """
        last = self.predecessors.row(self.n)
        for x in range(1, self.word.sigma + 1):
            i = last[x]
            if not i:
                continue
            for xi in ORIENTATIONS:
                if self.values[xi][self.k][i] == length:
                    yield i, xi

    def witness_positions(self, xi: Orientation, h: int, i: int) -> list[int]:
        """Positions of one subsequence realizing ``values[xi][h][i]``.

        Predecessors are taken from ``P[i - 1, .]`` and the largest valid
        position wins; at one position the same-h state is preferred over
        the h - 1 state.
        """
        if self.values[xi][h][i] == 0:
            raise ValueError(f"no plateau-({self.k},{h}) rollercoaster ends at {i}")
        a = self.word.letters
        k = self.k
        vals = self.values
        out = [i]
        target = vals[xi][h][i]
        if k == 1:
            return list(range(1, i + 1))
        while True:
            if h == 1:
                if vals[xi.complement()][k][i] == target:
                    xi, h = xi.complement(), k
                else:
                    # unary word: every earlier occurrence of the letter
                    p = self.predecessors.row(i - 1)[a[i - 1]]
                    while p:
                        out.append(p)
                        p = self.predecessors.row(p - 1)[a[i - 1]]
                    break
            c = a[i - 1]
            row = self.predecessors.row(i - 1)
            strict = range(1, c) if xi is UP else range(c + 1, self.word.sigma + 1)
            best = None
            for x in list(strict) + [c]:
                j = row[x]
                if not j or (best is not None and j <= best[0]):
                    continue
                if x == c:
                    options = [h]
                elif h == k:
                    options = [k, k - 1]
                else:
                    options = [h - 1]
                for hh in options:
                    if vals[xi][hh][j] == target - 1:
                        best = (j, hh)
                        break
            if best is None:
                raise AssertionError(f"no predecessor for cell ({xi}, {h}, {i})")
            i, h = best
            target -= 1
            out.append(i)
        out.reverse()
        return out

    def witness(self, xi: Orientation, h: int, i: int) -> Word:
        a = self.word.letters
        return Word((a[p - 1] for p in self.witness_positions(xi, h, i)), self.word.sigma)


def compute_longest_tables(w, k: int) -> LongestTables:
    w = as_word(w)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = len(w)
    if n == 0:
        raise EmptyWord("longest tables need a nonempty word")
    sigma = w.sigma
    P = PredecessorTable(w)
    values = {xi: [None] + [[0] * (n + 1) for _ in range(k)] for xi in ORIENTATIONS}
    unary = [0] * (n + 1)

    # cache[xi][h][x] mirrors values[xi][h][P[i - 1, x]] (0 when x is absent),
    # so candidate scans over {P[i - 1, x]} become slices over letters
    cache = {xi: [None] + [[0] * (sigma + 1) for _ in range(k)] for xi in ORIENTATIONS}
    ucache = [0] * (sigma + 1)

    for i, c in enumerate(w.letters, 1):
        unary[i] = ucache[c] + 1
        for xi in ORIENTATIONS:
            strict = slice(1, c) if xi is UP else slice(c + 1, sigma + 1)
            weak = slice(1, c + 1) if xi is UP else slice(c, sigma + 1)
            cx = cache[xi]
            vx = values[xi]
            if k == 1:
                # every word is a plateau-1-rollercoaster
                best = max(max(cx[1]), 0)
                vx[1][i] = best + 1
                continue
            for h in range(2, k):
                best = max(max(cx[h - 1][strict], default=0), cx[h][c])
                vx[h][i] = best + 1 if best > 0 else 0
            best = max(max(cx[k - 1][strict], default=0), max(cx[k][weak]))
            vx[k][i] = best + 1 if best > 0 else 0
        if k > 1:
            for xi in ORIENTATIONS:
                values[xi][1][i] = max(values[xi.complement()][k][i], unary[i])
        for xi in ORIENTATIONS:
            for h in range(1, k + 1):
                cache[xi][h][c] = values[xi][h][i]
        ucache[c] = unary[i]

    return LongestTables(w, k, values, unary, P)


def longest_length(w, k: int) -> int:
    w = as_word(w)
    if len(w) == 0:
        return 0
    return compute_longest_tables(w, k).longest()


def longest_witness(w, k: int) -> Word | None:
    w = as_word(w)
    if len(w) == 0:
        return None
    tables = compute_longest_tables(w, k)
    m = tables.longest()
    if m == 0:
        return None
    i, xi = next(tables.end_cells(m))
    return tables.witness(xi, k, i)
