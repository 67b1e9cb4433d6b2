"""Rollercoaster table: how many longest partial rollercoasters end at each cell."""

from __future__ import annotations

from plateaurc.errors import TableMismatch
from plateaurc.longest import ORIENTATIONS, LongestTables, compute_longest_tables
from plateaurc.words import UP, Orientation, as_word


class RollercoasterTable:
    """``counts[xi][h][i]``: number of subsequences of length ``values[xi][h][i]``
    in that cell's class ending at ``i``. Python ints, so no overflow."""

    def __init__(self, tables: LongestTables, counts):
        self.tables = tables
        self.word = tables.word
        self.n = tables.n
        self.k = tables.k
        self.counts = counts

    def count(self, i: int, xi: Orientation, h: int) -> int:
        return self.counts[xi][h][i]

    def __getitem__(self, key) -> int:
        i, xi, h = key
        return self.counts[xi][h][i]


def compute_rollercoaster_table(w, k: int, tables: LongestTables | None = None) -> RollercoasterTable:
    w = as_word(w)
    if tables is None:
        tables = compute_longest_tables(w, k)
    elif tables.k != k or tables.word != w:
        raise TableMismatch("longest tables were built for a different (word, k)")
    n, sigma = len(w), w.sigma
    L = tables.values
    U = tables.unary
    counts = {xi: [None] + [[0] * (n + 1) for _ in range(k)] for xi in ORIENTATIONS}

    if k == 1:
        for xi in ORIENTATIONS:
            counts[xi][1][1:] = [1] * n
        return RollercoasterTable(tables, counts)

    # per-letter mirrors of L and R at P[i - 1, x]
    lc = {xi: [None] + [[0] * (sigma + 1) for _ in range(k)] for xi in ORIENTATIONS}
    rc = {xi: [None] + [[0] * (sigma + 1) for _ in range(k)] for xi in ORIENTATIONS}

    for i, c in enumerate(w.letters, 1):
        for xi in ORIENTATIONS:
            strict = range(1, c) if xi is UP else range(c + 1, sigma + 1)
            lx, rx, cx = lc[xi], rc[xi], counts[xi]
            for h in range(2, k + 1):
                length = L[xi][h][i]
                if length == 0:
                    continue
                t = length - 1
                lower, rlower = lx[h - 1], rx[h - 1]
                total = sum(rlower[x] for x in strict if lower[x] == t)
                same, rsame = lx[h], rx[h]
                if h == k:
                    total += sum(rsame[x] for x in strict if same[x] == t)
                if same[c] == t:
                    total += rsame[c]
                cx[h][i] = total
        for xi in ORIENTATIONS:
            length = L[xi][1][i]
            opposite = xi.complement()
            total = 0
            if L[opposite][k][i] == length:
                total += counts[opposite][k][i]
            if U[i] == length:
                total += 1
            counts[xi][1][i] = total
        for xi in ORIENTATIONS:
            for h in range(1, k + 1):
                lc[xi][h][c] = L[xi][h][i]
                rc[xi][h][c] = counts[xi][h][i]

    return RollercoasterTable(tables, counts)


def count_maximum_rollercoasters(w, k: int) -> int:
    w = as_word(w)
    if len(w) == 0:
        return 0
    tables = compute_longest_tables(w, k)
    m = tables.longest()
    if m == 0:
        return 0
    if k == 1:
        # the whole word; its single cell is in both orientation classes
        return 1
    R = compute_rollercoaster_table(w, k, tables)
    return sum(R.counts[xi][k][i] for i, xi in tables.end_cells(m))
