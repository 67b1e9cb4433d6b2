"""Exhaustive ground truth on small inputs.

Nothing here touches the dynamic programs; only the definitional
validators from ``plateaurc.words`` are shared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from plateaurc.errors import TooLarge
from plateaurc.neg import Label
from plateaurc.words import (
    Word,
    as_word,
    embeddings,
    is_plateau_k_rollercoaster,
    last_run_profile,
)

MAX_LONGEST = 16
MAX_NEG = 12
MAX_LCR_WORD = 10
MAX_LCR_WORDS = 3
MAX_TABLES = 12


@dataclass
class OracleResult:
    max_length: int
    max_words: set[tuple[int, ...]] = field(default_factory=set)
    embeddings_per_word: dict[tuple[int, ...], int] = field(default_factory=dict)


def _check(w: Word, cap: int) -> None:
    if len(w) > cap:
        raise TooLarge(f"oracle is capped at |w| <= {cap}, got {len(w)}")


def _distinct_subsequences(a: tuple[int, ...], size: int) -> set[tuple[int, ...]]:
    return {tuple(a[p] for p in idx) for idx in combinations(range(len(a)), size)}


def brute_force_enumerate_max(w, k: int) -> OracleResult:
    w = as_word(w)
    _check(w, MAX_LONGEST)
    for size in range(len(w), 0, -1):
        found = {u for u in _distinct_subsequences(w.letters, size) if is_plateau_k_rollercoaster(u, k)}
        if found:
            return OracleResult(size, found, {u: embeddings(u, w) for u in found})
    return OracleResult(0)


def brute_force_longest(w, k: int) -> int:
    return brute_force_enumerate_max(w, k).max_length


def rollercoaster_words(w, k: int) -> set[tuple[int, ...]]:
    """Every distinct plateau-k-rollercoaster subsequence of ``w``."""
    a = as_word(w).letters
    out = set()
    for size in range(1, len(a) + 1):
        out |= {u for u in _distinct_subsequences(a, size) if is_plateau_k_rollercoaster(u, k)}
    return out


def brute_force_lcr(words, k: int) -> int:
    words = [as_word(w) for w in words]
    if len(words) > MAX_LCR_WORDS:
        raise TooLarge(f"oracle handles at most {MAX_LCR_WORDS} words")
    for w in words:
        _check(w, MAX_LCR_WORD)
    common = rollercoaster_words(words[0], k)
    for w in words[1:]:
        common &= rollercoaster_words(w, k)
    return max(map(len, common), default=0)


def brute_force_neg_edges(w) -> set[tuple[int, int, Label]]:
    """Evaluate the three edge predicates on every pair ``i < j``.

    The DOWN predicate is the mirror image of UP: every letter strictly
    between the endpoints in position must lie outside ``[w[j], w[i]]``.
    """
    w = as_word(w)
    _check(w, MAX_NEG)
    a = (None,) + w.letters
    n = len(w)
    edges = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            mid = a[i + 1 : j]
            if a[i] < a[j] and all(a[i] > y or y > a[j] for y in mid):
                edges.add((i, j, Label.UP))
            elif a[i] == a[j] and a[j] not in mid:
                edges.add((i, j, Label.EQ))
            elif a[i] > a[j] and all(y > a[i] or y < a[j] for y in mid):
                edges.add((i, j, Label.DOWN))
    return edges


def brute_force_tables(w, k: int):
    """Longest length and embedding count per ``(xi, h, i)`` cell.

    Returns ``{(xi, h, i): (length, count)}`` for nonempty cells, with
    ``h`` counted exactly below ``k`` (see ``last_run_profile``).
    """
    w = as_word(w)
    _check(w, MAX_TABLES)
    a = w.letters
    n = len(a)
    cells: dict = {}
    for mask in range(1, 1 << n):
        idx = [p for p in range(n) if mask >> p & 1]
        u = tuple(a[p] for p in idx)
        end = idx[-1] + 1
        for xi, h in last_run_profile(u, k):
            key = (xi, h, end)
            best, count = cells.get(key, (0, 0))
            if len(u) > best:
                cells[key] = (len(u), 1)
            elif len(u) == best:
                cells[key] = (best, count + 1)
    return cells
