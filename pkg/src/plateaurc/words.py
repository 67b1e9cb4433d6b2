"""Words over ordered integer alphabets and plateau-run decomposition.

Positions are 1-based throughout the package; ``Word.letters`` is a plain
tuple, so ``w[i]`` maps to ``w.letters[i - 1]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from plateaurc.errors import EmptyWord, InvalidH, InvalidWord


class Orientation(enum.Enum):
    UP = "up"
    DOWN = "down"

    def complement(self) -> "Orientation":
        return Orientation.DOWN if self is Orientation.UP else Orientation.UP

    @property
    def symbol(self) -> str:
        return "↑" if self is Orientation.UP else "↓"


UP = Orientation.UP
DOWN = Orientation.DOWN
#: Orientation of a unary run, which is weakly monotone both ways.
AMBIGUOUS = None


@dataclass(frozen=True)
class Word:
    """Immutable word with letters in ``[1, sigma]``."""

    letters: tuple[int, ...]
    sigma: int = field(default=0)

    def __init__(self, letters: Iterable[int], sigma: int | None = None):
        letters = tuple(int(x) for x in letters)
        top = max(letters, default=0)
        if sigma is None:
            sigma = max(top, 1)
        if sigma < 1:
            raise InvalidWord(f"alphabet size must be positive, got {sigma}")
        for pos, x in enumerate(letters, 1):
            if not 1 <= x <= sigma:
                raise InvalidWord(f"letter {x} at position {pos} outside [1, {sigma}]")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def from_string(cls, text: str, sigma: int | None = None) -> "Word":
        """Parse a digit string such as ``"871264435161"`` (letters 1-9)."""
        return cls((int(c) for c in text), sigma)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i: int) -> int:
        # 1-based access; slices are not supported on purpose
        if not 1 <= i <= len(self.letters):
            raise IndexError(f"position {i} outside [1, {len(self.letters)}]")
        return self.letters[i - 1]

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        if all(x < 10 for x in self.letters):
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))

    def factor(self, i: int, j: int) -> "Word":
        """``w[i, j]``, empty when ``j < i``."""
        if j < i:
            return Word((), self.sigma)
        return Word(self.letters[i - 1 : j], self.sigma)


def as_word(w: Word | str | Sequence[int]) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.from_string(w)
    return Word(w)


def letters(w) -> frozenset[int]:
    return frozenset(as_word(w).letters)


def reverse(w) -> Word:
    w = as_word(w)
    return Word(reversed(w.letters), w.sigma)


def relabel(w, mapping) -> Word:
    """Apply a letter mapping (callable or dict) to every position."""
    w = as_word(w)
    f = mapping if callable(mapping) else mapping.__getitem__
    return Word(f(x) for x in w.letters)


def is_subsequence(u, w) -> bool:
    it = iter(as_word(w).letters)
    return all(any(x == y for y in it) for x in as_word(u).letters)


def embeddings(u, w) -> int:
    """Number of index tuples embedding ``u`` into ``w``."""
    u, w = as_word(u).letters, as_word(w).letters
    ways = [1] + [0] * len(u)
    for y in w:
        for t in range(len(u), 0, -1):
            if u[t - 1] == y:
                ways[t] += ways[t - 1]
    return ways[len(u)]


@dataclass(frozen=True)
class Run:
    start: int
    end: int
    orientation: Orientation | None
    distinct: int

    def __len__(self) -> int:
        return self.end - self.start + 1


def _is_weakly(a: int, b: int, o: Orientation) -> bool:
    return a <= b if o is UP else a >= b


def decompose_runs(w) -> list[Run]:
    """Split ``w`` into maximal plateau-runs.

    Consecutive runs share the maximal unary factor at their turning
    point, e.g. ``12223444321112345`` gives ``12223444``, ``44432111`` and
    ``1112345``.
    """
    a = as_word(w).letters
    n = len(a)
    if n == 0:
        raise EmptyWord("cannot decompose the empty word")
    runs = []
    start = 0
    while True:
        j = start
        while j + 1 < n and a[j + 1] == a[start]:
            j += 1
        if j + 1 == n:
            # only possible for the first run: later runs start on a plateau
            # that is followed by a strict change
            runs.append(Run(start + 1, n, AMBIGUOUS, 1))
            return runs
        o = UP if a[j + 1] > a[j] else DOWN
        while j + 1 < n and _is_weakly(a[j], a[j + 1], o):
            j += 1
        runs.append(Run(start + 1, j + 1, o, len(set(a[start : j + 1]))))
        if j + 1 == n:
            return runs
        start = j
        while start > 0 and a[start - 1] == a[j]:
            start -= 1


def is_plateau_run(u) -> bool:
    a = as_word(u).letters
    return all(x <= y for x, y in zip(a, a[1:])) or all(x >= y for x, y in zip(a, a[1:]))


def is_plateau_k_run(u, k: int) -> bool:
    u = as_word(u)
    return len(u) > 0 and is_plateau_run(u) and len(set(u.letters)) >= k


def is_plateau_k_rollercoaster(w, k: int) -> bool:
    """Every maximal plateau-run of ``w`` holds at least ``k`` distinct letters.

    The empty word is rejected: it has no run that could qualify.
    """
    w = as_word(w)
    if len(w) == 0:
        return False
    return all(r.distinct >= k for r in decompose_runs(w))


def is_plateau_k_h_xi_rollercoaster(w, k: int, h: int, xi: Orientation) -> bool:
    """Partial rollercoaster test: complete runs, then a last ``xi``-run with >= h letters.

    A word whose final plateau closes a complete run of the opposite
    orientation also counts for ``h = 1``, because that plateau starts a
    new ``xi``-run (``43321`` is both (3,3)-down and (3,1)-up).
    """
    if not 1 <= h <= k:
        raise InvalidH(f"h={h} outside [1, {k}]")
    w = as_word(w)
    if len(w) == 0:
        return False
    runs = decompose_runs(w)
    last = runs[-1]
    if last.orientation is AMBIGUOUS:
        return h == 1
    complete = all(r.distinct >= k for r in runs[:-1])
    if last.orientation is xi:
        return complete and last.distinct >= h
    return h == 1 and complete and last.distinct >= k


def family_label(w, k: int) -> Orientation | None:
    """Orientation of the last complete run that a partial rollercoaster extends.

    Returns ``None`` when ``w`` has no complete run before its last run or
    when an earlier run is incomplete.
    """
    runs = decompose_runs(w)
    if len(runs) < 2 or any(r.distinct < k for r in runs[:-1]):
        return None
    return runs[-2].orientation


def last_run_profile(w, k: int) -> set[tuple[Orientation, int]]:
    """All ``(xi, h)`` states of ``w`` with ``h`` counted exactly below ``k``.

    This is the classification the longest/count tables use: for ``h < k``
    the last run holds exactly ``h`` distinct letters, ``h = k`` means at
    least ``k``. Unary words are in ``(xi, 1)`` for both orientations.
    """
    runs = decompose_runs(w)
    last = runs[-1]
    if last.orientation is AMBIGUOUS:
        return {(UP, 1), (DOWN, 1)}
    if any(r.distinct < k for r in runs[:-1]):
        return set()
    states = {(last.orientation, min(last.distinct, k))}
    if last.distinct >= k:
        states.add((last.orientation.complement(), 1))
    return states
