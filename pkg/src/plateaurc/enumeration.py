"""Bounded-delay enumeration of all maximum-length plateau-k-rollercoasters.

The walk runs backwards from a final position. Every position on the
current path carries a state: ``(xi, h)`` with ``2 <= h <= k`` when the
letter is the h-th distinct letter of a ``xi``-run, or UNARY when it
belongs to the leading unary block. A turning point is recorded as the
end (``h = k``) of the run it closes. Children of a state are found by
scanning in-edges of the next-element graph from the largest source
down, so the candidates examined between two outputs are bounded by the
word length.

Counter ``c[d]`` holds how many outputs so far share the suffix
``path[0..d]``; it is compared with the rollercoaster table to locate the
pivot after each output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from plateaurc.counting import compute_rollercoaster_table
from plateaurc.errors import InvariantViolation
from plateaurc.longest import compute_longest_tables
from plateaurc.neg import Label, build_neg
from plateaurc.words import UP, Orientation, Word, as_word

UNARY = 0


@dataclass
class EnumerationState:
    """Current embedding, per-position ``(xi, h)`` metadata and counters.

    ``indices`` is in word order (i_1 < ... < i_m); ``run_meta`` and
    ``counters`` are aligned with it. ``h = 0`` marks the unary prefix.
    """

    indices: list[int] = field(default_factory=list)
    run_meta: list[tuple[Orientation | None, int]] = field(default_factory=list)
    counters: list[int] = field(default_factory=list)
    check_budget: int = 0


class MaximumRollercoasterEnumerator:
    def __init__(self, w, k: int):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.word = as_word(w)
        self.k = k
        self.n = len(self.word)
        self.length = 0
        self.max_checks = 0
        self.state = EnumerationState()
        if self.n == 0:
            return
        self.tables = compute_longest_tables(self.word, k)
        self.length = self.tables.longest()
        if k > 1 and self.length:
            self.rollercoasters = compute_rollercoaster_table(self.word, k, self.tables)
            self.graph = build_neg(self.word, self.tables.predecessors)

    def _value(self, node) -> int:
        pos, xi, h = node
        if h == UNARY:
            return self.tables.unary[pos]
        return self.tables.values[xi][h][pos]

    def _count(self, node) -> int:
        pos, xi, h = node
        if h == UNARY:
            return 1
        return self.rollercoasters.counts[xi][h][pos]

    def _alternatives(self, parent, src: int, label: Label) -> list:
        """Child states at ``src`` for one in-edge of ``parent``, in fixed order."""
        _, xi, h = parent
        if label is Label.EQ:
            return [(src, xi, h)]
        if h == UNARY or label is not Label.of(xi):
            return []
        out = []
        if h == self.k:
            out.append((src, xi, h))
        if h > 2:
            out.append((src, xi, h - 1))
        else:
            out.append((src, xi.complement(), self.k))
            out.append((src, None, UNARY))
        return out

    def _next_child(self, parent, cursor):
        """First valid child of ``parent`` at or after ``cursor = (edge, alt)``."""
        target = self._value(parent) - 1
        edges = self.graph.in_edges[parent[0]]
        e, a = cursor
        while e < len(edges):
            src, label = edges[e]
            self._checks += 1
            alts = self._alternatives(parent, src, label)
            while a < len(alts):
                self._checks += 1
                if self._value(alts[a]) == target:
                    return alts[a], (e, a)
                a += 1
            e += 1
            a = 0
        return None

    def _complete(self, path, cursors) -> None:
        while self._value(path[-1]) > 1:
            found = self._next_child(path[-1], (0, 0))
            if found is None:
                raise InvariantViolation(f"dead end below {path[-1]}")
            path.append(found[0])
            cursors.append(found[1])

    def _emit(self, path, counters) -> Word:
        if len(path) != self.length:
            raise InvariantViolation(f"path of length {len(path)}, expected {self.length}")
        self.state = EnumerationState(
            indices=[node[0] for node in reversed(path)],
            run_meta=[(node[1], node[2]) for node in reversed(path)],
            counters=list(reversed(counters)),
            check_budget=self._checks,
        )
        self.max_checks = max(self.max_checks, self._checks)
        self._checks = 0
        a = self.word.letters
        return Word((a[i - 1] for i in self.state.indices), self.word.sigma)

    def seeds(self):
        return [(i, xi, self.k) for i, xi in self.tables.end_cells(self.length)]

    def __iter__(self) -> Iterator[Word]:
        self._checks = 0
        if self.length == 0:
            return
        if self.k == 1:
            self.state = EnumerationState(list(range(1, self.n + 1)), [(UP, 1)] * self.n, [1] * self.n)
            yield self.word
            return
        for seed in self.seeds():
            path, cursors = [seed], [None]
            self._complete(path, cursors)
            counters = [1] * len(path)
            yield self._emit(path, counters)
            while True:
                pivot = None
                for d in range(len(path) - 1, -1, -1):
                    if counters[d] < self._count(path[d]):
                        pivot = d
                        break
                if pivot is None:
                    break
                e, a = cursors[pivot + 1]
                found = self._next_child(path[pivot], (e, a + 1))
                if found is None:
                    raise InvariantViolation(f"counter says more completions below {path[pivot]}")
                del path[pivot + 1 :], cursors[pivot + 1 :]
                path.append(found[0])
                cursors.append(found[1])
                self._complete(path, cursors)
                for d in range(len(path)):
                    counters[d] = counters[d] + 1 if d <= pivot else 1
                yield self._emit(path, counters)


def enumerate_maximum(w, k: int) -> Iterator[Word]:
    """Yield every maximum-length plateau-k-rollercoaster of ``w`` once, lazily."""
    return iter(MaximumRollercoasterEnumerator(w, k))
