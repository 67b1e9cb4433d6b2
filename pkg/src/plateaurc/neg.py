"""Next-element graph: labeled edges between positions with no blocking letter in between."""

from __future__ import annotations

import enum

from plateaurc.predecessor import PredecessorTable
from plateaurc.words import UP, Orientation, as_word


class Label(enum.Enum):
    UP = "UP"
    EQ = "EQ"
    DOWN = "DOWN"

    @classmethod
    def of(cls, xi: Orientation) -> "Label":
        return cls.UP if xi is UP else cls.DOWN


class NegGraph:
    """In-edges per vertex as ``(source, label)``, sources descending."""

    def __init__(self, n: int, in_edges: list[list[tuple[int, Label]]]):
        self.n = n
        self.in_edges = in_edges

    def edges(self) -> set[tuple[int, int, Label]]:
        return {(i, j, lab) for j in range(1, self.n + 1) for i, lab in self.in_edges[j]}

    def label(self, i: int, j: int) -> Label | None:
        for src, lab in self.in_edges[j]:
            if src == i:
                return lab
        return None

    def __len__(self) -> int:
        return sum(len(e) for e in self.in_edges)

    def to_lines(self) -> list[str]:
        return [f"{i} {j} {lab.value}" for i, j, lab in sorted(self.edges(), key=lambda e: (e[0], e[1]))]

    def to_dot(self, word=None) -> str:
        glyph = {Label.UP: "↑", Label.EQ: "→", Label.DOWN: "↓"}
        lines = ["digraph NEG {", "  rankdir=LR;"]
        for v in range(1, self.n + 1):
            text = f"{v}" if word is None else f"{v}: {word[v]}"
            lines.append(f'  v{v} [label="{text}"];')
        for i, j, lab in sorted(self.edges(), key=lambda e: (e[0], e[1])):
            lines.append(f'  v{i} -> v{j} [label="{glyph[lab]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_neg(w, P: PredecessorTable | None = None) -> NegGraph:
    w = as_word(w)
    if P is None:
        P = PredecessorTable(w)
    n, sigma = len(w), w.sigma
    in_edges: list[list[tuple[int, Label]]] = [[] for _ in range(n + 1)]
    for i in range(2, n + 1):
        c = w[i]
        row = P.row(i - 1)
        edges = []
        blocker = row[c]
        for x in range(c - 1, 0, -1):
            if row[x] > blocker:
                edges.append((row[x], Label.UP))
                blocker = row[x]
        blocker = row[c]
        for x in range(c + 1, sigma + 1):
            if row[x] > blocker:
                edges.append((row[x], Label.DOWN))
                blocker = row[x]
        if row[c]:
            edges.append((row[c], Label.EQ))
        edges.sort(key=lambda e: e[0], reverse=True)
        in_edges[i] = edges
    return NegGraph(n, in_edges)

