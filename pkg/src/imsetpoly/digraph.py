"""Directed graphs over a ground set, stored as per-node parent bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .setfam import GroundSet, bits_of


@dataclass(frozen=True)
class DirectedGraph:
    """A loop-free directed graph; parents[i] is the bitmask of nodes with an
    arrow into node i."""

    ground: GroundSet
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        parents = tuple(self.parents)
        if len(parents) != self.ground.n:
            raise ValueError("need one parent mask per ground-set variable")
        for i, p in enumerate(parents):
            self.ground.check_mask(p)
            if p & (1 << i):
                raise ValueError(f"node {self.ground.labels[i]} lists itself as a parent")
        object.__setattr__(self, "parents", parents)

    @classmethod
    def from_edges(
        cls, ground: GroundSet, edges: list[tuple[str, str]]
    ) -> "DirectedGraph":
        """Build from (tail, head) label pairs, each meaning tail -> head."""
        parents = [0] * ground.n
        for tail, head in edges:
            try:
                j = ground.labels.index(tail)
                i = ground.labels.index(head)
            except ValueError:
                raise ValueError(f"edge ({tail!r}, {head!r}) uses an unknown label") from None
            if i == j:
                raise ValueError(f"loop at {tail!r} is not allowed")
            parents[i] |= 1 << j
        return cls(ground, tuple(parents))

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for i, p in enumerate(self.parents):
            for j in bits_of(p):
                out.append((self.ground.labels[j], self.ground.labels[i]))
        return out

    def to_json_dict(self) -> dict:
        return {"labels": list(self.ground.labels), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "DirectedGraph":
        try:
            labels = tuple(data["labels"])
            edges = [(str(t), str(h)) for t, h in data["edges"]]
        except (KeyError, TypeError, ValueError):
            raise ValueError("graph JSON needs 'labels' and 'edges' entries") from None
        return cls.from_edges(GroundSet(labels), edges)


def is_acyclic(g: DirectedGraph) -> bool:
    """Peel nodes whose remaining parents are all peeled; acyclic iff all go."""
    n = g.ground.n
    removed = 0
    full = g.ground.full_mask
    while removed != full:
        progress = False
        for i in range(n):
            bit = 1 << i
            if removed & bit:
                continue
            if g.parents[i] & ~removed == 0:
                removed |= bit
                progress = True
        if not progress:
            return False
    return True


def enumerate_digraphs(ground: GroundSet, force: bool = False) -> Iterator[DirectedGraph]:
    """All loop-free directed graphs: 2^(n(n-1)) of them.

    Refuses n >= 5 unless force is set (n=5 already means 2^20 graphs).
    """
    if ground.n >= 5 and not force:
        raise ValueError(
            "digraph enumeration for n >= 5 is a long-running job; "
            "pass force=True to run it anyway"
        )
    yield from _digraphs(ground)


def _digraphs(ground: GroundSet) -> Iterator[DirectedGraph]:
    n = ground.n

    def rec(i: int, parents: list[int]) -> Iterator[DirectedGraph]:
        if i == n:
            yield DirectedGraph(ground, tuple(parents))
            return
        others = ground.full_mask & ~(1 << i)
        sub = 0
        while True:
            parents.append(sub)
            yield from rec(i + 1, parents)
            parents.pop()
            if sub == others:
                break
            sub = (sub - others) & others

    yield from rec(0, [])


def _prefix_acyclic(parents: list[int], k: int) -> bool:
    # Acyclicity of the graph restricted to the first k nodes.  Arrows from
    # later nodes cannot lie on a cycle among the first k, so they are cut.
    assigned = (1 << k) - 1
    removed = 0
    while removed != assigned:
        progress = False
        for i in range(k):
            bit = 1 << i
            if removed & bit:
                continue
            if parents[i] & assigned & ~removed == 0:
                removed |= bit
                progress = True
        if not progress:
            return False
    return True


def enumerate_dags(ground: GroundSet) -> Iterator[DirectedGraph]:
    """All acyclic directed graphs, by per-node parent-set recursion with
    pruning of cyclic prefixes.  Refuses n >= 6."""
    if ground.n >= 6:
        raise ValueError("acyclic enumeration is limited to n <= 5")
    n = ground.n

    def rec(i: int, parents: list[int]) -> Iterator[DirectedGraph]:
        if i == n:
            yield DirectedGraph(ground, tuple(parents))
            return
        others = ground.full_mask & ~(1 << i)
        sub = 0
        while True:
            parents.append(sub)
            if _prefix_acyclic(parents, i + 1):
                yield from rec(i + 1, parents)
            parents.pop()
            if sub == others:
                break
            sub = (sub - others) & others

    yield from rec(0, [])


def super_terminal_count(g: DirectedGraph, s: int) -> int:
    """Number of i in S whose parent set covers the rest of S.

    Defined for |S| >= 2 only.
    """
    if s.bit_count() < 2:
        raise ValueError("super-terminal counting needs a set with at least two members")
    g.ground.check_mask(s)
    count = 0
    for i in bits_of(s):
        if (s & ~(1 << i)) & ~g.parents[i] == 0:
            count += 1
    return count
