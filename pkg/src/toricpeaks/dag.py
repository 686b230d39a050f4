"""DAGs on finite label sets, flips, toric classes and extensions.

A ``Dag`` is an immutable labeled digraph, validated acyclic on
construction. A toric class is the closure of a DAG under flips at
sources and sinks; its canonical member is the one with lexicographically
least sorted arc list.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Iterable, Iterator, Sequence

from .permstat import Word, canonical_rotation, check_word

Arc = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Dag:
    vertices: frozenset[int]
    arcs: frozenset[Arc]

    def __post_init__(self):
        for i, j in self.arcs:
            if i == j:
                raise ValueError(f"self loop at {i}")
            if i not in self.vertices or j not in self.vertices:
                raise ValueError(f"arc ({i},{j}) leaves the vertex set")
        if _has_cycle(self.vertices, self.arcs):
            raise ValueError("digraph contains a directed cycle")

    @classmethod
    def make(cls, vertices: Iterable[int], arcs: Iterable[Sequence[int]]) -> "Dag":
        return cls(frozenset(vertices), frozenset((i, j) for i, j in arcs))

    @classmethod
    def from_word(cls, w: Sequence[int]) -> "Dag":
        """The total linear order DAG of a permutation."""
        word = check_word(w)
        n = len(word)
        arcs = frozenset(
            (word[i], word[j]) for i in range(n) for j in range(i + 1, n)
        )
        return cls(frozenset(word), arcs)

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": sorted(self.vertices), "arcs": sorted(map(list, self.arcs))},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, payload: str) -> "Dag":
        data = json.loads(payload)
        return cls.make(data["vertices"], data["arcs"])


def _has_cycle(vertices: frozenset[int], arcs: frozenset[Arc]) -> bool:
    indeg = {v: 0 for v in vertices}
    succ: dict[int, list[int]] = {v: [] for v in vertices}
    for i, j in arcs:
        succ[i].append(j)
        indeg[j] += 1
    queue = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for u in succ[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return seen != len(vertices)


def transitive_closure(d: Dag) -> Dag:
    """Unique transitive closure, by reachability along arcs."""
    succ: dict[int, set[int]] = {v: set() for v in d.vertices}
    for i, j in d.arcs:
        succ[i].add(j)
    closed = set(d.arcs)
    for v in d.vertices:
        stack, reach = list(succ[v]), set()
        while stack:
            u = stack.pop()
            if u not in reach:
                reach.add(u)
                stack.extend(succ[u])
        closed.update((v, u) for u in reach)
    return Dag(d.vertices, frozenset(closed))


def sources(d: Dag) -> frozenset[int]:
    heads = {j for _, j in d.arcs}
    return frozenset(d.vertices - heads)


def sinks(d: Dag) -> frozenset[int]:
    tails = {i for i, _ in d.arcs}
    return frozenset(d.vertices - tails)


def flip(d: Dag, v: int) -> Dag:
    """Reverse every arc incident to v; v must be a source or a sink."""
    if v not in sources(d) and v not in sinks(d):
        raise ValueError(f"vertex {v} is neither a source nor a sink")
    arcs = frozenset(
        (j, i) if v in (i, j) else (i, j) for i, j in d.arcs
    )
    return Dag(d.vertices, arcs)


@dataclasses.dataclass(frozen=True)
class ToricClass:
    members: frozenset[Dag]
    canonical: Dag

    def to_json(self) -> str:
        return json.dumps(
            {
                "canonical": json.loads(self.canonical.to_json()),
                "size": len(self.members),
            },
            sort_keys=True,
        )


def toric_class(d: Dag) -> ToricClass:
    """Breadth-first closure of d under all legal flips."""
    members = {d}
    frontier = [d]
    while frontier:
        cur = frontier.pop()
        for v in sources(cur) | sinks(cur):
            nxt = flip(cur, v)
            if nxt not in members:
                members.add(nxt)
                frontier.append(nxt)
    canonical = min(members, key=lambda m: sorted(m.arcs))
    return ToricClass(frozenset(members), canonical)


def linear_extensions(d: Dag) -> list[Word]:
    """All topological orderings of d, sorted lexicographically."""
    succ: dict[int, list[int]] = {v: [] for v in d.vertices}
    indeg = {v: 0 for v in d.vertices}
    for i, j in d.arcs:
        succ[i].append(j)
        indeg[j] += 1
    out: list[Word] = []
    prefix: list[int] = []

    def rec():
        avail = sorted(v for v in d.vertices if indeg[v] == 0 and v not in used)
        if len(prefix) == len(d.vertices):
            out.append(tuple(prefix))
            return
        for v in avail:
            used.add(v)
            prefix.append(v)
            for u in succ[v]:
                indeg[u] -= 1
            rec()
            for u in succ[v]:
                indeg[u] += 1
            prefix.pop()
            used.remove(v)

    used: set[int] = set()
    rec()
    return out


def toric_extensions(d: Dag) -> list[Word]:
    """Cyclic classes torically extending [d], as canonical rotations.

    Computed as the union of linear extensions over the flip closure,
    grouped into rotation classes.
    """
    classes = set()
    for member in toric_class(d).members:
        for w in linear_extensions(member):
            classes.add(canonical_rotation(w))
    return sorted(classes)


def _paths(succ: dict[int, list[int]], a: int, b: int) -> Iterator[tuple[int, ...]]:
    """All simple directed paths from a to b with at least one interior vertex."""
    stack: list[tuple[int, tuple[int, ...]]] = [(a, (a,))]
    while stack:
        v, path = stack.pop()
        for u in succ[v]:
            if u in path:
                continue
            if u == b:
                if len(path) >= 2:
                    yield path + (u,)
            else:
                stack.append((u, path + (u,)))


def is_toric_transitive(d: Dag) -> bool:
    """Every chorded directed path i_1 -> ... -> i_k has all its chords."""
    succ: dict[int, list[int]] = {v: [] for v in d.vertices}
    for i, j in d.arcs:
        succ[i].append(j)
    for a, b in d.arcs:
        for path in _paths(succ, a, b):
            k = len(path)
            for x in range(k):
                for y in range(x + 1, k):
                    if (path[x], path[y]) not in d.arcs:
                        return False
    return True


def is_toric_poset(tc: ToricClass) -> bool:
    """Whether the class is a toric poset.

    Toric transitivity of one member is claimed to imply it for all; the
    predicate checks every member and insists they agree.
    """
    values = {is_toric_transitive(m) for m in tc.members}
    if len(values) != 1:
        raise AssertionError("toric transitivity disagrees across the class")
    return values.pop()


def disjoint_union(d: Dag, e: Dag) -> Dag:
    """Union digraph on disjoint vertex sets."""
    if d.vertices & e.vertices:
        raise ValueError(f"vertex sets overlap: {sorted(d.vertices & e.vertices)}")
    return Dag(d.vertices | e.vertices, d.arcs | e.arcs)
