"""Finite rooted factor graphs: builtin families and the edge-list file format.

Edge-list format (UTF-8 text)::

    # comment lines start with '#'
    root 0
    edge 0 1
    edge 1 2

Vertex ids are dense decimal integers ``0..n-1``; the root line is mandatory.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "GraphError",
    "RootedGraph",
    "build_complete",
    "build_cycle",
    "build_ladder_segment",
    "from_edges",
    "parse_graph",
    "render_graph",
]


class GraphError(ValueError):
    """Invalid graph parameters or a malformed graph file."""


@dataclass(frozen=True)
class RootedGraph:
    """Simple connected undirected graph with a distinguished root.

    ``adjacency[v]`` is the sorted tuple of neighbours of vertex ``v``.
    Instances are validated on construction and immutable afterwards.
    """

    adjacency: tuple[tuple[int, ...], ...]
    root: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        if n < 2:
            raise GraphError(f"a factor needs at least 2 vertices, got {n}")
        if not 0 <= self.root < n:
            raise GraphError(f"root {self.root} out of range 0..{n - 1}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} has out-of-range neighbour {u}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        seen = {self.root}
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != n:
            missing = min(set(range(n)) - seen)
            raise GraphError(f"graph is disconnected: vertex {missing} unreachable from root")

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, nbrs in enumerate(self.adjacency) for u in nbrs if v < u]

    def __str__(self) -> str:
        return self.name or f"graph(n={self.vertex_count}, root={self.root})"


def from_edges(
    vertex_count: int, edges: Iterable[tuple[int, int]], root: int = 0, name: str = ""
) -> RootedGraph:
    """Build a validated graph from an edge iterable.

    Raises GraphError on self-loops and repeated edges (either orientation).
    """
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge {u}-{v} out of range 0..{vertex_count - 1}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge {u}-{v}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return RootedGraph(tuple(tuple(sorted(s)) for s in nbrs), root, name)


def build_complete(n: int) -> RootedGraph:
    """Complete graph K_n rooted at vertex 0."""
    if n < 2:
        raise GraphError(f"complete graph needs n >= 2, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return from_edges(n, edges, 0, f"K{n}")


def build_cycle(n: int) -> RootedGraph:
    """Cycle C_n rooted at vertex 0. C_2 is not simple; use ``build_complete(2)``."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)], 0, f"C{n}")


def build_ladder_segment(k: int) -> RootedGraph:
    """Finite piece of the diamond chain: 2k four-cycles glued at opposite corners.

    Vertex 0 is the central gluing vertex (degree 4). Gluing vertices
    ``c_{-k}..c_k`` come first, then the two middle vertices of each diamond.
    For walks of length <= 2k the SAW counts agree with the infinite chain.
    """
    if k < 1:
        raise GraphError(f"ladder segment needs k >= 1, got {k}")
    # gluing vertex c_j, j in -k..k, gets index 0 for j=0, then 1..2k
    def crossing(j: int) -> int:
        if j == 0:
            return 0
        return 2 * j - 1 if j > 0 else -2 * j

    edges = []
    nxt = 2 * k + 1
    for j in range(-k, k):
        a, b = crossing(j), crossing(j + 1)
        for mid in (nxt, nxt + 1):
            edges += [(a, mid), (mid, b)]
        nxt += 2
    return from_edges(nxt, edges, 0, f"ladder{k}")


def parse_graph(text: str) -> RootedGraph:
    """Parse the edge-list format; errors carry the offending line number."""
    root = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "root" and len(parts) == 2:
                if root is not None:
                    raise GraphError(f"line {lineno}: duplicate root line")
                root = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3:
                u, v = int(parts[1]), int(parts[2])
                if u < 0 or v < 0:
                    raise GraphError(f"line {lineno}: negative vertex id")
                edges.append((u, v))
            else:
                raise GraphError(f"line {lineno}: expected 'root <id>' or 'edge <u> <v>': {line!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    if root is None:
        raise GraphError("missing 'root <id>' line")
    n = max((max(e) for e in edges), default=0) + 1
    if root >= n:
        raise GraphError(f"root id {root} out of range 0..{n - 1}")
    return from_edges(n, edges, root)


def render_graph(g: RootedGraph) -> str:
    """Canonical edge-list text; ``parse_graph(render_graph(g))`` reproduces ``g``."""
    lines = [f"root {g.root}"] + [f"edge {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
