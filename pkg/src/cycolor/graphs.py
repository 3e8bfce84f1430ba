"""Finite simple undirected graphs with stable, ordered vertex and edge lists.

Edge order matters throughout the package: a coloring is a flat list of
colors aligned with a graph's edge list, so edge index i always means the
i-th edge as constructed (or as read from JSON). Nothing here reorders
edges behind the caller's back.
"""

from __future__ import annotations

import collections
import json
from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    SearchBudgetExceededError,
    SelfLoopError,
    SizeOutOfRangeError,
    UnknownLabelError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Graph:
    """Immutable graph. `adjacency` maps each vertex to (neighbor, edge_index) pairs."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    adjacency: dict[str, tuple[tuple[str, int], ...]]

    def degree(self, v: str) -> int:
        if v not in self.adjacency:
            raise UnknownVertexError(f"no vertex {v!r}")
        return len(self.adjacency[v])

    def incident_edges(self, v: str) -> tuple[int, ...]:
        if v not in self.adjacency:
            raise UnknownVertexError(f"no vertex {v!r}")
        return tuple(idx for _, idx in self.adjacency[v])


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[str]
    right: frozenset[str]


@dataclass(frozen=True)
class NotBipartite:
    odd_cycle: tuple[str, ...]


def build_graph(vertices: list[str], edges: list[tuple[str, str]]) -> Graph:
    """Validate and freeze a graph. Preserves vertex and edge order exactly."""
    seen_v: set[str] = set()
    for v in vertices:
        if v in seen_v:
            raise DuplicateEdgeError(f"vertex {v!r} listed twice")
        seen_v.add(v)
    seen_e: set[frozenset[str]] = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at {u!r}")
        if u not in seen_v:
            raise UnknownLabelError(f"edge endpoint {u!r} is not a vertex")
        if v not in seen_v:
            raise UnknownLabelError(f"edge endpoint {v!r} is not a vertex")
        key = frozenset((u, v))
        if key in seen_e:
            raise DuplicateEdgeError(f"edge {{{u!r}, {v!r}}} listed twice")
        seen_e.add(key)
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in vertices}
    for idx, (u, v) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    return Graph(
        vertices=tuple(vertices),
        edges=tuple((u, v) for u, v in edges),
        adjacency={v: tuple(pairs) for v, pairs in adj.items()},
    )


def max_degree(g: Graph) -> int:
    if not g.vertices:
        return 0
    return max(len(g.adjacency[v]) for v in g.vertices)


def is_connected(g: Graph) -> bool:
    if not g.vertices:
        return True
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        u = stack.pop()
        for w, _ in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def bipartition(g: Graph) -> Union[Bipartition, NotBipartite]:
    """Two-color the vertices by BFS, or return an odd cycle as a witness.

    Requires a connected graph. Sides are canonical: `left` is the side
    containing the first vertex.
    """
    if not is_connected(g):
        raise DisconnectedError("bipartition requires a connected graph")
    if not g.vertices:
        return Bipartition(frozenset(), frozenset())
    root = g.vertices[0]
    depth: dict[str, int] = {root: 0}
    parent: dict[str, Optional[str]] = {root: None}
    queue = collections.deque([root])
    while queue:
        u = queue.popleft()
        for w, _ in g.adjacency[u]:
            if w not in depth:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
            elif depth[w] == depth[u] and w != parent[u]:
                # Same BFS level: the two root paths + this edge close an odd cycle.
                return NotBipartite(_odd_cycle_witness(u, w, parent))
    left = frozenset(v for v in g.vertices if depth[v] % 2 == 0)
    right = frozenset(v for v in g.vertices if depth[v] % 2 == 1)
    return Bipartition(left, right)


def _odd_cycle_witness(u: str, w: str, parent: dict[str, Optional[str]]) -> tuple[str, ...]:
    """Join the parent chains of u and w at their lowest common ancestor."""

    def chain(v: str) -> list[str]:
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])  # type: ignore[arg-type]
        return out

    up, wp = chain(u), chain(w)
    ancestors = set(up)
    meet = next(v for v in wp if v in ancestors)
    head = up[: up.index(meet) + 1]          # u .. meet
    tail = wp[: wp.index(meet)][::-1]        # meet-child .. w
    return tuple(head + tail)


def chromatic_index(
    g: Graph,
    search_edge_limit: int = 64,
    node_budget: Optional[int] = None,
) -> int:
    """Exact minimum number of colors in a proper edge coloring.

    Bipartite graphs need exactly max-degree colors; everything else needs
    max-degree or one more, decided by an exact properness-only search.
    Connected graphs with at least one edge only. The search path refuses
    non-bipartite graphs with more than `search_edge_limit` edges; raise
    the limit explicitly to accept the wait.
    """
    if not g.edges:
        raise SizeOutOfRangeError("chromatic index needs at least one edge")
    if not is_connected(g):
        raise DisconnectedError("chromatic index requires a connected graph")
    delta = max_degree(g)
    if isinstance(bipartition(g), Bipartition):
        return delta
    if len(g.edges) > search_edge_limit:
        raise SearchBudgetExceededError(
            f"exact chromatic index search limited to {search_edge_limit} edges; "
            f"graph has {len(g.edges)}"
        )
    from .solver import SolverConfig, decide  # local import: solver depends on graphs

    cfg = SolverConfig(properness_only=True, node_budget=node_budget)
    outcome = decide(g, delta, cfg)
    if outcome.status == "budget-exceeded":
        raise SearchBudgetExceededError(
            f"chromatic index search at t={delta} exceeded its budget"
        )
    return delta if outcome.status == "colorable" else delta + 1


# --- interchange -------------------------------------------------------------

def to_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [[u, v] for u, v in g.edges]}


def from_dict(data: dict) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise UnknownLabelError("graph object needs 'vertices' and 'edges' keys")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise UnknownLabelError("'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise UnknownLabelError("'edges' must be a list of two-element lists")
    pairs: list[tuple[str, str]] = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise UnknownLabelError(f"malformed edge entry: {e!r}")
        pairs.append((e[0], e[1]))
    return build_graph(vertices, pairs)


def to_json(g: Graph) -> str:
    return json.dumps(to_dict(g), indent=2) + "\n"


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UnknownLabelError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def to_dot(g: Graph, coloring=None) -> str:
    """Render as Graphviz source. With a coloring, edges get color indices as labels."""
    lines = ["graph g {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for idx, (u, v) in enumerate(g.edges):
        if coloring is not None:
            lines.append(f'  "{u}" -- "{v}" [label="{coloring.colors[idx]}"];')
        else:
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
