"""Graph family generators.

The centerpiece is `gen_gm`, the hub-and-grid family used throughout the
package's hardest tests: a hub vertex joined to an m-by-m grid of vertices,
plus one vertex per unordered pair {i, j} of rows, joined to every grid
vertex in row i or row j. The remaining generators (paths, cycles, stars,
complete bipartite, seeded random trees) exist to feed the checker and
solver with small, well-understood instances.

Label scheme for gen_gm (stable across versions):

    hub            "x0"
    pair (i, j)    "x_{i}_{j}"      1 <= i < j <= m
    grid (p, q)    "y_{p}_{q}"      1 <= p, q <= m

Edge order is part of the contract: certificates index into it.
Hub edges come first, (p, q)-lexicographic; then for each pair (i, j) in
lexicographic order and each q = 1..m, the edge to y_{i,q} and then the
edge to y_{j,q}.
"""

from __future__ import annotations

import heapq
import random

from .errors import MOutOfRangeError, SizeOutOfRangeError
from .graphs import Graph, build_graph


def hub_label() -> str:
    return "x0"


def pair_label(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def grid_label(p: int, q: int) -> str:
    return f"y_{p}_{q}"


def gen_gm(m: int) -> Graph:
    """Build the hub-and-grid graph for a given m >= 2.

    Sizes: (3m^2 - m)/2 + 1 vertices and m^3 edges. The graph is bipartite
    with the hub and all pair vertices on one side, the grid on the other;
    the hub has degree m^2, pair vertices 2m, grid vertices m.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise MOutOfRangeError(f"m must be an integer >= 2, got {m!r}")
    vertices = [hub_label()]
    vertices += [pair_label(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    vertices += [grid_label(p, q) for p in range(1, m + 1) for q in range(1, m + 1)]
    edges: list[tuple[str, str]] = [
        (hub_label(), grid_label(p, q))
        for p in range(1, m + 1)
        for q in range(1, m + 1)
    ]
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for q in range(1, m + 1):
                edges.append((pair_label(i, j), grid_label(i, q)))
                edges.append((pair_label(i, j), grid_label(j, q)))
    return build_graph(vertices, edges)


def gen_path(n: int) -> Graph:
    """Path with n edges (n + 1 vertices v1..v{n+1})."""
    if n < 1:
        raise SizeOutOfRangeError(f"path needs >= 1 edge, got {n}")
    vertices = [f"v{k}" for k in range(1, n + 2)]
    edges = [(f"v{k}", f"v{k + 1}") for k in range(1, n + 1)]
    return build_graph(vertices, edges)


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices v1..vn."""
    if n < 3:
        raise SizeOutOfRangeError(f"cycle needs >= 3 vertices, got {n}")
    vertices = [f"v{k}" for k in range(1, n + 1)]
    edges = [(f"v{k}", f"v{k + 1}") for k in range(1, n)]
    edges.append((f"v{n}", "v1"))
    return build_graph(vertices, edges)


def gen_star(n: int) -> Graph:
    """Star with n >= 1 leaves: center "c", leaves l1..ln."""
    if n < 1:
        raise SizeOutOfRangeError(f"star needs >= 1 leaf, got {n}")
    vertices = ["c"] + [f"l{k}" for k in range(1, n + 1)]
    edges = [("c", f"l{k}") for k in range(1, n + 1)]
    return build_graph(vertices, edges)


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts a1..a{a} and b1..b{b}, edges in (i, j) lex order."""
    if a < 1 or b < 1:
        raise SizeOutOfRangeError(f"both sides need >= 1 vertex, got {a}, {b}")
    vertices = [f"a{i}" for i in range(1, a + 1)] + [f"b{j}" for j in range(1, b + 1)]
    edges = [(f"a{i}", f"b{j}") for i in range(1, a + 1) for j in range(1, b + 1)]
    return build_graph(vertices, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices v1..vn, decoded from a
    random Pruefer sequence.

    The PRNG is Python's Mersenne Twister via random.Random(seed) drawing
    with randrange(n), fixed here so a seed reproduces the same tree in any
    environment running this artifact version.
    """
    if n < 1:
        raise SizeOutOfRangeError(f"tree needs >= 1 vertex, got {n}")
    vertices = [f"v{k}" for k in range(1, n + 1)]
    if n == 1:
        return build_graph(vertices, [])
    if n == 2:
        return build_graph(vertices, [("v1", "v2")])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]  # 0-based vertex ids
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [k for k in range(n) if degree[k] == 1]
    heapq.heapify(leaves)
    edges: list[tuple[str, str]] = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((f"v{leaf + 1}", f"v{x + 1}"))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((f"v{u + 1}", f"v{v + 1}"))
    return build_graph(vertices, edges)
