"""CNF encoding of the coloring problem, for hand-off to external SAT solvers.

Variables (1-based DIMACS indices):

    x(e, c) = e*t + c            edge e (0-based) gets color c (1-based)
    a(v, s) = |E|*t + v*t + s    the palette at vertex v (0-based position
                                 in the vertex list) is contained in the
                                 cyclic arc of length deg(v) starting at
                                 color s

Clauses: exactly one color per edge; at most one incident edge per
(vertex, color); exactly one arc start per vertex, with links forcing
every color used at v into the selected arc; and one clause per color
demanding some edge uses it (surjectivity).

For deg(v) >= t every arc of length deg(v) is the whole palette, making
the a(v, s) interchangeable; a unit clause pins s = 1 there so satisfying
assignments correspond one-to-one with valid colorings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, check_cyclically_interval
from .errors import ColorCountError, CycolorError, DisconnectedError
from .graphs import Graph, is_connected


def arc_colors(start: int, length: int, t: int) -> frozenset[int]:
    """The cyclic arc of the given length starting at `start`, capped at t."""
    return frozenset(((start - 1 + i) % t) + 1 for i in range(min(length, t)))


@dataclass(frozen=True)
class CnfEncoding:
    g: Graph
    t: int
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def edge_var(self, e: int, c: int) -> int:
        return e * self.t + c

    def arc_var(self, v_idx: int, s: int) -> int:
        return len(self.g.edges) * self.t + v_idx * self.t + s

    def to_dimacs(self) -> str:
        lines = []
        for e, (u, v) in enumerate(self.g.edges):
            for c in range(1, self.t + 1):
                lines.append(f"c var {self.edge_var(e, c)} : edge {e} ({u}--{v}) color {c}")
        for v_idx, v in enumerate(self.g.vertices):
            for s in range(1, self.t + 1):
                lines.append(f"c var {self.arc_var(v_idx, s)} : vertex {v} arc-start {s}")
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"

    def decode_model(self, true_vars: set[int], verify: bool = True) -> Coloring:
        """Read a satisfying assignment back into a Coloring and re-check it."""
        colors = []
        for e in range(len(self.g.edges)):
            chosen = [c for c in range(1, self.t + 1) if self.edge_var(e, c) in true_vars]
            if len(chosen) != 1:
                raise CycolorError(f"model sets {len(chosen)} colors on edge {e}, expected 1")
            colors.append(chosen[0])
        cert = Coloring(t=self.t, colors=tuple(colors))
        if verify and not check_cyclically_interval(self.g, cert).ok:
            raise CycolorError("decoded model fails the checker")
        return cert

    def model_from_coloring(self, cert: Coloring) -> set[int]:
        """The satisfying assignment corresponding to a valid coloring.

        Lets tests assert SAT instances really are satisfiable without an
        external solver: the returned set of true variables must satisfy
        every clause.
        """
        if len(cert.colors) != len(self.g.edges) or cert.t != self.t:
            raise CycolorError("coloring does not match this encoding")
        true_vars: set[int] = set()
        for e, c in enumerate(cert.colors):
            true_vars.add(self.edge_var(e, c))
        for v_idx, v in enumerate(self.g.vertices):
            deg = len(self.g.adjacency[v])
            if deg >= self.t:
                true_vars.add(self.arc_var(v_idx, 1))
                continue
            palette = {cert.colors[i] for _, i in self.g.adjacency[v]}
            start = next(
                (
                    s
                    for s in range(1, self.t + 1)
                    if palette <= arc_colors(s, deg, self.t)
                ),
                None,
            )
            if start is None:
                raise CycolorError(f"palette at {v} fits no arc; coloring is not valid")
            true_vars.add(self.arc_var(v_idx, start))
        return true_vars


def encode(g: Graph, t: int) -> CnfEncoding:
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ColorCountError(f"t must be a positive integer, got {t!r}")
    if not is_connected(g):
        raise DisconnectedError("CNF export accepts connected graphs only")
    n_edges = len(g.edges)
    clauses: list[tuple[int, ...]] = []

    def x(e: int, c: int) -> int:
        return e * t + c

    def a(v_idx: int, s: int) -> int:
        return n_edges * t + v_idx * t + s

    for e in range(n_edges):
        clauses.append(tuple(x(e, c) for c in range(1, t + 1)))
        for c1 in range(1, t + 1):
            for c2 in range(c1 + 1, t + 1):
                clauses.append((-x(e, c1), -x(e, c2)))
    for v in g.vertices:
        inc = [i for _, i in g.adjacency[v]]
        for c in range(1, t + 1):
            for p in range(len(inc)):
                for q in range(p + 1, len(inc)):
                    clauses.append((-x(inc[p], c), -x(inc[q], c)))
    for v_idx, v in enumerate(g.vertices):
        deg = len(g.adjacency[v])
        clauses.append(tuple(a(v_idx, s) for s in range(1, t + 1)))
        for s1 in range(1, t + 1):
            for s2 in range(s1 + 1, t + 1):
                clauses.append((-a(v_idx, s1), -a(v_idx, s2)))
        if deg >= t:
            clauses.append((a(v_idx, 1),))
        covers: dict[int, list[int]] = {
            c: [s for s in range(1, t + 1) if c in arc_colors(s, deg, t)]
            for c in range(1, t + 1)
        }
        for _, e in g.adjacency[v]:
            for c in range(1, t + 1):
                clauses.append(tuple([-x(e, c)] + [a(v_idx, s) for s in covers[c]]))
    for c in range(1, t + 1):
        clauses.append(tuple(x(e, c) for e in range(n_edges)))
    num_vars = n_edges * t + len(g.vertices) * t
    return CnfEncoding(g=g, t=t, num_vars=num_vars, clauses=tuple(clauses))


def export_cnf(g: Graph, t: int) -> str:
    return encode(g, t).to_dimacs()
