"""Exact search for cyclically-interval proper edge colorings.

`decide` answers "does this graph admit a valid t-coloring?" by depth-first
search over edge assignments with three sound prunes:

  (i)   a color may not repeat at a vertex (properness);
  (ii)  a vertex's partial palette must fit inside some cyclic arc of
        length deg(v) — i.e. cyclic_span(partial) <= deg(v) — since the
        finished palette has exactly deg(v) distinct colors and must be an
        arc;
  (iii) the number of still-unassigned edges must cover the number of
        still-unused colors (surjectivity).

Certificates are re-verified with the checker before being returned, and
"not colorable" is only ever reported after an exhaustive search; running
out of budget is its own outcome.

`brute_force_decide` is the deliberately independent ground truth: it
enumerates every assignment in lexicographic order and filters with the
checker. It shares no search logic with `decide`. Above ~200k assignments
it switches to a vectorized sweep (bitmask palettes + a precomputed
arc-shape table), which the tests cross-validate against the literal sweep
on overlapping sizes.
"""

from __future__ import annotations

import itertools
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .coloring import Coloring, check_cyclically_interval
from .errors import ColorCountError, CycolorError, DisconnectedError, TooLargeError
from .graphs import Graph, chromatic_index, is_connected, max_degree
from .intervals import ColorSet, cyclic_span

COLORABLE = "colorable"
NOT_COLORABLE = "not-colorable"
BUDGET_EXCEEDED = "budget-exceeded"

DEFAULT_ENUMERATION_CAP = 10**9
# Above this many assignments the brute-force path goes vectorized.
_LITERAL_SWEEP_LIMIT = 200_000
# The vectorized path tabulates arc shapes over all 2^t palette bitmasks.
_MAX_VECTOR_T = 20
_CHUNK = 1 << 17


@dataclass(frozen=True)
class SolverConfig:
    symmetry_breaking: bool = True
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    edge_order: str = "degree"  # "degree" (degree-sum descending) or "input"
    properness_only: bool = False

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget < 1:
            raise ColorCountError(f"node_budget must be positive, got {self.node_budget}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ColorCountError(f"time_budget must be positive, got {self.time_budget}")
        if self.edge_order not in ("degree", "input"):
            raise ColorCountError(f"edge_order must be 'degree' or 'input', got {self.edge_order!r}")


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    coloring: Optional[Coloring] = None
    reason: str = ""
    nodes: int = 0


@dataclass(frozen=True)
class SpectrumResult:
    graph_id: str
    t_min: int
    t_max: int
    outcomes: dict[int, SearchOutcome] = field(default_factory=dict)


def _validate_t(t) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ColorCountError(f"t must be a positive integer, got {t!r}")


def _edge_positions(g: Graph, cfg: SolverConfig) -> list[int]:
    if cfg.edge_order == "input":
        return list(range(len(g.edges)))
    deg = {v: len(g.adjacency[v]) for v in g.vertices}
    return sorted(range(len(g.edges)), key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), i))


def _mask_span(mask: int, t: int) -> int:
    """cyclic_span of the palette encoded as a bitmask (bit c-1 = color c)."""
    members = [b + 1 for b in range(t) if mask >> b & 1]
    return cyclic_span(ColorSet.of(t, members))


class _Budget(Exception):
    pass


def decide(g: Graph, t: int, cfg: Optional[SolverConfig] = None) -> SearchOutcome:
    """Exact decision by backtracking; see module docstring for the prunes.

    With cfg.properness_only the surjectivity and palette conditions are
    dropped and the search answers "is there a proper coloring with colors
    drawn from [1, t]?" — the subroutine behind the chromatic index.
    """
    cfg = cfg or SolverConfig()
    _validate_t(t)
    if not is_connected(g):
        raise DisconnectedError("decide accepts connected graphs only")
    n_edges = len(g.edges)
    delta = max_degree(g)
    if t < delta:
        return SearchOutcome(
            NOT_COLORABLE, reason=f"t={t} below max degree {delta}: properness impossible"
        )
    if not cfg.properness_only and t > n_edges:
        return SearchOutcome(
            NOT_COLORABLE,
            reason=f"t={t} exceeds edge count {n_edges}: some color must go unused",
        )

    order = _edge_positions(g, cfg)
    assignment = [0] * n_edges
    vertex_mask: dict[str, int] = {v: 0 for v in g.vertices}
    color_count = [0] * (t + 1)
    state = {"nodes": 0, "used": 0}
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget

    def tick() -> None:
        state["nodes"] += 1
        if cfg.node_budget is not None and state["nodes"] > cfg.node_budget:
            raise _Budget(f"node budget {cfg.node_budget} exhausted")
        if deadline is not None and state["nodes"] % 1024 == 0 and time.monotonic() > deadline:
            raise _Budget(f"time budget {cfg.time_budget}s exhausted")

    def place(pos: int) -> bool:
        if pos == n_edges:
            return cfg.properness_only or state["used"] == t
        edge_idx = order[pos]
        u, v = g.edges[edge_idx]
        first_fixed = cfg.symmetry_breaking and pos == 0
        candidates = (1,) if first_fixed else range(1, t + 1)
        for color in candidates:
            bit = 1 << (color - 1)
            if vertex_mask[u] & bit or vertex_mask[v] & bit:
                continue  # prune (i)
            tick()
            vertex_mask[u] |= bit
            vertex_mask[v] |= bit
            assignment[edge_idx] = color
            color_count[color] += 1
            if color_count[color] == 1:
                state["used"] += 1
            ok = True
            if not cfg.properness_only:
                for w in (u, v):  # prune (ii)
                    if _mask_span(vertex_mask[w], t) > len(g.adjacency[w]):
                        ok = False
                        break
                if ok and n_edges - (pos + 1) < t - state["used"]:
                    ok = False  # prune (iii)
            if ok and place(pos + 1):
                return True
            color_count[color] -= 1
            if color_count[color] == 0:
                state["used"] -= 1
            assignment[edge_idx] = 0
            vertex_mask[u] &= ~bit
            vertex_mask[v] &= ~bit
        return False

    try:
        found = place(0)
    except _Budget as exc:
        return SearchOutcome(BUDGET_EXCEEDED, reason=str(exc), nodes=state["nodes"])
    if not found:
        return SearchOutcome(NOT_COLORABLE, reason="exhaustive search", nodes=state["nodes"])
    cert = Coloring(t=t, colors=tuple(assignment))
    if cfg.properness_only:
        for v in g.vertices:
            seen = [cert.colors[i] for _, i in g.adjacency[v]]
            if len(seen) != len(set(seen)):
                raise CycolorError("internal: proper certificate failed re-verification")
    else:
        verdict = check_cyclically_interval(g, cert)
        if not verdict.ok:
            raise CycolorError("internal: certificate failed re-verification")
    return SearchOutcome(COLORABLE, coloring=cert, nodes=state["nodes"])


def certificate_prefix_survives(
    g: Graph, cert: Coloring, cfg: Optional[SolverConfig] = None
) -> bool:
    """Replay a complete coloring along the solver's edge order and report
    whether every prefix clears the three prunes.

    A sound pruner never cuts a prefix of a valid coloring, so this must
    return True for every certificate that passes the checker (the tests
    lean on exactly that). Only the pruning predicates are replayed — the
    symmetry-breaking restriction is a search-space choice, not a prune.
    """
    cfg = cfg or SolverConfig()
    t = cert.t
    order = _edge_positions(g, cfg)
    vertex_mask: dict[str, int] = {v: 0 for v in g.vertices}
    used: set[int] = set()
    n_edges = len(g.edges)
    for pos, edge_idx in enumerate(order):
        color = cert.colors[edge_idx]
        bit = 1 << (color - 1)
        u, v = g.edges[edge_idx]
        if vertex_mask[u] & bit or vertex_mask[v] & bit:
            return False  # prune (i)
        vertex_mask[u] |= bit
        vertex_mask[v] |= bit
        used.add(color)
        if not cfg.properness_only:
            for w in (u, v):
                if _mask_span(vertex_mask[w], t) > len(g.adjacency[w]):
                    return False  # prune (ii)
            if n_edges - (pos + 1) < t - len(used):
                return False  # prune (iii)
    return True


# --- independent ground truth -------------------------------------------------

def _arc_mask_table(t: int) -> np.ndarray:
    """tab[mask] is True iff the bit set (bit c-1 = color c) is a cyclic arc."""
    tab = np.zeros(1 << t, dtype=bool)
    for start in range(t):
        mask = 0
        for length in range(1, t + 1):
            mask |= 1 << ((start + length - 1) % t)
            tab[mask] = True
    return tab


def _vector_sweep(
    g: Graph, t: int, count_all: bool
) -> tuple[int, Optional[Coloring]]:
    """Enumerate all t^|E| assignments in lex order with numpy.

    Returns (count, first certificate). With count_all False, stops at the
    first valid assignment.
    """
    n_edges = len(g.edges)
    if t > _MAX_VECTOR_T:
        raise TooLargeError(
            f"vector sweep tabulates 2^t palette shapes; t={t} exceeds {_MAX_VECTOR_T}"
        )
    tab = _arc_mask_table(t)
    full = (1 << t) - 1
    incident = [np.array(g.incident_edges(v), dtype=np.int64) for v in g.vertices]
    degrees = np.array([len(g.adjacency[v]) for v in g.vertices], dtype=np.int64)
    weights = np.array([t ** (n_edges - 1 - i) for i in range(n_edges)], dtype=object)
    total = t**n_edges
    count = 0
    first: Optional[Coloring] = None
    for base in range(0, total, _CHUNK):
        hi = min(base + _CHUNK, total)
        idx = np.arange(base, hi, dtype=np.int64)
        # digit i (0-based color) of each assignment, most significant first
        digits = np.empty((hi - base, n_edges), dtype=np.int64)
        rest = idx
        for i in range(n_edges):
            w = int(weights[i])
            digits[:, i] = rest // w
            rest = rest % w
        bits = (np.int64(1) << digits).astype(np.int64)
        valid = np.ones(hi - base, dtype=bool)
        union = np.zeros(hi - base, dtype=np.int64)
        for v_idx, inc in enumerate(incident):
            if inc.size == 0:
                continue
            pal = np.zeros(hi - base, dtype=np.int64)
            for e in inc:
                pal |= bits[:, e]
            valid &= np.bitwise_count(pal.astype(np.uint64)) == degrees[v_idx]
            valid &= tab[pal]
        for e in range(n_edges):
            union |= bits[:, e]
        valid &= union == full
        chunk_count = int(valid.sum())
        if chunk_count and first is None:
            row = int(np.flatnonzero(valid)[0])
            first = Coloring(t=t, colors=tuple(int(c) + 1 for c in digits[row]))
            if not count_all:
                return 1, first
        count += chunk_count
    return count, first


def _literal_sweep(g: Graph, t: int, count_all: bool) -> tuple[int, Optional[Coloring]]:
    count = 0
    first: Optional[Coloring] = None
    for combo in itertools.product(range(1, t + 1), repeat=len(g.edges)):
        cert = Coloring(t=t, colors=combo)
        if check_cyclically_interval(g, cert).ok:
            if first is None:
                first = cert
                if not count_all:
                    return 1, first
            count += 1
    return count, first


def _sweep(
    g: Graph, t: int, cap: int, method: str, count_all: bool
) -> tuple[int, Optional[Coloring]]:
    _validate_t(t)
    if not is_connected(g):
        raise DisconnectedError("brute force accepts connected graphs only")
    if method not in ("auto", "literal", "vector"):
        raise ColorCountError(f"unknown method {method!r}")
    space = t ** len(g.edges)
    if space > cap:
        raise TooLargeError(f"{t}^{len(g.edges)} = {space} assignments exceed the cap {cap}")
    if method == "literal" or (method == "auto" and space <= _LITERAL_SWEEP_LIMIT):
        return _literal_sweep(g, t, count_all)
    return _vector_sweep(g, t, count_all)


def brute_force_decide(
    g: Graph, t: int, cap: int = DEFAULT_ENUMERATION_CAP, method: str = "auto"
) -> SearchOutcome:
    """Ground-truth decision by exhaustive enumeration + checker filter.

    Shares no reasoning with `decide`: every single assignment is generated
    and judged by check_cyclically_interval. The certificate, when one
    exists, is the lexicographically first valid assignment.
    """
    count, first = _sweep(g, t, cap, method, count_all=False)
    if count:
        return SearchOutcome(COLORABLE, coloring=first, reason="enumeration")
    return SearchOutcome(NOT_COLORABLE, reason="exhaustive enumeration")


def count_colorings(
    g: Graph, t: int, cap: int = DEFAULT_ENUMERATION_CAP, method: str = "auto"
) -> int:
    """Number of valid colorings among all t^|E| assignments."""
    count, _ = _sweep(g, t, cap, method, count_all=True)
    return count


# --- spectra ------------------------------------------------------------------

def _decide_task(args: tuple[Graph, int, SolverConfig]) -> tuple[int, SearchOutcome]:
    g, t, cfg = args
    return t, decide(g, t, cfg)


def spectrum(
    g: Graph,
    t_min: Optional[int] = None,
    t_max: Optional[int] = None,
    cfg: Optional[SolverConfig] = None,
    jobs: int = 1,
    graph_id: str = "",
) -> SpectrumResult:
    """Decide every t in a range, defaulting to the full meaningful window
    [chromatic index, |E|]. Ranges outside that window are clamped with a
    warning. Each t is decided independently; jobs > 1 fans them out to
    worker processes.
    """
    cfg = cfg or SolverConfig()
    lo_bound = chromatic_index(g)
    hi_bound = len(g.edges)
    lo = lo_bound if t_min is None else t_min
    hi = hi_bound if t_max is None else t_max
    if lo < lo_bound or hi > hi_bound:
        warnings.warn(
            f"spectrum range [{lo}, {hi}] clamped to [{max(lo, lo_bound)}, {min(hi, hi_bound)}]"
            f" (meaningful window is [{lo_bound}, {hi_bound}])",
            stacklevel=2,
        )
        lo, hi = max(lo, lo_bound), min(hi, hi_bound)
    ts = list(range(lo, hi + 1))
    outcomes: dict[int, SearchOutcome] = {}
    if jobs > 1 and len(ts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for t, out in pool.map(_decide_task, [(g, t, cfg) for t in ts]):
                outcomes[t] = out
    else:
        for t in ts:
            outcomes[t] = decide(g, t, cfg)
    return SpectrumResult(graph_id=graph_id, t_min=lo, t_max=hi, outcomes=outcomes)
