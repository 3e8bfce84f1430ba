"""Edge-coloring certificates and the two checkers.

A Coloring is a flat array of colors over a graph's edge indices plus the
palette size t. `check_proper` demands that adjacent edges differ and that
every color in [1, t] actually appears. `check_cyclically_interval`
additionally demands that every vertex's palette — the set of colors on
its incident edges — be a plain interval of [1, t] or have a plain-interval
complement. Verdicts enumerate every violation so handmade certificates
can be repaired in one pass.

The palette condition here is written out directly from its two-clause
form on purpose, independently of intervals.is_cyclic_interval; the test
suite asserts the two formulations agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ColorCountError,
    ColorIndexError,
    DisconnectedError,
    LengthMismatchError,
    UnknownVertexError,
)
from .graphs import Graph, is_connected
from .intervals import ColorSet

KIND_NOT_PROPER = "not-proper"
KIND_COLOR_UNUSED = "color-unused"
KIND_BAD_PALETTE = "bad-palette"


@dataclass(frozen=True)
class Coloring:
    t: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.t, int) or isinstance(self.t, bool) or self.t < 1:
            raise ColorCountError(f"t must be a positive integer, got {self.t!r}")
        for idx, c in enumerate(self.colors):
            if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= self.t:
                raise ColorIndexError(f"color {c!r} at edge {idx} outside [1, {self.t}]")


@dataclass(frozen=True)
class Failure:
    kind: str
    location: str
    detail: str


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failures: tuple[Failure, ...]


def _require_match(g: Graph, c: Coloring) -> None:
    if len(c.colors) != len(g.edges):
        raise LengthMismatchError(
            f"coloring has {len(c.colors)} entries but graph has {len(g.edges)} edges"
        )


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("checkers accept connected graphs only")


def palette(g: Graph, c: Coloring, v: str) -> ColorSet:
    """The set of colors appearing on edges incident to v."""
    _require_match(g, c)
    if v not in g.adjacency:
        raise UnknownVertexError(f"no vertex {v!r}")
    return ColorSet.of(c.t, (c.colors[idx] for _, idx in g.adjacency[v]))


def check_proper(g: Graph, c: Coloring) -> Verdict:
    """Adjacent edges must differ and every color in [1, t] must be used.

    Failure order is deterministic: per-vertex clashes in graph vertex
    order (colors ascending within a vertex), then unused colors ascending.
    """
    _require_connected(g)
    _require_match(g, c)
    failures: list[Failure] = []
    for v in g.vertices:
        by_color: dict[int, list[int]] = {}
        for _, idx in g.adjacency[v]:
            by_color.setdefault(c.colors[idx], []).append(idx)
        for color in sorted(by_color):
            if len(by_color[color]) > 1:
                failures.append(
                    Failure(
                        kind=KIND_NOT_PROPER,
                        location=v,
                        detail=f"color {color} repeats on edges {by_color[color]}",
                    )
                )
    used = set(c.colors)
    for color in range(1, c.t + 1):
        if color not in used:
            failures.append(
                Failure(
                    kind=KIND_COLOR_UNUSED,
                    location=str(color),
                    detail=f"color {color} appears on no edge",
                )
            )
    return Verdict(ok=not failures, failures=tuple(failures))


def _is_plain_interval(sorted_colors: list[int]) -> bool:
    return bool(sorted_colors) and sorted_colors[-1] - sorted_colors[0] + 1 == len(sorted_colors)


def _palette_admissible(p: ColorSet) -> bool:
    """Condition (a): palette is an interval; or (b): its complement is.

    An empty complement counts under (a) since the full palette [1, t] is
    itself an interval.
    """
    members = p.sorted_members()
    if _is_plain_interval(members):
        return True
    comp = p.complement().sorted_members()
    return not comp or _is_plain_interval(comp)


def check_cyclically_interval(g: Graph, c: Coloring) -> Verdict:
    """check_proper plus the per-vertex palette condition."""
    base = check_proper(g, c)
    failures = list(base.failures)
    for v in g.vertices:
        p = palette(g, c, v)
        if not _palette_admissible(p):
            failures.append(
                Failure(
                    kind=KIND_BAD_PALETTE,
                    location=v,
                    detail=(
                        f"palette {p.sorted_members()} is not an interval of [1, {c.t}] "
                        f"and neither is its complement {p.complement().sorted_members()}"
                    ),
                )
            )
    return Verdict(ok=not failures, failures=tuple(failures))


# --- interchange -------------------------------------------------------------

def to_dict(c: Coloring) -> dict:
    return {"t": c.t, "colors": list(c.colors)}


def from_dict(data: dict) -> Coloring:
    if not isinstance(data, dict) or "t" not in data or "colors" not in data:
        raise ColorCountError("coloring object needs 't' and 'colors' keys")
    t = data["t"]
    colors = data["colors"]
    if not isinstance(colors, list):
        raise ColorIndexError("'colors' must be a list of integers")
    return Coloring(t=t, colors=tuple(colors))


def to_json(c: Coloring) -> str:
    return json.dumps(to_dict(c)) + "\n"


def from_json(text: str) -> Coloring:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColorCountError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "ok": v.ok,
        "failures": [
            {"kind": f.kind, "location": f.location, "detail": f.detail} for f in v.failures
        ],
    }
