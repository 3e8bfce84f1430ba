"""Unit tests for the DIMACS CNF export and its model decoding."""

from __future__ import annotations

import itertools

import pytest

from cycolor.cnf import arc_colors, encode, export_cnf
from cycolor.coloring import Coloring
from cycolor.errors import ColorCountError, CycolorError, DisconnectedError
from cycolor.families import gen_cycle, gen_gm, gen_path, gen_star
from cycolor.graphs import build_graph
from cycolor.solver import COLORABLE, count_colorings, decide


def _satisfies(enc, true_vars):
    for clause in enc.clauses:
        if not any((lit > 0) == (abs(lit) in true_vars) for lit in clause):
            return False
    return True


def test_arc_colors():
    assert arc_colors(3, 2, 4) == frozenset({3, 4})
    assert arc_colors(4, 2, 4) == frozenset({4, 1})
    assert arc_colors(2, 5, 3) == frozenset({1, 2, 3})
    assert arc_colors(1, 1, 6) == frozenset({1})


def test_variable_numbering_frozen():
    enc = encode(gen_path(2), 2)
    assert enc.num_vars == 10
    assert len(enc.clauses) == 23
    assert enc.edge_var(0, 1) == 1
    assert enc.edge_var(0, 2) == 2
    assert enc.edge_var(1, 1) == 3
    assert enc.arc_var(0, 1) == 5
    assert enc.arc_var(2, 2) == 10


def test_encode_validates_inputs():
    with pytest.raises(ColorCountError):
        encode(gen_path(2), 0)
    with pytest.raises(ColorCountError):
        encode(gen_path(2), True)
    with pytest.raises(DisconnectedError):
        encode(build_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")]), 2)


def test_valid_colorings_satisfy_the_encoding():
    cases = [
        (gen_cycle(5), 3),
        (gen_gm(2), 4),
        (gen_star(4), 4),
        (gen_path(3), 2),
    ]
    for g, t in cases:
        out = decide(g, t)
        assert out.status == COLORABLE
        enc = encode(g, t)
        model = enc.model_from_coloring(out.coloring)
        assert _satisfies(enc, model)
        assert enc.decode_model(model) == out.coloring


def test_model_from_coloring_rejects_mismatch():
    enc = encode(gen_path(2), 2)
    with pytest.raises(CycolorError):
        enc.model_from_coloring(Coloring(3, (1, 2)))
    with pytest.raises(CycolorError):
        enc.model_from_coloring(Coloring(2, (1, 2, 1)))


def test_decode_model_demands_exactly_one_color():
    enc = encode(gen_path(2), 2)
    with pytest.raises(CycolorError):
        enc.decode_model(set())
    with pytest.raises(CycolorError):
        enc.decode_model({enc.edge_var(0, 1), enc.edge_var(0, 2), enc.edge_var(1, 1)})


def test_exhaustive_model_count_matches_coloring_count():
    g = gen_path(2)
    enc = encode(g, 2)
    assert enc.num_vars <= 14
    models = 0
    decoded = set()
    for bits in itertools.product((False, True), repeat=enc.num_vars):
        tv = {i + 1 for i, b in enumerate(bits) if b}
        if _satisfies(enc, tv):
            models += 1
            decoded.add(enc.decode_model(tv).colors)
    assert models == count_colorings(g, 2) == 2
    assert decoded == {(1, 2), (2, 1)}


def test_exhaustive_unsat_when_no_coloring_exists():
    g = gen_star(3)  # center degree 3 cannot be properly colored with 2 colors
    enc = encode(g, 2)
    assert enc.num_vars == 14
    for bits in itertools.product((False, True), repeat=enc.num_vars):
        tv = {i + 1 for i, b in enumerate(bits) if b}
        assert not _satisfies(enc, tv)


def test_dimacs_shape():
    text = export_cnf(gen_path(2), 2)
    lines = text.splitlines()
    header = [ln for ln in lines if ln.startswith("p cnf ")]
    assert header == ["p cnf 10 23"]
    p_at = lines.index(header[0])
    assert all(ln.startswith("c var ") for ln in lines[:p_at])
    body = lines[p_at + 1 :]
    assert len(body) == 23
    assert all(ln.endswith(" 0") for ln in body)
    assert text.endswith("\n")
    # first edge clause: edge 0 takes color 1 or 2
    assert body[0] == "1 2 0"


def test_comment_block_names_every_variable():
    enc = encode(gen_path(2), 2)
    text = enc.to_dimacs()
    for var in range(1, enc.num_vars + 1):
        assert f"c var {var} :" in text
