"""Coloring search, Kempe chains, and T-join packing extraction."""

from __future__ import annotations

import pytest

from tjoin6 import coloring, workbench


def test_color_names_round_trip():
    for c in coloring.COLORS:
        assert coloring.color_from_name(coloring.color_name(c)) == c
    with pytest.raises(coloring.ColoringError):
        coloring.color_from_name("mauve")


def test_verify_rejects_partial_and_clashing():
    g = workbench.generate("dk4")
    col = workbench.oracle_coloring(g)
    assert coloring.verify_coloring(g, col) is None
    partial = dict(col)
    partial.pop(0)
    assert coloring.verify_coloring(g, partial) is not None
    clash = dict(col)
    e0, e1 = sorted(g.incident_edges(0))[:2]
    clash[e0] = clash[e1]
    assert coloring.verify_coloring(g, clash) is not None


def test_solver_colors_small_corpus(small_corpus):
    for name, g in small_corpus.items():
        result = coloring.find_six_edge_coloring(g)
        assert result.found, name
        assert coloring.verify_coloring(g, result.coloring) is None, name


def test_solver_deterministic_for_seed():
    g = workbench.generate("dq3")
    a = coloring.find_six_edge_coloring(g, seed=7)
    b = coloring.find_six_edge_coloring(g, seed=7)
    assert a.coloring == b.coloring


def test_kempe_swap_is_involution():
    g = workbench.generate("dq3")
    col = coloring.find_six_edge_coloring(g).coloring
    chain, swapped = coloring.kempe_swap(g, col, 0, col[0], (col[0] + 1) % 6)
    assert coloring.verify_coloring(g, swapped) is None
    _, back = coloring.kempe_swap(g, swapped, 0, col[0], (col[0] + 1) % 6)
    assert back == col
    assert chain.edges[0] == 0 or 0 in chain.edges


def test_kempe_swap_rejects_equal_colors():
    g = workbench.generate("dk4")
    col = workbench.oracle_coloring(g)
    with pytest.raises(coloring.ColoringError):
        coloring.kempe_swap(g, col, 0, col[0], col[0])


def test_packing_from_coloring(small_corpus):
    for name, g in small_corpus.items():
        col = coloring.find_six_edge_coloring(g).coloring
        packing = coloring.packing_from_coloring(g, col)
        assert (
            coloring.verify_packing(g, packing.terminals, packing) is None
        ), name
        assert packing.terminals == frozenset(range(g.n))


def test_verify_packing_detects_overlap():
    g = workbench.generate("dk4")
    col = workbench.oracle_coloring(g)
    packing = coloring.packing_from_coloring(g, col)
    classes = list(packing.classes)
    stolen = next(iter(classes[0]))
    classes[1] = classes[1] | {stolen}
    bad = coloring.TJoinPacking(tuple(classes), packing.terminals)
    assert coloring.verify_packing(g, packing.terminals, bad) is not None
