"""Generators and the exhaustive coloring oracle."""

from __future__ import annotations

import pytest

from tjoin6 import coloring, cuts, workbench


def test_generator_counts():
    assert workbench.generate("dk4").n == 4
    assert len(workbench.generate("dk4").edges) == 12
    dq3 = workbench.generate("dq3")
    assert (dq3.n, len(dq3.edges), len(dq3.faces())) == (8, 24, 18)
    p5 = workbench.generate("doubled-prism", [5])
    assert (p5.n, len(p5.edges)) == (10, 30)
    assert p5.is_regular(6)


def test_generator_determinism():
    for name in ("dk4", "c4x3", "dq3", "doubled-dodecahedron"):
        assert (
            workbench.generate(name).to_text()
            == workbench.generate(name).to_text()
        )
    assert (
        workbench.generate("doubled-prism", [6]).to_text()
        == workbench.generate("doubled-prism", [6]).to_text()
    )


def test_unknown_generator():
    with pytest.raises(ValueError):
        workbench.generate("icosabond")


def test_doubled_cubic_min_odd_cut(small_corpus):
    for name, g in small_corpus.items():
        assert cuts.min_odd_cut(g).minimum.size >= 6, name


def test_oracle_cap():
    g = workbench.generate("dq3")  # 24 edges
    with pytest.raises(ValueError):
        workbench.oracle_coloring(g)


def test_oracle_colors_hexabond():
    g = workbench.generate("hexabond")
    col = workbench.oracle_coloring(g)
    assert col is not None
    assert coloring.verify_coloring(g, col) is None


def test_multiply_edges_preserves_faces():
    g = workbench.generate("dk4")
    base_degrees = sorted(f.degree for f in g.faces() if f.degree >= 3)
    doubled = workbench.multiply_edges(g, 2)
    degrees = sorted(f.degree for f in doubled.faces() if f.degree >= 3)
    assert degrees == base_degrees
