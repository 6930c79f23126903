"""Degenerate colorings at one edge, canonicalization, and mates."""

from __future__ import annotations

import itertools

import pytest

from tjoin6 import ecoloring, workbench
from tjoin6.ecoloring import EColoring


def all_hexabond_assignments(edge=0):
    """Every assignment shape for the 2-vertex bundle: 3- and 5-color sets
    on the distinguished edge, single colors elsewhere."""
    g = workbench.generate("hexabond")
    others = [e for e in g.edge_ids() if e != edge]
    for size in (3, 5):
        for eset in itertools.combinations(range(6), size):
            for rest in itertools.product(range(6), repeat=len(others)):
                yield EColoring(
                    edge, dict(zip(others, rest)), frozenset(eset)
                )


def canonical_hexabond_ecoloring():
    # Distinguished edge carries {alpha, beta, gamma}; alpha is tripled.
    return EColoring(
        0, {1: 0, 2: 0, 3: 3, 4: 4, 5: 5}, frozenset({0, 1, 2})
    )


def test_verify_accepts_canonical():
    g = workbench.generate("hexabond")
    ec = canonical_hexabond_ecoloring()
    assert ecoloring.verify_e_coloring(g, ec) is None
    assert ecoloring.is_canonical_shape(g, ec)


def test_verify_rejects_even_count():
    g = workbench.generate("hexabond")
    ec = EColoring(0, {1: 0, 2: 0, 3: 3, 4: 3, 5: 5}, frozenset({0, 1, 2}))
    assert ecoloring.verify_e_coloring(g, ec) is not None


def test_find_e_coloring_hexabond():
    g = workbench.generate("hexabond")
    result = ecoloring.find_e_coloring(g, 0)
    assert result.found and result.exhaustive
    assert ecoloring.verify_e_coloring(g, result.ecoloring) is None


def test_find_e_coloring_rejects_unknown_edge():
    g = workbench.generate("hexabond")
    with pytest.raises(ecoloring.EColoringError):
        ecoloring.find_e_coloring(g, 99)


def test_canonicalize_fixed_point():
    g = workbench.generate("hexabond")
    ec = canonical_hexabond_ecoloring()
    result = ecoloring.canonicalize_trigon(g, ec)
    assert result.status == "canonical"
    assert result.moves == 0
    assert result.ecoloring == ec


def test_canonicalize_five_color_set():
    g = workbench.generate("hexabond")
    ec = EColoring(
        0, {1: 5, 2: 5, 3: 5, 4: 5, 5: 5}, frozenset({0, 1, 2, 3, 4})
    )
    assert ecoloring.verify_e_coloring(g, ec) is None
    result = ecoloring.canonicalize_trigon(g, ec)
    assert result.status == "canonical"
    assert ecoloring.is_canonical_shape(g, result.ecoloring)
    assert 1 <= result.moves <= ecoloring.MOVE_BOUND


def test_canonicalize_trigon_edges_c4x3():
    g = workbench.generate("c4x3")
    for m in g.multigons():
        for e in m.edge_ids:
            result = ecoloring.find_e_coloring(g, e)
            assert result.found
            canon = ecoloring.canonicalize_trigon(g, result.ecoloring)
            if canon.status == "canonical":
                assert ecoloring.is_canonical_shape(g, canon.ecoloring)
            else:
                assert canon.status == "proper-coloring"
                assert canon.coloring is not None


def test_canonicalize_requires_trigon_edge():
    g = workbench.generate("dk4")  # only bigons
    result = ecoloring.find_e_coloring(g, 0)
    assert result.found
    with pytest.raises(ecoloring.EColoringError):
        ecoloring.canonicalize_trigon(g, result.ecoloring)


def test_mate_statuses_on_canonical_hexabond():
    g = workbench.generate("hexabond")
    ec = canonical_hexabond_ecoloring()
    alpha = ecoloring.find_mate(g, ec, 0)
    assert alpha.status == "mate"
    assert alpha.mate.trivial
    delta = ecoloring.find_mate(g, ec, 3)
    assert delta.status == "none-found"


def test_nontrivial_mates_carry_five_edges(small_corpus):
    # Every mate the search can produce respects the 5-edge invariant on
    # non-trivial cuts; scan a few trigon edges on the tripled square.
    g = workbench.generate("c4x3")
    ec = ecoloring.find_e_coloring(g, 0).ecoloring
    for c in range(6):
        result = ecoloring.find_mate(g, ec, c)
        if result.status == "mate" and not result.mate.trivial:
            assert result.mate.color_count >= 5
