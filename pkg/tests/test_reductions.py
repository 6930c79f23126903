"""Swaps, the configuration catalog, and coloring lifters."""

from __future__ import annotations

import pytest

from tjoin6 import coloring, reductions, workbench
from tjoin6.reductions import SwapSpec


def catalog_census(graph):
    result = reductions.match_catalog(graph)
    census = {}
    for m in result.matches:
        census[m.lemma] = census.get(m.lemma, 0) + 1
    return census, result


def test_catalog_dk4():
    census, result = catalog_census(workbench.generate("dk4"))
    assert census == {
        "odd-cut": 1,
        "multigon-order": 12,
        "3-face-23-bigon": 4,
    }
    assert {v.lemma for v in result.violations()} == {
        "odd-cut",
        "3-face-23-bigon",
    }


def test_catalog_c4x3():
    census, _ = catalog_census(workbench.generate("c4x3"))
    assert census == {
        "odd-cut": 1,
        "multigon-order": 8,
        "face-trigon": 2,
        "trigon-2big": 4,
        "4-face-trigon": 8,
    }


def test_catalog_dq3():
    census, _ = catalog_census(workbench.generate("dq3"))
    assert census == {"odd-cut": 1, "multigon-order": 24, "4-face-3-bigon": 6}


def test_catalog_dodecahedron_skips_odd_cut():
    g = workbench.generate("doubled-dodecahedron")
    result = reductions.match_catalog(g)
    assert any("odd-cut" in s for s in result.skipped)
    census = {}
    for m in result.matches:
        census[m.lemma] = census.get(m.lemma, 0) + 1
    assert census == {"multigon-order": 60, "5-face-5-multi": 12}


def test_validate_and_apply_face_swap():
    g = workbench.generate("c4x3")
    faces = [f for f in g.faces() if f.degree == 4]
    specs = reductions.swap_specs_from_face(g, faces[0].id)
    assert specs
    spec = specs[0]
    assert reductions.validate_swap(g, spec) is None
    swapped = reductions.apply_swap(g, spec)
    assert swapped.is_regular(6)
    assert len(swapped.edges) == len(g.edges)


def test_swap_spec_json_round_trip():
    g = workbench.generate("dq3")
    faces = [f for f in g.faces() if f.degree == 4]
    spec = reductions.swap_specs_from_face(g, faces[0].id)[0]
    blob = spec.to_json()
    assert reductions.spec_from_json(blob) == spec


def test_validate_rejects_bad_specs():
    g = workbench.generate("dq3")
    assert reductions.validate_swap(
        g, SwapSpec((0, 1, 2), (0,), (0,))
    ) is not None  # odd k
    assert reductions.validate_swap(
        g, SwapSpec((0, 0, 1, 2), (0, 1), (0, 0))
    ) is not None  # repeated vertex
    faces = [f for f in g.faces() if f.degree == 4]
    spec = reductions.swap_specs_from_face(g, faces[0].id)[0]
    bad = SwapSpec(spec.vertices, spec.removed_edges, (99, 99))
    assert reductions.validate_swap(g, bad) is not None


def test_swap_cut_perturbation_bound():
    g = workbench.generate("dq3")
    faces = [f for f in g.faces() if f.degree == 4]
    for spec in reductions.swap_specs_from_face(g, faces[0].id):
        swapped = reductions.apply_swap(g, spec)
        pert = reductions.check_swap_cut_property(g, swapped, spec.k)
        assert pert.within_bound
        assert pert.max_delta <= 2


def test_lift_odd_cut_dk4():
    g = workbench.generate("dk4")
    result = reductions.match_catalog(g)
    match = next(m for m in result.matches if m.lemma == "odd-cut")
    outcome = reductions.lift_coloring(g, match)
    assert outcome.status == "coloring"
    assert coloring.verify_coloring(g, outcome.coloring) is None


def test_lift_4_face_3_bigon_dq3():
    g = workbench.generate("dq3")
    result = reductions.match_catalog(g)
    match = next(m for m in result.matches if m.lemma == "4-face-3-bigon")
    outcome = reductions.lift_coloring(g, match)
    assert outcome.status in ("coloring", "forced-pattern")
    if outcome.status == "coloring":
        assert coloring.verify_coloring(g, outcome.coloring) is None


def test_checker_only_lemma_raises():
    g = workbench.generate("c4x3")
    result = reductions.match_catalog(g)
    match = next(m for m in result.matches if m.lemma == "trigon-2big")
    assert match.lemma not in reductions.LIFTABLE_LEMMAS
    with pytest.raises(reductions.ReductionError):
        reductions.lift_coloring(g, match)


def test_lemma_id_list_is_stable():
    assert len(reductions.LEMMA_IDS) == 18
    assert reductions.LIFTABLE_LEMMAS <= set(reductions.LEMMA_IDS)
