"""Odd-cut and T-cut analysis, plus the cut-splitting construction.

Minimum odd cuts are found by exhaustive subset enumeration in Gray-code
order, which keeps the per-subset update constant-time.  This is a
reference algorithm for desk-scale instances; the vertex cap guards it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plane_graph import GraphError, PlaneMultigraph

DEFAULT_VERTEX_CAP = 16


class CutError(ValueError):
    pass


@dataclass(frozen=True)
class Cut:
    side: frozenset[int]
    size: int
    odd: bool
    t_odd: bool
    trivial: bool

    def to_json(self) -> dict:
        return {
            "side": sorted(self.side),
            "size": self.size,
            "odd": self.odd,
            "t_cut": self.t_odd,
            "trivial": self.trivial,
        }


@dataclass(frozen=True)
class OddCutReport:
    minimum: Cut
    minimum_nontrivial: Cut | None
    t_cut_sizes_same_parity: bool

    def to_json(self) -> dict:
        return {
            "minimum_odd_cut": self.minimum.to_json(),
            "minimum_nontrivial_odd_cut": (
                self.minimum_nontrivial.to_json() if self.minimum_nontrivial else None
            ),
            "t_cut_sizes_same_parity": self.t_cut_sizes_same_parity,
        }


def cut_size(graph: PlaneMultigraph, side) -> Cut:
    side = frozenset(side)
    if not side or len(side) >= graph.n:
        raise CutError("cut side must be a nonempty proper vertex subset")
    size = 0
    for e in graph.edges:
        u, v = graph.edge_endpoints(e)
        if (u in side) != (v in side):
            size += 1
    return Cut(
        side=side,
        size=size,
        odd=len(side) % 2 == 1,
        t_odd=len(side & graph.terminals) % 2 == 1,
        trivial=len(side) in (1, graph.n - 1),
    )


def _enumerate_cuts(graph: PlaneMultigraph, cap: int):
    """Yield (mask, size, |A|, |A∩T|) for all subsets with vertex 0 outside.

    Gray-code order: each step flips one vertex, so the cut size is updated
    from the flipped vertex's incident edges only.
    """
    n = graph.n
    if n > cap:
        raise CutError(f"vertex count {n} above enumeration cap {cap}")
    nbrs = [graph.neighbors(v) for v in range(n)]
    t_mask = sum(1 << t for t in graph.terminals)
    size = 0
    card = 0
    tcard = 0
    mask = 0
    yield mask, size, card, tcard
    # Flip vertices 1..n-1 in standard Gray order.
    for i in range(1, 1 << (n - 1)):
        v = (i & -i).bit_length()  # 1-based index of flipped bit -> vertex v
        mask ^= 1 << v
        inside = mask >> v & 1
        delta = 0
        for w in nbrs[v]:
            delta += 1 if (mask >> w & 1) != inside else -1
        size += delta
        card += 1 if inside else -1
        if t_mask >> v & 1:
            tcard += 1 if inside else -1
        yield mask, size, card, tcard


def min_odd_cut(
    graph: PlaneMultigraph, cap: int = DEFAULT_VERTEX_CAP
) -> OddCutReport:
    """Minimum odd cut and minimum non-trivial odd cut by brute force.

    An odd vertex count means the empty side already forms an odd cut of
    size zero, which is reported as an immediate violation.
    """
    if graph.n % 2 == 1:
        empty = Cut(frozenset(), 0, True, len(graph.terminals) % 2 == 1, False)
        return OddCutReport(empty, None, True)
    best = None
    best_nontrivial = None
    parities = set()
    for mask, size, card, tcard in _enumerate_cuts(graph, cap):
        if card == 0:
            continue
        if tcard % 2 == 1:
            parities.add(size % 2)
        if card % 2 == 0:
            continue
        if best is None or size < best[0]:
            best = (size, mask)
        if card not in (1, graph.n - 1):
            if best_nontrivial is None or size < best_nontrivial[0]:
                best_nontrivial = (size, mask)
    assert best is not None

    def to_cut(size_mask):
        size, mask = size_mask
        side = frozenset(v for v in range(graph.n) if mask >> v & 1)
        return cut_size(graph, side)

    return OddCutReport(
        to_cut(best),
        to_cut(best_nontrivial) if best_nontrivial else None,
        len(parities) <= 1,
    )


def odd_cut_sides(graph: PlaneMultigraph, cap: int = DEFAULT_VERTEX_CAP):
    """All odd cuts (one side per cut, vertex 0 outside), as Cut objects."""
    out = []
    for mask, size, card, _t in _enumerate_cuts(graph, cap):
        if card % 2 == 1:
            side = frozenset(v for v in range(graph.n) if mask >> v & 1)
            out.append(Cut(side, size, True, len(side & graph.terminals) % 2 == 1,
                           card in (1, graph.n - 1)))
    return out


@dataclass(frozen=True)
class SplitResult:
    """The two contracted parts of a size-6 odd cut.

    ``part_a`` replaces side A by a single new vertex (and keeps side B),
    ``part_b`` does the opposite.  ``edge_map_a``/``edge_map_b`` map every
    surviving original edge id to its id in the respective part; the six
    cut edges appear in both maps.
    """

    graph: PlaneMultigraph
    side_a: frozenset[int]
    part_a: PlaneMultigraph
    part_b: PlaneMultigraph
    cut_edges: tuple[int, ...]
    edge_map_a: dict[int, int]
    edge_map_b: dict[int, int]
    new_vertex_a: int
    new_vertex_b: int


def _contract_side(graph: PlaneMultigraph, side: frozenset[int]):
    """Contract the (connected) vertex set ``side`` into one vertex.

    Edges inside the side become loops and are dropped; the contracted
    vertex inherits the cyclic order of the cut edges, so planarity is
    preserved.  Returns (graph, new vertex id, edge id map for kept edges).
    """
    inside = sorted(side)
    if not _connected_in(graph, side):
        raise CutError("cut side is not connected; cannot contract planarly")
    # Merge rotations by repeatedly contracting an edge between a merged
    # blob and a not-yet-merged vertex of the side.
    rot: dict[int, list[int]] = {v: list(graph.rotations[v]) for v in range(graph.n)}
    merged = {inside[0]}
    blob = list(rot[inside[0]])
    while len(merged) < len(inside):
        pick = None
        for i, d in enumerate(blob):
            w = graph.dart_vertex(graph.reverse(d))
            if w in side and w not in merged:
                pick = (i, d, w)
                break
        assert pick is not None, "side connectivity was checked"
        i, d, w = pick
        rd = graph.reverse(d)
        wrot = rot[w]
        j = wrot.index(rd)
        spliced = wrot[j + 1 :] + wrot[:j]
        blob = blob[:i] + spliced + blob[i + 1 :]
        merged.add(w)
    # Drop remaining internal darts (loops within the contracted side).
    internal = {
        d
        for d in blob
        if graph.dart_vertex(graph.reverse(d)) in side
    }
    blob = [d for d in blob if d not in internal]

    keep = [v for v in range(graph.n) if v not in side]
    vmap = {v: i for i, v in enumerate(keep)}
    new_vertex = len(keep)
    rotations = [list(graph.rotations[v]) for v in keep] + [blob]
    edge_map: dict[int, int] = {}
    edges: dict[int, tuple[int, int]] = {}
    nxt = 0
    for e in sorted(graph.edges):
        u, v = graph.edge_endpoints(e)
        if u in side and v in side:
            continue
        edges[nxt] = graph.edges[e]
        edge_map[e] = nxt
        nxt += 1
    part = PlaneMultigraph(rotations, edges)
    return part, new_vertex, edge_map, vmap


def _connected_in(graph: PlaneMultigraph, side: frozenset[int]) -> bool:
    start = next(iter(side))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in graph.neighbors(v):
            if w in side and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == side


def split_along_cut(graph: PlaneMultigraph, cut: Cut) -> SplitResult:
    """Split along an odd cut of size six by contracting each side in turn.

    A singleton side A is rejected (contracting it would only relabel the
    graph); a singleton complement is allowed for the same reason.
    """
    if not cut.odd:
        raise CutError("cut is not odd")
    if cut.size != 6:
        raise CutError(f"cut size is {cut.size}, need exactly 6")
    if len(cut.side) < 2:
        raise CutError("cut is trivial on side A")
    side_a = cut.side
    side_b = frozenset(range(graph.n)) - side_a
    cut_edges = tuple(
        e
        for e in sorted(graph.edges)
        if (graph.edge_endpoints(e)[0] in side_a)
        != (graph.edge_endpoints(e)[1] in side_a)
    )
    part_a, va, map_a, _ = _contract_side(graph, side_a)
    part_b, vb, map_b, _ = _contract_side(graph, side_b)
    return SplitResult(
        graph=graph,
        side_a=side_a,
        part_a=part_a,
        part_b=part_b,
        cut_edges=cut_edges,
        edge_map_a=map_a,
        edge_map_b=map_b,
        new_vertex_a=va,
        new_vertex_b=vb,
    )


def combine_colorings(
    split: SplitResult,
    col_a: dict[int, int],
    col_b: dict[int, int],
) -> dict[int, int]:
    """Glue colorings of the two parts into a coloring of the whole graph.

    The six cut edges carry six distinct colors in each part; permuting
    part B's colors to agree on the cut edges makes the union proper.
    """
    colors_a = [col_a[split.edge_map_a[e]] for e in split.cut_edges]
    colors_b = [col_b[split.edge_map_b[e]] for e in split.cut_edges]
    if len(set(colors_a)) != 6:
        raise CutError("part A cut edges are not rainbow; invalid coloring")
    if len(set(colors_b)) != 6:
        raise CutError("part B cut edges are not rainbow; invalid coloring")
    perm = {b: a for a, b in zip(colors_a, colors_b)}
    cut = set(split.cut_edges)
    combined: dict[int, int] = {}
    for e in split.graph.edges:
        if e in cut:
            combined[e] = col_a[split.edge_map_a[e]]
        elif e in split.edge_map_a:  # internal to side B, kept in part A
            combined[e] = col_a[split.edge_map_a[e]]
        else:  # internal to side A, kept in part B
            combined[e] = perm[col_b[split.edge_map_b[e]]]
    return combined
