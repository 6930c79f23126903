"""Swaps, the structural-configuration catalog, and coloring lifters.

A v1..vk-swap (k in {4, 6, 8}) removes the edges v2v3, v4v5, ..., vkv1 and
inserts the edges v1v2, v3v4, ..., v_{k-1}vk, each drawn through a declared
anchor face.  The catalog holds one checker per structural lemma; a checker
emits matches whose conclusion is evaluated literally, so a violated
conclusion marks the instance as a witness of non-minimality there.
Lifters reconstruct a coloring of the original graph from a coloring of the
swapped graph via a color shared by all inserted-edge bundles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cuts as cuts_mod
from .coloring import color_name, find_six_edge_coloring, verify_coloring
from .plane_graph import Face, GraphError, Multigon, PlaneMultigraph, classify

SUPPORTED_K = (4, 6, 8)

LEMMA_IDS = (
    "odd-cut",
    "multigon-order",
    "face-quadragon",
    "face-trigon",
    "3-face-trigon",
    "3-face-23-bigon",
    "trigon-2big",
    "3-face-1-bigon",
    "35-face-bigon-trigon",
    "4-face-trigon",
    "4-face-3-bigon",
    "5-face-5-multi",
    "6-face-23",
    "6-face-32",
    "7-face-trigon",
    "8-face",
    "danger-A",
    "danger-B",
)

# Lemmas whose proofs rewrite the graph (splittable cut or swap); the rest
# are mate-based existence arguments and stay checker-only.
LIFTABLE_LEMMAS = frozenset(
    {
        "odd-cut",
        "3-face-trigon",
        "3-face-23-bigon",
        "3-face-1-bigon",
        "35-face-bigon-trigon",
        "4-face-trigon",
        "4-face-3-bigon",
        "6-face-23",
        "6-face-32",
        "8-face",
    }
)


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class SwapSpec:
    """A v1..vk-swap: vertices in cyclic order, removed edges, anchor faces.

    removed_edges[i] is the edge v_{2i+2}v_{2i+3} (indices cyclic);
    anchor_faces[i] is the face through which the new edge v_{2i+1}v_{2i+2}
    is drawn.
    """

    vertices: tuple[int, ...]
    removed_edges: tuple[int, ...]
    anchor_faces: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def removed_pairs(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[(2 * i + 1) % self.k], v[(2 * i + 2) % self.k]) for i in range(self.k // 2)]

    def new_pairs(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[2 * i], v[2 * i + 1]) for i in range(self.k // 2)]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "removed_edges": list(self.removed_edges),
            "anchor_faces": list(self.anchor_faces),
        }


def spec_from_json(data: dict) -> SwapSpec:
    return SwapSpec(
        tuple(data["vertices"]),
        tuple(data["removed_edges"]),
        tuple(data["anchor_faces"]),
    )


def validate_swap(graph: PlaneMultigraph, spec: SwapSpec) -> str | None:
    """None if the spec is applicable, else a reason."""
    k = spec.k
    if k not in SUPPORTED_K:
        return f"unsupported k {k}"
    if len(set(spec.vertices)) != k:
        return "swap vertices must be distinct"
    if any(v < 0 or v >= graph.n for v in spec.vertices):
        return "swap vertex out of range"
    if len(spec.removed_edges) != k // 2 or len(spec.anchor_faces) != k // 2:
        return "need k/2 removed edges and k/2 anchor faces"
    if len(set(spec.removed_edges)) != k // 2:
        return "removed edges must be distinct"
    for e, (a, b) in zip(spec.removed_edges, spec.removed_pairs()):
        if e not in graph.edges:
            return f"removed edge {e} does not exist"
        if set(graph.edge_endpoints(e)) != {a, b}:
            return f"removed edge {e} does not join vertices {a} and {b}"
    faces = graph.faces()
    for f, (a, b) in zip(spec.anchor_faces, spec.new_pairs()):
        if f < 0 or f >= len(faces):
            return f"anchor face {f} does not exist"
        boundary = {graph.dart_vertex(d) for d in faces[f].darts}
        if a not in boundary or b not in boundary:
            return f"anchor face {f} does not contain both {a} and {b}"
    return None


def apply_swap(graph: PlaneMultigraph, spec: SwapSpec) -> PlaneMultigraph:
    graph2, _new = apply_swap_with_map(graph, spec)
    return graph2


def apply_swap_with_map(
    graph: PlaneMultigraph, spec: SwapSpec
) -> tuple[PlaneMultigraph, tuple[int, ...]]:
    """Apply the swap; also return the ids of the inserted edges.

    A new edge's dart enters the rotation of each endpoint immediately
    before the anchor face's outgoing boundary dart at that corner (smallest
    such dart if the face meets the vertex more than once), which places the
    edge inside the declared face.  Surviving edges keep their ids.
    """
    reason = validate_swap(graph, spec)
    if reason is not None:
        raise ReductionError(f"invalid swap: {reason}")
    faces = graph.faces()
    rotations = [list(r) for r in graph.rotations]
    edges = dict(graph.edges)
    next_edge = max(edges) + 1
    next_dart = max(d for pair in edges.values() for d in pair) + 1

    def corner_dart(face_id: int, v: int) -> int:
        cands = [
            d for d in faces[face_id].darts if graph.dart_vertex(d) == v
        ]
        if not cands:
            raise ReductionError(f"face {face_id} has no corner at vertex {v}")
        return min(cands)

    new_ids = []
    inserts: list[tuple[int, int, int]] = []  # (vertex, before dart, new dart)
    for f, (a, b) in zip(spec.anchor_faces, spec.new_pairs()):
        da, db = next_dart, next_dart + 1
        next_dart += 2
        edges[next_edge] = (da, db)
        new_ids.append(next_edge)
        next_edge += 1
        inserts.append((a, corner_dart(f, a), da))
        inserts.append((b, corner_dart(f, b), db))
    for v, before, new in inserts:
        rot = rotations[v]
        rot.insert(rot.index(before), new)

    removed_darts = set()
    for e in spec.removed_edges:
        removed_darts.update(edges[e])
        del edges[e]
    rotations = [[d for d in rot if d not in removed_darts] for rot in rotations]

    try:
        graph2 = PlaneMultigraph(rotations, edges)
    except GraphError as exc:
        raise ReductionError(f"swap result is not a valid plane graph: {exc}") from exc
    if not graph2.is_regular(6) and graph.is_regular(6):
        raise ReductionError("swap broke 6-regularity")
    return graph2, tuple(new_ids)


@dataclass(frozen=True)
class CutPerturbation:
    k: int
    bound: int
    max_delta: int
    within_bound: bool
    extremal_sides: tuple[frozenset[int], ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "bound": self.bound,
            "max_delta": self.max_delta,
            "within_bound": self.within_bound,
            "extremal_sides": [sorted(s) for s in self.extremal_sides],
        }


def check_swap_cut_property(
    graph: PlaneMultigraph,
    swapped: PlaneMultigraph,
    k: int,
    cap: int = cuts_mod.DEFAULT_VERTEX_CAP,
) -> CutPerturbation:
    """Exhaustively bound |cut_G'(S) - cut_G(S)| over all vertex subsets."""
    if k not in SUPPORTED_K:
        raise ReductionError(f"unsupported k {k}")
    if graph.n != swapped.n:
        raise ReductionError("graphs have different vertex counts")
    bound = 2 if k in (4, 6) else 4
    max_delta = 0
    extremal: list[frozenset[int]] = []
    pairs = zip(
        cuts_mod._enumerate_cuts(graph, cap),
        cuts_mod._enumerate_cuts(swapped, cap),
    )
    for (mask, size, card, _t), (_mask2, size2, _c2, _t2) in pairs:
        if card == 0:
            continue
        delta = abs(size2 - size)
        if delta > max_delta:
            max_delta = delta
            extremal = []
        if delta == max_delta and len(extremal) < 4:
            side = frozenset(v for v in range(graph.n) if mask >> v & 1)
            extremal.append(side)
    return CutPerturbation(k, bound, max_delta, max_delta <= bound, tuple(extremal))


# -- configuration catalog ----------------------------------------------------


@dataclass(frozen=True)
class ConfigMatch:
    lemma: str
    elements: tuple[tuple[str, object], ...]
    premise_holds: bool
    conclusion_holds: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "elements": [
                {"kind": k, "id": list(i) if isinstance(i, tuple) else i}
                for k, i in self.elements
            ],
            "premise_holds": self.premise_holds,
            "conclusion_holds": self.conclusion_holds,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CatalogResult:
    matches: tuple[ConfigMatch, ...]
    skipped: tuple[str, ...]

    def violations(self) -> tuple[ConfigMatch, ...]:
        return tuple(m for m in self.matches if not m.conclusion_holds)

    def to_json(self) -> dict:
        return {
            "matches": [m.to_json() for m in self.matches],
            "skipped": list(self.skipped),
            "violations": [m.to_json() for m in self.violations()],
        }


def _face_vertex_cycle(graph: PlaneMultigraph, face: Face) -> list[int]:
    return [graph.dart_vertex(d) for d in face.darts]


def _outer_faces(graph: PlaneMultigraph, mg: Multigon) -> set[int]:
    """The (at most two) non-bigon faces adjacent to a multigon."""
    out = set()
    for e in mg.edge_ids:
        out.update(graph.edge_faces(e))
    return out - set(mg.bigon_face_ids)


def match_catalog(
    graph: PlaneMultigraph, cap: int = cuts_mod.DEFAULT_VERTEX_CAP
) -> CatalogResult:
    cls = classify(graph)
    faces = graph.faces()
    multigons = graph.multigons()
    deg = {f.id: f.degree for f in faces}
    matches: list[ConfigMatch] = []
    skipped: list[str] = []

    def emit(lemma, elements, conclusion, detail):
        matches.append(ConfigMatch(lemma, tuple(elements), True, conclusion, detail))

    def outer(m: Multigon) -> set[int]:
        return _outer_faces(graph, m)

    def order_of(mid: int) -> int:
        return multigons[mid].order

    def adjacent_of_order(f: int, order: int) -> set[int]:
        return cls.adjacent_multigons_of_order(f, order)

    # odd-cut: every odd cut with a contractible side (two or more vertices)
    # has size at least eight.
    if graph.n <= cap:
        candidates = [
            c for c in cuts_mod.odd_cut_sides(graph, cap) if len(c.side) >= 2
        ]
        if candidates:
            best = min(candidates, key=lambda c: (c.size, sorted(c.side)))
            emit(
                "odd-cut",
                [("side", tuple(sorted(best.side)))],
                best.size >= 8,
                f"minimum odd cut with a contractible side has size {best.size}",
            )
    else:
        skipped.append("odd-cut")

    # multigon-order: order <= 4 and incident orders sum to <= 5.
    for m in multigons:
        if m.order >= 3:
            emit(
                "multigon-order",
                [("multigon", m.id)],
                m.order <= 4,
                f"multigon order {m.order}",
            )
    for a, b in sorted(cls.multigon_incident_pairs):
        total = order_of(a) + order_of(b)
        emit(
            "multigon-order",
            [("multigon", a), ("multigon", b)],
            total <= 5,
            f"incident multigon orders sum to {total}",
        )

    # face-quadragon: every face adjacent to a quadragon is >=5-big.
    for m in multigons:
        if m.order != 4:
            continue
        for f in sorted(outer(m)):
            emit(
                "face-quadragon",
                [("face", f), ("multigon", m.id)],
                cls.bigness[f] >= 5,
                f"face {f} is {cls.bigness[f]}-big",
            )

    # face-trigon: every face adjacent to a trigon has an edge outside
    # all multigons.
    trigon_faces: dict[int, list[int]] = {}
    for m in multigons:
        if m.order == 3:
            for f in outer(m):
                trigon_faces.setdefault(f, []).append(m.id)
    for f in sorted(trigon_faces):
        free = [
            e for e, _g in cls.face_face_adj[f]
            if graph.multigon_of_edge(e) is None
        ]
        emit(
            "face-trigon",
            [("face", f)] + [("multigon", m) for m in sorted(trigon_faces[f])],
            len(free) >= 1,
            f"face {f} has {len(free)} edges outside multigons",
        )

    # 3-face-trigon: a 3-face on a trigon has no other multigon, its other
    # two neighbours are >=5-big, and so is the trigon's other face.
    for m in multigons:
        if m.order != 3:
            continue
        for f in sorted(outer(m)):
            if deg[f] != 3:
                continue
            no_other = cls.adjacent_multigons(f) == {m.id}
            sides_big = all(
                cls.bigness[g] >= 5
                for e, g in cls.face_face_adj[f]
                if e not in m.edge_ids
            )
            others = outer(m) - {f}
            far_big = all(cls.bigness[g] >= 5 for g in others)
            emit(
                "3-face-trigon",
                [("face", f), ("multigon", m.id)],
                no_other and sides_big and far_big,
                f"no_other_multigon={no_other} side_faces_5big={sides_big} "
                f"far_face_5big={far_big}",
            )

    # 3-face-23-bigon: a 3-face on two or more bigons has exactly two, and
    # the bigons' other faces are >=5-big.
    for f in faces:
        if deg[f.id] != 3:
            continue
        bigons = sorted(adjacent_of_order(f.id, 2))
        if len(bigons) < 2:
            continue
        exactly_two = len(bigons) == 2
        others_big = all(
            cls.bigness[g] >= 5
            for b in bigons
            for g in outer(multigons[b]) - {f.id}
        )
        emit(
            "3-face-23-bigon",
            [("face", f.id)] + [("multigon", b) for b in bigons],
            exactly_two and others_big,
            f"adjacent to {len(bigons)} bigons; other faces >=5-big: {others_big}",
        )

    # trigon-2big: a trigon on a <=2-big face is also on a >=4-big face.
    for m in multigons:
        if m.order != 3:
            continue
        fs = sorted(outer(m))
        lows = [f for f in fs if cls.bigness[f] <= 2]
        if not lows:
            continue
        highs = [f for f in fs if cls.bigness[f] >= 4]
        emit(
            "trigon-2big",
            [("multigon", m.id)] + [("face", f) for f in fs],
            len(highs) >= 1,
            f"bignesses {[cls.bigness[f] for f in fs]}",
        )

    # 3-face-1-bigon: a 3-face on a single bigon whose other face is
    # <=2-big has its two remaining neighbours >=3-big.
    for f in faces:
        if deg[f.id] != 3:
            continue
        bigons = sorted(adjacent_of_order(f.id, 2))
        if len(bigons) != 1:
            continue
        b = multigons[bigons[0]]
        far = outer(b) - {f.id}
        if not all(cls.bigness[g] <= 2 for g in far):
            continue
        rest_big = all(
            cls.bigness[g] >= 3
            for e, g in cls.face_face_adj[f.id]
            if e not in b.edge_ids
        )
        emit(
            "3-face-1-bigon",
            [("face", f.id), ("multigon", b.id)],
            rest_big,
            f"remaining neighbour faces >=3-big: {rest_big}",
        )

    # 35-face-bigon-trigon: forbidden corner configuration around a vertex
    # shared by a 3-face, a dangerous 5-face, a bigon and a trigon.
    fverts = {f.id: set(_face_vertex_cycle(graph, f)) for f in faces}
    for t in multigons:
        if t.order != 3:
            continue
        for f5 in sorted(outer(t)):
            if deg[f5] != 5 or f5 not in cls.dangerous_faces:
                continue
            incident_bigons = {
                m
                for m in cls.f_incident_multigons(f5, t.id)
                if order_of(m) == 2
            }
            if not incident_bigons:
                continue
            for v1 in sorted(t.endpoints):
                for f3 in sorted(cls.adjacent_faces(f5)):
                    if deg[f3] != 3 or v1 not in fverts[f3]:
                        continue
                    for b in multigons:
                        if b.order != 2 or v1 not in b.endpoints:
                            continue
                        if f3 not in outer(b) or f5 in outer(b):
                            continue
                        emit(
                            "35-face-bigon-trigon",
                            [
                                ("vertex", v1),
                                ("face", f3),
                                ("face", f5),
                                ("multigon", t.id),
                                ("multigon", b.id),
                            ],
                            False,
                            "forbidden 3-face/dangerous-5-face corner present",
                        )

    # 4-face-trigon: a 4-face on a trigon has no other multigon.
    for m in multigons:
        if m.order != 3:
            continue
        for f in sorted(outer(m)):
            if deg[f] != 4:
                continue
            emit(
                "4-face-trigon",
                [("face", f), ("multigon", m.id)],
                cls.adjacent_multigons(f) == {m.id},
                f"multigons adjacent to face {f}: "
                f"{sorted(cls.adjacent_multigons(f))}",
            )

    # 4-face-3-bigon: no 4-face is adjacent to three or four bigons.
    for f in faces:
        if deg[f.id] != 4:
            continue
        bigons = sorted(adjacent_of_order(f.id, 2))
        if len(bigons) >= 3:
            emit(
                "4-face-3-bigon",
                [("face", f.id)] + [("multigon", b) for b in bigons],
                False,
                f"4-face adjacent to {len(bigons)} bigons",
            )

    # 5-face-5-multi: a 5-face on five multigons has only bigons, each on a
    # >=4-big face.
    for f in faces:
        if deg[f.id] != 5:
            continue
        ms = sorted(cls.adjacent_multigons(f.id))
        if len(ms) != 5:
            continue
        all_bigons = all(order_of(m) == 2 for m in ms)
        each_big = all_bigons and all(
            any(cls.bigness[g] >= 4 for g in outer(multigons[m]))
            for m in ms
        )
        emit(
            "5-face-5-multi",
            [("face", f.id)] + [("multigon", m) for m in ms],
            all_bigons and each_big,
            f"all bigons: {all_bigons}; each on a >=4-big face: {each_big}",
        )

    # 6-face-23 / 6-face-32 / 8-face: forbidden multigon censuses.
    for f in faces:
        bigons = sorted(adjacent_of_order(f.id, 2))
        trigons = sorted(adjacent_of_order(f.id, 3))
        if deg[f.id] == 6 and len(trigons) == 3 and len(bigons) in (1, 2):
            emit(
                "6-face-23",
                [("face", f.id)]
                + [("multigon", m) for m in trigons + bigons],
                False,
                f"6-face with {len(bigons)} bigons and three trigons",
            )
        if deg[f.id] == 6 and len(bigons) == 3 and len(trigons) == 2:
            emit(
                "6-face-32",
                [("face", f.id)]
                + [("multigon", m) for m in trigons + bigons],
                False,
                "6-face with three bigons and two trigons",
            )
        if deg[f.id] == 8 and len(bigons) == 3 and len(trigons) == 4:
            emit(
                "8-face",
                [("face", f.id)]
                + [("multigon", m) for m in trigons + bigons],
                False,
                "8-face with three bigons and four trigons",
            )

    # 7-face-trigon: a trigon on a dangerous 7-face has a >=5-big other face.
    for m in multigons:
        if m.order != 3:
            continue
        for f in sorted(outer(m)):
            if deg[f] != 7 or f not in cls.dangerous_faces:
                continue
            others = outer(m) - {f}
            emit(
                "7-face-trigon",
                [("multigon", m.id), ("face", f)],
                all(cls.bigness[g] >= 5 for g in others),
                f"other face bignesses {[cls.bigness[g] for g in sorted(others)]}",
            )

    # danger-A / danger-B: >=4-face counts around dangerous multigons on
    # >=5-big faces.
    for m in multigons:
        if m.id not in cls.dangerous_multigons:
            continue
        for f in sorted(outer(m)):
            if cls.bigness[f] < 5:
                continue
            away = {
                g
                for _e, g in cls.face_face_adj[f]
                if deg[g] >= 4
                and not cls.f_incident(f, ("face", g), ("multigon", m.id))
            }
            emit(
                "danger-A",
                [("face", f), ("multigon", m.id)],
                len(away) >= 4,
                f"{len(away)} non-incident >=4-faces",
            )
            if any(
                order_of(x) == 2 for x in cls.f_incident_multigons(f, m.id)
            ):
                emit(
                    "danger-B",
                    [("face", f), ("multigon", m.id)],
                    len(away) >= 5,
                    f"{len(away)} non-incident >=4-faces",
                )

    order = {lid: i for i, lid in enumerate(LEMMA_IDS)}
    matches.sort(key=lambda m: (order[m.lemma], m.elements))
    return CatalogResult(tuple(matches), tuple(skipped))


# -- swap spec derivation -----------------------------------------------------


def _boundary_orientations(graph: PlaneMultigraph, face: Face):
    """All rotations and reflections of (vertex cycle, edge cycle)."""
    verts = _face_vertex_cycle(graph, face)
    eids = [graph.dart_edge(d) for d in face.darts]
    n = len(verts)
    seen = set()
    for r in range(n):
        vs = verts[r:] + verts[:r]
        es = eids[r:] + eids[:r]
        for flip in (False, True):
            if flip:
                vs2 = [vs[0]] + vs[1:][::-1]
                es2 = es[::-1]
            else:
                vs2, es2 = vs, es
            key = (tuple(vs2), tuple(es2))
            if key in seen:
                continue
            seen.add(key)
            yield list(vs2), list(es2)


def swap_specs_from_face(graph: PlaneMultigraph, face_id: int) -> list[SwapSpec]:
    """All eligible boundary swaps of a 4-, 6- or 8-face.

    Each orientation of the boundary cycle removes every second boundary
    edge and inserts the complementary matching, all drawn inside the face.
    """
    face = graph.faces()[face_id]
    k = face.degree
    if k not in SUPPORTED_K:
        return []
    specs = []
    for verts, eids in _boundary_orientations(graph, face):
        if len(set(verts)) != k:
            continue
        removed = tuple(eids[2 * i + 1] for i in range(k // 2))
        spec = SwapSpec(tuple(verts), removed, tuple([face_id] * (k // 2)))
        if validate_swap(graph, spec) is None:
            specs.append(spec)
    return specs


def _require(cond, msg):
    if not cond:
        raise ReductionError(f"cannot derive swap: {msg}")


def _face_neighbor_via(graph, cls, face_id, vertex, not_edge):
    """The neighbour of ``vertex`` along ``face_id`` via an edge != not_edge."""
    face = graph.faces()[face_id]
    for d in face.darts:
        e = graph.dart_edge(d)
        if e == not_edge:
            continue
        u, v = graph.edge_endpoints(e)
        if vertex in (u, v):
            return (v if u == vertex else u), e
    raise ReductionError(
        f"face {face_id} has no second edge at vertex {vertex}"
    )


def derive_swap_spec(graph: PlaneMultigraph, match: ConfigMatch) -> SwapSpec:
    """Build the proof's swap for a catalog match of a swap-based lemma."""
    if match.lemma not in LIFTABLE_LEMMAS or match.lemma == "odd-cut":
        raise ReductionError(f"no swap associated with lemma {match.lemma!r}")
    cls = classify(graph)
    faces = graph.faces()
    multigons = graph.multigons()
    elems = dict()
    for kind, ident in match.elements:
        elems.setdefault(kind, []).append(ident)

    def face_orient(face_id, pred):
        for verts, eids in _boundary_orientations(graph, faces[face_id]):
            if len(set(verts)) == len(verts) and pred(verts, eids):
                return verts, eids
        raise ReductionError(
            f"no boundary orientation of face {face_id} fits lemma {match.lemma}"
        )

    def in_multigon(e, mid):
        return e in multigons[mid].edge_ids

    if match.lemma in ("3-face-trigon", "3-face-1-bigon"):
        f3 = elems["face"][0]
        mid = elems["multigon"][0]
        verts, eids = face_orient(
            f3, lambda vs, es: in_multigon(es[0], mid)
        )
        v1, v2, v3 = verts
        e_23, e_31 = eids[1], eids[2]
        fpp = next(g for e, g in cls.face_face_adj[f3] if e == e_31)
        v4, e_14 = _face_neighbor_via(graph, cls, fpp, v1, e_31)
        _require(v4 not in (v1, v2, v3), "fourth vertex coincides")
        return SwapSpec((v1, v2, v3, v4), (e_23, e_14), (f3, fpp))

    if match.lemma == "3-face-23-bigon":
        f3 = elems["face"][0]
        bigons = elems["multigon"][:2]
        shared = set(multigons[bigons[0]].endpoints) & set(
            multigons[bigons[1]].endpoints
        )
        _require(len(shared) == 1, "bigons do not share one vertex")
        v1 = shared.pop()
        verts, eids = face_orient(
            f3,
            lambda vs, es: vs[0] == v1
            and any(in_multigon(es[0], b) for b in bigons)
            and any(in_multigon(es[2], b) for b in bigons),
        )
        v1, v2, v3 = verts
        e_23 = eids[1]
        e_31 = eids[2]
        b13 = next(b for b in bigons if in_multigon(e_31, b))
        far = _outer_faces(graph, multigons[b13]) - {f3}
        _require(len(far) == 1, "bigon has no single far face")
        fpp = far.pop()
        v4, e_14 = _face_neighbor_via(graph, cls, fpp, v1, e_31)
        _require(v4 not in (v1, v2, v3), "fourth vertex coincides")
        return SwapSpec((v1, v2, v3, v4), (e_23, e_14), (f3, fpp))

    if match.lemma == "4-face-trigon":
        f4 = elems["face"][0]
        mid = elems["multigon"][0]
        verts, eids = face_orient(f4, lambda vs, es: in_multigon(es[0], mid))
        return SwapSpec(tuple(verts), (eids[1], eids[3]), (f4, f4))

    if match.lemma == "4-face-3-bigon":
        f4 = elems["face"][0]
        bigons = set(elems["multigon"])
        verts, eids = face_orient(
            f4,
            lambda vs, es: all(
                any(in_multigon(es[i], b) for b in bigons) for i in (0, 1, 2)
            ),
        )
        return SwapSpec(tuple(verts), (eids[1], eids[3]), (f4, f4))

    if match.lemma in ("6-face-23", "6-face-32"):
        f6 = elems["face"][0]
        ms = set(elems["multigon"])
        if match.lemma == "6-face-23":
            pred = lambda vs, es: (
                all(
                    graph.multigon_of_edge(es[i]) is not None
                    and graph.multigon_of_edge(es[i]).order == 3
                    for i in (0, 2, 4)
                )
                and graph.multigon_of_edge(es[1]) is not None
            )
        else:
            pred = lambda vs, es: (
                all(
                    graph.multigon_of_edge(es[i]) is not None
                    for i in (0, 1, 2, 3, 4)
                )
                and graph.multigon_of_edge(es[5]) is None
            )
        verts, eids = face_orient(f6, pred)
        return SwapSpec(
            tuple(verts), (eids[1], eids[3], eids[5]), (f6, f6, f6)
        )

    if match.lemma == "8-face":
        f8 = elems["face"][0]
        verts, eids = face_orient(
            f8,
            lambda vs, es: all(
                graph.multigon_of_edge(es[i]) is not None
                and graph.multigon_of_edge(es[i]).order == 3
                for i in (0, 2, 4, 6)
            ),
        )
        return SwapSpec(
            tuple(verts),
            (eids[1], eids[3], eids[5], eids[7]),
            (f8, f8, f8, f8),
        )

    if match.lemma == "35-face-bigon-trigon":
        v1 = elems["vertex"][0]
        f3, f5 = elems["face"]
        t_id, b_id = elems["multigon"]
        t = multigons[t_id]
        v2 = next(v for v in t.endpoints if v != v1)
        verts5, eids5 = face_orient(
            f5, lambda vs, es: vs[0] == v1 and vs[1] == v2 and in_multigon(es[0], t_id)
        )
        _v1, _v2, v3, v4, v5 = verts5
        v6 = next(v for v in multigons[b_id].endpoints if v != v1)
        trig34 = any(
            m.order == 3 and set(m.endpoints) == {v3, v4} for m in multigons
        )
        e_45 = eids5[3]
        e_23 = eids5[1]
        e_34 = eids5[2]
        e_61 = min(multigons[b_id].edge_ids)
        if trig34:
            # curve v1 v2 v3 v4 v5 v6: remove v2v3, v4v5, v6v1
            return SwapSpec(
                (v1, v2, v3, v4, v5, v6),
                (e_23, e_45, e_61),
                (f5, f5, f3),
            )
        # curve v2 v3 v4 v5 v6 v1: remove v3v4, v5v6, v1v2
        f3_face = faces[f3]
        e_56 = next(
            graph.dart_edge(d)
            for d in f3_face.darts
            if set(graph.edge_endpoints(graph.dart_edge(d))) == {v5, v6}
        )
        e_12 = min(t.edge_ids)
        return SwapSpec(
            (v2, v3, v4, v5, v6, v1),
            (e_34, e_56, e_12),
            (f5, f5, f3),
        )

    raise ReductionError(f"no derivation for lemma {match.lemma!r}")


# -- lifting ------------------------------------------------------------------


@dataclass(frozen=True)
class LiftOutcome:
    status: str  # "coloring" or "forced-pattern"
    coloring: dict[int, int] | None
    report: str | None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "coloring": (
                {str(e): color_name(c) for e, c in sorted(self.coloring.items())}
                if self.coloring
                else None
            ),
            "report": self.report,
        }


def lift_coloring(
    graph: PlaneMultigraph,
    match: ConfigMatch,
    reduced: PlaneMultigraph | None = None,
    reduced_coloring: dict[int, int] | None = None,
    spec: SwapSpec | None = None,
    seed: int = 0,
) -> LiftOutcome:
    """Turn a coloring of the reduced graph into one of the original.

    For the odd-cut lemma the reduction is the cut split (both parts are
    colored here if not supplied); for swap lemmas a color shared by every
    inserted-edge bundle is moved onto the removed edges.  A missing shared
    color reproduces the proof's forced-pattern branch instead of failing.
    """
    if match.lemma not in LIFTABLE_LEMMAS:
        raise ReductionError(
            f"checker-only lemma {match.lemma!r} (mate-based existence argument)"
        )

    if match.lemma == "odd-cut":
        side = frozenset(next(i for k, i in match.elements if k == "side"))
        cut = cuts_mod.cut_size(graph, side)
        split = cuts_mod.split_along_cut(graph, cut)
        col_a = find_six_edge_coloring(split.part_a, seed=seed).coloring
        col_b = find_six_edge_coloring(split.part_b, seed=seed).coloring
        if col_a is None or col_b is None:
            raise ReductionError("could not color a split part")
        combined = cuts_mod.combine_colorings(split, col_a, col_b)
        reason = verify_coloring(graph, combined)
        if reason is not None:
            raise ReductionError(f"combined coloring invalid: {reason}")
        return LiftOutcome("coloring", combined, None)

    if spec is None:
        spec = derive_swap_spec(graph, match)
    if reduced is None:
        reduced, _new = apply_swap_with_map(graph, spec)
    if reduced_coloring is None:
        res = find_six_edge_coloring(reduced, seed=seed)
        if res.coloring is None:
            raise ReductionError("could not color the swapped graph")
        reduced_coloring = res.coloring
    reason = verify_coloring(reduced, reduced_coloring)
    if reason is not None:
        raise ReductionError(f"reduced coloring invalid: {reason}")

    def bundle(g: PlaneMultigraph, pair: tuple[int, int]) -> list[int]:
        want = set(pair)
        return sorted(
            e for e in g.edges if set(g.edge_endpoints(e)) == want
        )

    pairs = spec.new_pairs()
    bundles = [bundle(reduced, p) for p in pairs]
    color_sets = [
        {reduced_coloring[e] for e in bs} for bs in bundles
    ]
    common = set.intersection(*color_sets)
    if not common:
        return LiftOutcome(
            "forced-pattern",
            None,
            "no color shared by all inserted-edge bundles: "
            + "; ".join(
                f"{p[0]}-{p[1]}: "
                + ",".join(sorted(color_name(c) for c in cs))
                for p, cs in zip(pairs, color_sets)
            ),
        )
    c = min(common)
    lifted: dict[int, int] = {}
    in_bundles = set()
    for pair, bs in zip(pairs, bundles):
        in_bundles.update(bs)
        drop = min(e for e in bs if reduced_coloring[e] == c)
        remaining = [reduced_coloring[e] for e in bs if e != drop]
        g_bundle = bundle(graph, pair)
        if len(g_bundle) != len(remaining):
            raise ReductionError(
                f"bundle between {pair} has unexpected size in the original"
            )
        for e, col in zip(g_bundle, remaining):
            lifted[e] = col
    for e in graph.edges:
        if e in lifted:
            continue
        if e in spec.removed_edges:
            lifted[e] = c
        else:
            lifted[e] = reduced_coloring[e]
    reason = verify_coloring(graph, lifted)
    if reason is not None:
        raise ReductionError(f"lifted coloring invalid: {reason}")
    return LiftOutcome("coloring", lifted, None)
