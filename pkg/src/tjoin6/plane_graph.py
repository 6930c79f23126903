"""Dart-based plane multigraph representation.

A plane multigraph is stored as a rotation system: every edge contributes two
darts (half-edges), and every vertex carries a counterclockwise cyclic order
of the darts leaving it.  Faces are orbits of the next-dart map
``next(d) = rotation successor of reverse(d) at the head vertex of d``;
the Euler check V - E + F = 2 validates that the rotation system really
describes a sphere embedding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Malformed or non-planar input graph."""


class DegenerateMultigonError(GraphError):
    """Operation requires linear multigons but a cyclic bundle is present."""


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Multigon:
    """A maximal bundle of parallel edges chained through bigon faces."""

    id: int
    endpoints: tuple[int, int]
    edge_ids: tuple[int, ...]
    bigon_face_ids: tuple[int, ...]
    cyclic: bool = False

    @property
    def order(self) -> int:
        return len(self.edge_ids)


class PlaneMultigraph:
    """Immutable plane multigraph with vertex rotations and an edge table.

    ``rotations[v]`` lists the darts at vertex ``v`` in counterclockwise
    order.  ``edges`` maps an edge id to its two darts; the dart listed
    first is the "tail" dart.  ``terminals`` is the even vertex subset T,
    defaulting to all vertices.
    """

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        edges: Mapping[int, tuple[int, int]],
        terminals: Iterable[int] | None = None,
    ):
        self.n = len(rotations)
        self.rotations = tuple(tuple(r) for r in rotations)
        self.edges = {int(e): (int(a), int(b)) for e, (a, b) in edges.items()}
        if terminals is None:
            self.terminals = frozenset(range(self.n))
        else:
            self.terminals = frozenset(int(t) for t in terminals)
        self._dart_vertex: dict[int, int] = {}
        self._dart_edge: dict[int, int] = {}
        self._reverse: dict[int, int] = {}
        self._rot_index: dict[int, int] = {}
        self._faces: tuple[Face, ...] | None = None
        self._face_of_dart: dict[int, int] | None = None
        self._multigons: tuple[Multigon, ...] | None = None
        self._validate()

    # -- construction checks -------------------------------------------------

    def _validate(self) -> None:
        if self.n < 2:
            raise GraphError("graph needs at least two vertices")
        for v, rot in enumerate(self.rotations):
            for i, d in enumerate(rot):
                if d in self._dart_vertex:
                    raise GraphError(f"duplicate dart {d} in rotations")
                self._dart_vertex[d] = v
                self._rot_index[d] = i
        for e, (a, b) in self.edges.items():
            if a == b:
                raise GraphError(f"edge {e} lists the same dart twice")
            for d in (a, b):
                if d in self._dart_edge:
                    raise GraphError(f"dart {d} owned by two edges")
                if d not in self._dart_vertex:
                    raise GraphError(f"dangling dart {d} on edge {e}")
                self._dart_edge[d] = e
            if self._dart_vertex[a] == self._dart_vertex[b]:
                raise GraphError(f"edge {e} is a loop")
            self._reverse[a] = b
            self._reverse[b] = a
        for d in self._dart_vertex:
            if d not in self._dart_edge:
                raise GraphError(f"dart {d} in a rotation belongs to no edge")
        if len(self.terminals) % 2 != 0:
            raise GraphError("terminal set T has odd size")
        for t in self.terminals:
            if not 0 <= t < self.n:
                raise GraphError(f"terminal {t} is not a vertex")
        self._check_connected()
        f = len(self.faces())
        if self.n - len(self.edges) + f != 2:
            raise GraphError(
                f"Euler check failed: V={self.n} E={len(self.edges)} F={f}"
            )

    def _check_connected(self) -> None:
        if not self.edges:
            raise GraphError("graph has no edges")
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self.rotations[v]:
                w = self._dart_vertex[self._reverse[d]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise GraphError("graph is disconnected")

    # -- basic queries --------------------------------------------------------

    def reverse(self, dart: int) -> int:
        return self._reverse[dart]

    def dart_vertex(self, dart: int) -> int:
        return self._dart_vertex[dart]

    def dart_edge(self, dart: int) -> int:
        return self._dart_edge[dart]

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        a, b = self.edges[edge]
        return self._dart_vertex[a], self._dart_vertex[b]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def is_regular(self, d: int = 6) -> bool:
        return all(len(r) == d for r in self.rotations)

    def edge_ids(self) -> list[int]:
        return sorted(self.edges)

    def incident_edges(self, v: int) -> list[int]:
        return [self._dart_edge[d] for d in self.rotations[v]]

    def neighbors(self, v: int) -> list[int]:
        """Neighbor per incident edge, with multiplicity, in rotation order."""
        return [self._dart_vertex[self._reverse[d]] for d in self.rotations[v]]

    def next_dart(self, d: int) -> int:
        """Face successor: rotation successor of reverse(d) at the head of d."""
        r = self._reverse[d]
        v = self._dart_vertex[r]
        rot = self.rotations[v]
        return rot[(self._rot_index[r] + 1) % len(rot)]

    # -- faces ----------------------------------------------------------------

    def faces(self) -> tuple[Face, ...]:
        if self._faces is None:
            faces = []
            owner: dict[int, int] = {}
            for start in sorted(self._dart_edge):
                if start in owner:
                    continue
                cycle = [start]
                owner[start] = len(faces)
                d = self.next_dart(start)
                while d != start:
                    owner[d] = len(faces)
                    cycle.append(d)
                    d = self.next_dart(d)
                faces.append(Face(len(faces), tuple(cycle)))
            self._faces = tuple(faces)
            self._face_of_dart = owner
        return self._faces

    def face_of_dart(self, d: int) -> int:
        self.faces()
        assert self._face_of_dart is not None
        return self._face_of_dart[d]

    def edge_faces(self, edge: int) -> tuple[int, int]:
        """The two face ids on either side of an edge."""
        a, b = self.edges[edge]
        return self.face_of_dart(a), self.face_of_dart(b)

    # -- multigons -------------------------------------------------------------

    def multigons(self) -> tuple[Multigon, ...]:
        if self._multigons is None:
            self._multigons = self._find_multigons()
        return self._multigons

    def _find_multigons(self) -> tuple[Multigon, ...]:
        bigon_faces = [f for f in self.faces() if f.degree == 2]
        # Edges linked through a shared bigon face form one bundle.
        link: dict[int, list[tuple[int, int]]] = {}
        for f in bigon_faces:
            e1 = self._dart_edge[f.darts[0]]
            e2 = self._dart_edge[f.darts[1]]
            link.setdefault(e1, []).append((e2, f.id))
            link.setdefault(e2, []).append((e1, f.id))
        seen: set[int] = set()
        out: list[Multigon] = []
        for start in sorted(link):
            if start in seen:
                continue
            comp = self._walk_bundle(start, link)
            seen.update(comp.edge_ids)
            out.append(
                Multigon(
                    len(out),
                    comp.endpoints,
                    comp.edge_ids,
                    comp.bigon_face_ids,
                    comp.cyclic,
                )
            )
        return tuple(out)

    def _walk_bundle(self, start: int, link: dict) -> Multigon:
        # Collect the linked component, then lay it out as a chain or cycle.
        comp = {start}
        stack = [start]
        while stack:
            for e, _f in link[stack.pop()]:
                if e not in comp:
                    comp.add(e)
                    stack.append(e)
        ends = sorted(e for e in comp if len(link[e]) == 1)
        cyclic = not ends
        cur = start if cyclic else ends[0]
        order = [cur]
        faces: list[int] = []
        prev = None
        while True:
            nxts = [(e, f) for e, f in link[cur] if e != prev]
            if not nxts:
                break
            e, f = nxts[0]
            faces.append(f)
            if e == order[0]:
                break
            order.append(e)
            prev, cur = cur, e
        u, v = self.edge_endpoints(order[0])
        if cyclic:
            faces = faces[: len(order)]
        return Multigon(-1, (min(u, v), max(u, v)), tuple(order), tuple(faces), cyclic)

    def has_cyclic_multigon(self) -> bool:
        return any(m.cyclic for m in self.multigons())

    def multigon_of_edge(self, edge: int) -> Multigon | None:
        for m in self.multigons():
            if edge in m.edge_ids:
                return m
        return None

    # -- serialization ---------------------------------------------------------

    def to_text(self) -> str:
        lines = ["planegraph v1", f"vertices {self.n}"]
        for v, rot in enumerate(self.rotations):
            lines.append("rot " + " ".join(str(x) for x in (v, *rot)))
        for e in sorted(self.edges):
            a, b = self.edges[e]
            lines.append(f"edge {e} {a} {b}")
        if self.terminals != frozenset(range(self.n)):
            lines.append("T " + " ".join(str(t) for t in sorted(self.terminals)))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        obj = {
            "format": "planegraph",
            "version": 1,
            "vertices": self.n,
            "rot": [list(r) for r in self.rotations],
            "edges": {str(e): list(self.edges[e]) for e in sorted(self.edges)},
        }
        if self.terminals != frozenset(range(self.n)):
            obj["T"] = sorted(self.terminals)
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"

    def relabeled(self) -> "PlaneMultigraph":
        """Copy with darts renumbered 0..2E-1 and edges 0..E-1."""
        dart_map: dict[int, int] = {}
        edge_map: dict[int, int] = {}
        for i, e in enumerate(sorted(self.edges)):
            edge_map[e] = i
            a, b = self.edges[e]
            dart_map[a] = 2 * i
            dart_map[b] = 2 * i + 1
        rotations = [[dart_map[d] for d in rot] for rot in self.rotations]
        edges = {edge_map[e]: (dart_map[a], dart_map[b]) for e, (a, b) in self.edges.items()}
        terminals = None if self.terminals == frozenset(range(self.n)) else self.terminals
        return PlaneMultigraph(rotations, edges, terminals)


def parse_plane_graph(text: str) -> PlaneMultigraph:
    """Parse the v1 text format or its JSON mirror."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "planegraph v1":
        raise GraphError("missing 'planegraph v1' header")
    if len(lines) < 2 or not lines[1].startswith("vertices "):
        raise GraphError("missing 'vertices' line")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError) as exc:
        raise GraphError("bad vertex count") from exc
    rotations: dict[int, list[int]] = {}
    edges: dict[int, tuple[int, int]] = {}
    terminals: list[int] | None = None
    for ln in lines[2:]:
        parts = ln.split()
        try:
            if parts[0] == "rot":
                v = int(parts[1])
                if v in rotations:
                    raise GraphError(f"duplicate rotation for vertex {v}")
                rotations[v] = [int(x) for x in parts[2:]]
            elif parts[0] == "edge":
                e = int(parts[1])
                if e in edges:
                    raise GraphError(f"duplicate edge id {e}")
                edges[e] = (int(parts[2]), int(parts[3]))
            elif parts[0] == "T":
                terminals = [int(x) for x in parts[1:]]
            else:
                raise GraphError(f"unknown line: {ln!r}")
        except (IndexError, ValueError) as exc:
            raise GraphError(f"malformed line: {ln!r}") from exc
    if sorted(rotations) != list(range(n)):
        raise GraphError("rotation lines do not cover vertices 0..n-1")
    return PlaneMultigraph([rotations[v] for v in range(n)], edges, terminals)


def _parse_json(text: str) -> PlaneMultigraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"bad JSON: {exc}") from exc
    if obj.get("format") != "planegraph" or obj.get("version") != 1:
        raise GraphError("not a planegraph v1 JSON document")
    try:
        rotations = obj["rot"]
        edges = {int(e): (int(a), int(b)) for e, (a, b) in obj["edges"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError("malformed JSON graph") from exc
    if len(rotations) != obj.get("vertices"):
        raise GraphError("vertex count does not match rotation list")
    return PlaneMultigraph(rotations, edges, obj.get("T"))


# -- face/multigon classification ----------------------------------------------


@dataclass
class FaceClassification:
    graph: PlaneMultigraph
    bigness: dict[int, int]
    dangerous_faces: set[int]
    dangerous_multigons: set[int]
    # face id -> list of (edge id, neighbouring face id), one entry per edge
    face_face_adj: dict[int, list[tuple[int, int]]]
    # face id -> list of (edge id, multigon id) for boundary edges in multigons
    face_multigon_adj: dict[int, list[tuple[int, int]]]
    # face id -> boundary items in cyclic order: ("face", id) or ("multigon", id)
    boundary_items: dict[int, list[tuple[str, int]]]
    multigon_incident_pairs: set[tuple[int, int]] = field(default_factory=set)

    def adjacent_faces(self, f: int) -> set[int]:
        return {g for _e, g in self.face_face_adj[f]}

    def adjacent_multigons(self, f: int) -> set[int]:
        return {m for _e, m in self.face_multigon_adj[f]}

    def adjacent_multigons_of_order(self, f: int, order: int) -> set[int]:
        mg = self.graph.multigons()
        return {m for m in self.adjacent_multigons(f) if mg[m].order == order}

    def is_big(self, f: int, k: int) -> bool:
        return self.bigness[f] >= k

    def f_incident(self, f: int, a: tuple[str, int], b: tuple[str, int]) -> bool:
        """True if objects a and b occupy consecutive boundary edges of f."""
        items = self.boundary_items[f]
        n = len(items)
        for i in range(n):
            pair = {items[i], items[(i + 1) % n]}
            if pair == {a, b}:
                return True
        return False

    def f_incident_multigons(self, f: int, m: int) -> set[int]:
        """Multigons f-incident with multigon m on the boundary of face f."""
        items = self.boundary_items[f]
        n = len(items)
        out = set()
        for i in range(n):
            if items[i] != ("multigon", m):
                continue
            for j in (i - 1, i + 1):
                kind, ident = items[j % n]
                if kind == "multigon" and ident != m:
                    out.add(ident)
        return out


def classify(graph: PlaneMultigraph) -> FaceClassification:
    """Compute bigness, dangerous flags, and adjacency/f-incidence tables."""
    if graph.has_cyclic_multigon():
        raise DegenerateMultigonError(
            "classification requires linear multigons (degenerate cyclic bundle present)"
        )
    faces = graph.faces()
    multigons = graph.multigons()
    edge_multigon: dict[int, int] = {}
    for m in multigons:
        for e in m.edge_ids:
            edge_multigon[e] = m.id

    face_face: dict[int, list[tuple[int, int]]] = {f.id: [] for f in faces}
    face_multi: dict[int, list[tuple[int, int]]] = {f.id: [] for f in faces}
    boundary: dict[int, list[tuple[str, int]]] = {}
    for f in faces:
        items: list[tuple[str, int]] = []
        for d in f.darts:
            e = graph.dart_edge(d)
            other = graph.face_of_dart(graph.reverse(d))
            face_face[f.id].append((e, other))
            if e in edge_multigon:
                m = edge_multigon[e]
                face_multi[f.id].append((e, m))
                items.append(("multigon", m))
            else:
                items.append(("face", other))
        boundary[f.id] = items

    degree = {f.id: f.degree for f in faces}
    bigness = {
        f.id: len({g for _e, g in face_face[f.id] if degree[g] >= 4})
        for f in faces
    }

    cls = FaceClassification(
        graph=graph,
        bigness=bigness,
        dangerous_faces=set(),
        dangerous_multigons=set(),
        face_face_adj=face_face,
        face_multigon_adj=face_multi,
        boundary_items=boundary,
    )

    # Incident multigons share a vertex.
    vert_multigons: dict[int, set[int]] = {}
    for m in multigons:
        for v in m.endpoints:
            vert_multigons.setdefault(v, set()).add(m.id)
    for v, ms in vert_multigons.items():
        for a in ms:
            for b in ms:
                if a < b:
                    cls.multigon_incident_pairs.add((a, b))

    # Dangerous 5- and 7-faces.
    for f in faces:
        trigons = cls.adjacent_multigons_of_order(f.id, 3)
        bigons = cls.adjacent_multigons_of_order(f.id, 2)
        if degree[f.id] == 5:
            if (len(trigons) == 2 and len(bigons) >= 1) or (
                len(trigons) == 1 and len(bigons) >= 3
            ):
                cls.dangerous_faces.add(f.id)
        elif degree[f.id] == 7:
            if len(trigons) == 3 and len(bigons) == 3:
                cls.dangerous_faces.add(f.id)

    # Dangerous multigons.
    face_of_multigon: dict[int, set[int]] = {m.id: set() for m in multigons}
    for f in faces:
        for _e, m in face_multi[f.id]:
            face_of_multigon[m].add(f.id)
    for m in multigons:
        if m.order == 4:
            cls.dangerous_multigons.add(m.id)
        elif m.order == 3:
            for f in face_of_multigon[m.id]:
                if f not in cls.dangerous_faces:
                    continue
                needed = 2 if degree[f] == 7 else 1
                if len(cls.f_incident_multigons(f, m.id)) >= needed:
                    cls.dangerous_multigons.add(m.id)
                    break
    return cls
