"""6-edge-coloring search, Kempe chains, and the T-join packing equivalence.

Colors are the integers 0..5, printed with the greek names used throughout
the project.  The solver is a most-constrained-first backtracker that tries
a Kempe-chain repair before giving up on an edge; on small graphs it falls
back to the exhaustive oracle so that "no coloring" verdicts are definitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import workbench
from .plane_graph import PlaneMultigraph

COLOR_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "phi")
COLORS = tuple(range(6))
DEFAULT_NODE_BUDGET = 10**6


class ColoringError(ValueError):
    pass


def color_name(c: int) -> str:
    return COLOR_NAMES[c]


def color_from_name(name: str) -> int:
    try:
        return COLOR_NAMES.index(name)
    except ValueError as exc:
        raise ColoringError(f"unknown color {name!r}") from exc


def verify_coloring(graph: PlaneMultigraph, col: dict[int, int]) -> str | None:
    """None if ``col`` is a proper total 6-edge-coloring, else a reason."""
    if set(col) != set(graph.edges):
        return "coloring is not total"
    for c in col.values():
        if c not in COLORS:
            return f"unknown color {c}"
    for v in range(graph.n):
        seen = set()
        for e in graph.incident_edges(v):
            if col[e] in seen:
                return f"vertex {v} sees color {color_name(col[e])} twice"
            seen.add(col[e])
    return None


@dataclass(frozen=True)
class Chain:
    """A maximal two-colored path or cycle."""

    edges: tuple[int, ...]
    colors: tuple[int, int]
    is_cycle: bool


def find_chain(
    graph: PlaneMultigraph, col: dict[int, int], start_edge: int, a: int, b: int
) -> Chain:
    if a == b:
        raise ColoringError("chain colors must differ")
    if col[start_edge] not in (a, b):
        raise ColoringError("start edge is colored neither chain color")

    def step(v: int, want: int) -> int | None:
        for e in graph.incident_edges(v):
            if col[e] == want:
                return e
        return None

    u, v = graph.edge_endpoints(start_edge)

    def walk(frm: int, edge: int) -> list[int]:
        out = []
        cur_edge, cur_v = edge, frm
        while True:
            other = cur_edge
            x, y = graph.edge_endpoints(other)
            cur_v = y if cur_v == x else x
            want = a if col[cur_edge] == b else b
            nxt = None
            for e in graph.incident_edges(cur_v):
                if e != cur_edge and col[e] == want:
                    nxt = e
                    break
            if nxt is None or nxt == start_edge:
                if nxt == start_edge:
                    out.append(None)  # sentinel: closed into a cycle
                return out
            out.append(nxt)
            cur_edge = nxt

    right = walk(u, start_edge)
    if right and right[-1] is None:
        return Chain((start_edge, *right[:-1]), (a, b), True)
    left = walk(v, start_edge)
    assert not left or left[-1] is not None
    edges = tuple(reversed(left)) + (start_edge,) + tuple(right)
    return Chain(edges, (a, b), False)


def kempe_swap(
    graph: PlaneMultigraph,
    col: dict[int, int],
    start_edge: int,
    a: int,
    b: int,
) -> tuple[Chain, dict[int, int]]:
    """Swap the two colors along the chain through ``start_edge``."""
    chain = find_chain(graph, col, start_edge, a, b)
    out = dict(col)
    for e in chain.edges:
        out[e] = a if col[e] == b else b
    reason = verify_coloring(graph, out)
    if reason is not None:
        raise ColoringError(f"kempe swap broke the coloring: {reason}")
    return chain, out


@dataclass(frozen=True)
class ColoringResult:
    coloring: dict[int, int] | None
    exhaustive: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.coloring is not None


def find_six_edge_coloring(
    graph: PlaneMultigraph,
    budget: int = DEFAULT_NODE_BUDGET,
    seed: int = 0,
) -> ColoringResult:
    """Search for a 6-edge-coloring.

    Deterministic for a fixed seed and budget.  A ``None`` coloring is
    inconclusive unless ``exhaustive`` is set, which happens when the graph
    is below the oracle cap.
    """
    if not graph.is_regular(6):
        raise ColoringError("graph is not 6-regular")
    import random

    base_order = list(COLORS)
    random.Random(seed).shuffle(base_order)

    used: list[set[int]] = [set() for _ in range(graph.n)]
    assignment: dict[int, int] = {}
    edge_ids = graph.edge_ids()
    nodes = 0

    def available(e: int) -> list[int]:
        u, v = graph.edge_endpoints(e)
        return [c for c in base_order if c not in used[u] and c not in used[v]]

    def try_kempe_repair(e: int) -> dict[int, int] | None:
        # Free color a at u and b at v: swap the ab-chain starting at v's
        # a-edge; if it misses u, color a becomes free at both ends.
        u, v = graph.edge_endpoints(e)
        free_u = [c for c in COLORS if c not in used[u]]
        free_v = [c for c in COLORS if c not in used[v]]
        for a in free_u:
            for b in free_v:
                if a == b:
                    continue
                start = None
                for ee in graph.incident_edges(v):
                    if assignment.get(ee) == a:
                        start = ee
                        break
                if start is None:
                    continue
                # Walk the partial a/b chain from v; if it avoids u, swap it.
                chain = _partial_chain(graph, assignment, start, v, a, b)
                verts = set()
                for ce in chain:
                    verts.update(graph.edge_endpoints(ce))
                if u in verts:
                    continue
                for ce in chain:
                    assignment[ce] = a if assignment[ce] == b else b
                _rebuild_used(graph, assignment, used)
                return {"edge": e, "color": a}
        return None

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == len(edge_ids):
            return True
        if nodes >= budget:
            return False
        # Most-constrained-first among unassigned edges.
        best_e, best_av = None, None
        for e in edge_ids:
            if e in assignment:
                continue
            av = available(e)
            if best_av is None or len(av) < len(best_av):
                best_e, best_av = e, av
                if not av:
                    break
        assert best_e is not None
        if not best_av:
            repair = try_kempe_repair(best_e)
            if repair is None:
                return False
            best_av = [repair["color"]]
        for c in best_av:
            u, v = graph.edge_endpoints(best_e)
            if c in used[u] or c in used[v]:
                continue
            nodes += 1
            assignment[best_e] = c
            used[u].add(c)
            used[v].add(c)
            if rec(i + 1):
                return True
            del assignment[best_e]
            used[u].discard(c)
            used[v].discard(c)
        return False

    found = rec(0)
    if found:
        reason = verify_coloring(graph, assignment)
        if reason is not None:
            raise ColoringError(f"solver produced invalid coloring: {reason}")
        return ColoringResult(dict(assignment), True, nodes)
    if len(graph.edges) <= workbench.ORACLE_EDGE_CAP:
        col = workbench.oracle_coloring(graph)
        return ColoringResult(col, True, nodes)
    return ColoringResult(None, False, nodes)


def _partial_chain(graph, assignment, start, from_v, a, b):
    chain = [start]
    cur_edge, cur_v = start, from_v
    while True:
        x, y = graph.edge_endpoints(cur_edge)
        cur_v = y if cur_v == x else x
        want = a if assignment[cur_edge] == b else b
        nxt = None
        for e in graph.incident_edges(cur_v):
            if e != cur_edge and assignment.get(e) == want:
                nxt = e
                break
        if nxt is None or nxt == start:
            return chain
        chain.append(nxt)
        cur_edge = nxt


def _rebuild_used(graph, assignment, used):
    for v in range(graph.n):
        used[v] = {assignment[e] for e in graph.incident_edges(v) if e in assignment}


# -- T-join packing -----------------------------------------------------------


@dataclass(frozen=True)
class TJoinPacking:
    classes: tuple[frozenset[int], ...]
    terminals: frozenset[int]

    def to_json(self) -> dict:
        return {
            color_name(i): sorted(cls) for i, cls in enumerate(self.classes)
        }


def packing_from_coloring(
    graph: PlaneMultigraph, col: dict[int, int]
) -> TJoinPacking:
    """The six color classes, read as T-joins for T = V(G)."""
    reason = verify_coloring(graph, col)
    if reason is not None:
        raise ColoringError(f"invalid coloring: {reason}")
    classes = tuple(
        frozenset(e for e, c in col.items() if c == i) for i in COLORS
    )
    return TJoinPacking(classes, frozenset(range(graph.n)))


def verify_packing(
    graph: PlaneMultigraph, terminals, packing: TJoinPacking
) -> str | None:
    """None if the packing is six pairwise-disjoint T-joins, else a reason."""
    terminals = frozenset(terminals)
    if len(terminals) % 2 != 0:
        return "terminal set has odd size"
    if len(packing.classes) != 6:
        return "packing must have six classes"
    seen: set[int] = set()
    for i, cls in enumerate(packing.classes):
        if cls & seen:
            shared = sorted(cls & seen)[0]
            return f"not disjoint: edge {shared} in two classes"
        seen |= cls
        deg = [0] * graph.n
        for e in cls:
            u, v = graph.edge_endpoints(e)
            deg[u] += 1
            deg[v] += 1
        for v in range(graph.n):
            if (deg[v] % 2 == 1) != (v in terminals):
                return (
                    f"class {color_name(i)} has wrong degree parity at vertex {v}"
                )
    return None
