"""Named instance generators and the exhaustive coloring oracle.

The corpus is built from two families: doubled bridgeless cubic plane
graphs (every vertex degree 6, every original 3-cut becomes an odd 6-cut)
and the tripled 4-cycle.  The hexabond is the degenerate 2-vertex graph
with six parallel edges.
"""

from __future__ import annotations

import networkx as nx

from .plane_graph import GraphError, PlaneMultigraph

ORACLE_EDGE_CAP = 14


def hexabond() -> PlaneMultigraph:
    """Two vertices joined by six parallel edges."""
    # Darts 2e at vertex 0, 2e+1 at vertex 1; nesting order reversed at 1.
    rot0 = [2 * e for e in range(6)]
    rot1 = [2 * e + 1 for e in reversed(range(6))]
    edges = {e: (2 * e, 2 * e + 1) for e in range(6)}
    return PlaneMultigraph([rot0, rot1], edges)


def _from_planar_embedding(g: nx.Graph) -> PlaneMultigraph:
    """Rotation system for a simple planar graph via its planar embedding."""
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise GraphError("base graph is not planar")
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    edge_ids: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(sorted((min(index[a], index[b]), max(index[a], index[b]))
                                      for a, b in g.edges())):
        edge_ids[(u, v)] = e
    edges = {e: (2 * e, 2 * e + 1) for e in edge_ids.values()}
    rotations: list[list[int]] = []
    for v in nodes:
        rot = []
        for w in emb.neighbors_cw_order(v):
            u, x = index[v], index[w]
            e = edge_ids[(min(u, x), max(u, x))]
            a, b = edges[e]
            rot.append(a if u < x else b)
        rotations.append(rot)
    return PlaneMultigraph(rotations, edges)


def multiply_edges(graph: PlaneMultigraph, k: int) -> PlaneMultigraph:
    """Replace every edge by a bundle of k parallel copies.

    Copies are inserted adjacent to the original in both rotations, so every
    original face keeps its degree and each copy adds one bigon.
    """
    if k < 1:
        raise ValueError("k must be positive")
    edges = dict(graph.edges)
    next_edge = max(edges) + 1
    next_dart = max(d for pair in edges.values() for d in pair) + 1
    inserts_before: dict[int, list[int]] = {}
    inserts_after: dict[int, list[int]] = {}
    for e in sorted(graph.edges):
        a, b = graph.edges[e]
        for _ in range(k - 1):
            ca, cb = next_dart, next_dart + 1
            next_dart += 2
            edges[next_edge] = (ca, cb)
            next_edge += 1
            # Copy dart before the original at the tail, after it at the head.
            inserts_before.setdefault(a, []).append(ca)
            inserts_after.setdefault(b, []).append(cb)
    rotations = []
    for rot in graph.rotations:
        new_rot: list[int] = []
        for d in rot:
            new_rot.extend(inserts_before.get(d, []))
            new_rot.append(d)
            new_rot.extend(reversed(inserts_after.get(d, [])))
        rotations.append(new_rot)
    terminals = None
    if graph.terminals != frozenset(range(graph.n)):
        terminals = graph.terminals
    return PlaneMultigraph(rotations, edges, terminals)


def doubled(base: nx.Graph) -> PlaneMultigraph:
    return multiply_edges(_from_planar_embedding(base), 2)


def dk4() -> PlaneMultigraph:
    return doubled(nx.complete_graph(4))


def c4x3() -> PlaneMultigraph:
    return multiply_edges(_from_planar_embedding(nx.cycle_graph(4)), 3)


def dq3() -> PlaneMultigraph:
    return doubled(nx.hypercube_graph(3))


def doubled_prism(n: int) -> PlaneMultigraph:
    if n < 3:
        raise ValueError("prism size must be at least 3")
    return doubled(nx.circular_ladder_graph(n))


def doubled_dodecahedron() -> PlaneMultigraph:
    return doubled(nx.dodecahedral_graph())


GENERATORS = {
    "hexabond": lambda params: hexabond(),
    "dk4": lambda params: dk4(),
    "c4x3": lambda params: c4x3(),
    "dq3": lambda params: dq3(),
    "doubled-prism": lambda params: doubled_prism(int(params[0]) if params else 3),
    "doubled-dodecahedron": lambda params: doubled_dodecahedron(),
}


def generate(name: str, params: list | None = None) -> PlaneMultigraph:
    if name not in GENERATORS:
        raise ValueError(f"unknown generator {name!r}")
    try:
        return GENERATORS[name](params or [])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad parameters for generator {name!r}: {exc}") from exc


def named_corpus(prisms: tuple[int, ...] = (3, 4, 5, 6)) -> dict[str, PlaneMultigraph]:
    corpus = {
        "hexabond": hexabond(),
        "dk4": dk4(),
        "c4x3": c4x3(),
        "dq3": dq3(),
        "doubled-dodecahedron": doubled_dodecahedron(),
    }
    for n in prisms:
        corpus[f"doubled-prism({n})"] = doubled_prism(n)
    return corpus


def oracle_coloring(graph: PlaneMultigraph) -> dict[int, int] | None:
    """Exhaustive 6-edge-coloring by plain backtracking in edge-id order.

    Definitive on graphs with at most ORACLE_EDGE_CAP edges; kept free of
    heuristics so it can validate the main solver.
    """
    if len(graph.edges) > ORACLE_EDGE_CAP:
        raise ValueError(
            f"oracle cap is {ORACLE_EDGE_CAP} edges, got {len(graph.edges)}"
        )
    order = graph.edge_ids()
    used: list[set[int]] = [set() for _ in range(graph.n)]
    assignment: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = graph.edge_endpoints(e)
        for c in range(6):
            if c in used[u] or c in used[v]:
                continue
            used[u].add(c)
            used[v].add(c)
            assignment[e] = c
            if rec(i + 1):
                return True
            used[u].discard(c)
            used[v].discard(c)
            del assignment[e]
        return False

    return dict(assignment) if rec(0) else None
