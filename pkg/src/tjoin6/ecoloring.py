"""e-colorings, their canonical form at multigons, and mates.

An e-coloring assigns one of the six colors to every edge except a
distinguished edge e, which gets an odd set of three or five colors, so
that every vertex sees every color an odd number of times (e counting once
per color in its set).  ``canonicalize_trigon`` rewrites an e-coloring on a
multigon of order at least three into the shape where e has exactly three
colors and one of them appears on two further edges at each endpoint; each
rewriting move either keeps a valid e-coloring or terminates with a full
proper coloring, which is reported as a distinguished outcome.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import cuts as cuts_mod
from .coloring import COLORS, color_name, verify_coloring
from .plane_graph import PlaneMultigraph

E_SEARCH_EDGE_CAP = 14
MOVE_BOUND = 12


class EColoringError(ValueError):
    pass


class UnhandledStateError(EColoringError):
    """The rewriting engine reached a state outside its documented cases."""


@dataclass(frozen=True)
class EColoring:
    edge: int
    colors: dict[int, int]
    edge_colors: frozenset[int]

    def to_json(self) -> dict:
        return {
            "edge": self.edge,
            "edge_colors": sorted(color_name(c) for c in self.edge_colors),
            "colors": {str(e): color_name(c) for e, c in sorted(self.colors.items())},
        }


def color_counts_at(graph: PlaneMultigraph, ec: EColoring, v: int) -> list[int]:
    """Per-color incidence counts at v; e counts once per color in its set."""
    counts = [0] * 6
    for x in graph.incident_edges(v):
        if x == ec.edge:
            for c in ec.edge_colors:
                counts[c] += 1
        else:
            counts[ec.colors[x]] += 1
    return counts


def verify_e_coloring(graph: PlaneMultigraph, ec: EColoring) -> str | None:
    """None if ec is a valid e-coloring, else a reason."""
    if ec.edge not in graph.edges:
        return f"edge {ec.edge} not in graph"
    if len(ec.edge_colors) not in (3, 5):
        return f"edge {ec.edge} is assigned {len(ec.edge_colors)} colors, need 3 or 5"
    if not ec.edge_colors <= set(COLORS):
        return "unknown color in the edge's color set"
    want = set(graph.edges) - {ec.edge}
    if set(ec.colors) != want:
        return "coloring must cover exactly the edges other than e"
    for c in ec.colors.values():
        if c not in COLORS:
            return f"unknown color {c}"
    for v in range(graph.n):
        counts = color_counts_at(graph, ec, v)
        for c, k in enumerate(counts):
            if k % 2 == 0:
                return f"vertex {v} sees color {color_name(c)} an even number of times"
    return None


@dataclass(frozen=True)
class ESearchResult:
    ecoloring: EColoring | None
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.ecoloring is not None


def find_e_coloring(
    graph: PlaneMultigraph, edge: int, budget: int = 10**6
) -> ESearchResult:
    """Backtracking search for an e-coloring of a 6-regular graph.

    Exhaustive when the graph has at most E_SEARCH_EDGE_CAP edges;
    budget-limited and hence inconclusive on failure above that.
    """
    if edge not in graph.edges:
        raise EColoringError(f"edge {edge} not in graph")
    if not graph.is_regular(6):
        raise EColoringError("graph is not 6-regular")
    exhaustive = len(graph.edges) <= E_SEARCH_EDGE_CAP
    others = [e for e in graph.edge_ids() if e != edge]
    nodes = 0

    for size in (3, 5):
        for eset in itertools.combinations(COLORS, size):
            counts = [[0] * 6 for _ in range(graph.n)]
            rem = [graph.degree(v) for v in range(graph.n)]
            eu, ev = graph.edge_endpoints(edge)
            for v in (eu, ev):
                rem[v] -= 1
                for c in eset:
                    counts[v][c] += 1

            def feasible(v: int) -> bool:
                evens = sum(1 for c in range(6) if counts[v][c] % 2 == 0)
                return evens <= rem[v] and (rem[v] - evens) % 2 == 0

            assignment: dict[int, int] = {}

            def rec(i: int) -> bool:
                nonlocal nodes
                if i == len(others):
                    return True
                nodes += 1
                if not exhaustive and nodes > budget:
                    return False
                x = others[i]
                u, v = graph.edge_endpoints(x)
                for c in range(6):
                    counts[u][c] += 1
                    counts[v][c] += 1
                    rem[u] -= 1
                    rem[v] -= 1
                    if feasible(u) and feasible(v):
                        assignment[x] = c
                        if rec(i + 1):
                            return True
                        del assignment[x]
                    counts[u][c] -= 1
                    counts[v][c] -= 1
                    rem[u] += 1
                    rem[v] += 1
                return False

            if rec(0):
                ec = EColoring(edge, dict(assignment), frozenset(eset))
                reason = verify_e_coloring(graph, ec)
                if reason is not None:
                    raise EColoringError(f"search produced invalid e-coloring: {reason}")
                return ESearchResult(ec, True)
    return ESearchResult(None, exhaustive)


# -- canonical form at multigons ----------------------------------------------


@dataclass(frozen=True)
class CanonicalizeResult:
    status: str  # "canonical" or "proper-coloring"
    ecoloring: EColoring | None
    coloring: dict[int, int] | None
    moves: int


def _tripled_color(graph, ec, v):
    """The unique color seen three times at an endpoint when |colors(e)| = 3."""
    counts = color_counts_at(graph, ec, v)
    tripled = [c for c in range(6) if counts[c] == 3]
    if len(tripled) != 1:
        raise UnhandledStateError(
            f"endpoint {v} has color distribution {counts}, expected one triple"
        )
    return tripled[0]


def is_canonical_shape(graph: PlaneMultigraph, ec: EColoring) -> bool:
    """e has exactly three colors, one of them tripled at both endpoints."""
    if len(ec.edge_colors) != 3:
        return False
    u, v = graph.edge_endpoints(ec.edge)
    cu = color_counts_at(graph, ec, u)
    cv = color_counts_at(graph, ec, v)
    return any(cu[c] == 3 and cv[c] == 3 for c in ec.edge_colors)


def _alternating_trail(graph, colors, start, from_vertex, a, b, skip):
    """Maximal two-color alternating trail; ties broken by smallest edge id.

    Returns (trail edges, end vertex).  The trail starts at ``start`` leaving
    ``from_vertex`` and stops at the first vertex with no unused edge of the
    wanted color.
    """
    used = {start}
    trail = [start]
    cur_edge, cur_v = start, from_vertex
    while True:
        x, y = graph.edge_endpoints(cur_edge)
        cur_v = y if cur_v == x else x
        want = a if colors[cur_edge] == b else b
        cands = [
            z
            for z in graph.incident_edges(cur_v)
            if z != skip and z not in used and colors[z] == want
        ]
        if not cands:
            return trail, cur_v
        nxt = min(cands)
        used.add(nxt)
        trail.append(nxt)
        cur_edge = nxt


def _swap_trail(colors, trail, a, b):
    for x in trail:
        colors[x] = a if colors[x] == b else b


def _exchange_colors(colors, eset, a, b):
    for x, c in colors.items():
        if c == a:
            colors[x] = b
        elif c == b:
            colors[x] = a
    swapped = set(eset)
    if a in swapped or b in swapped:
        swapped ^= {a, b}
    return frozenset(swapped)


def canonicalize_trigon(graph: PlaneMultigraph, ec: EColoring) -> CanonicalizeResult:
    """Rewrite an e-coloring on a multigon of order >= 3 into canonical shape.

    The engine applies a bounded sequence of documented moves (color-set
    reassignments, two-color trail swaps, global color exchanges); every
    intermediate state is re-verified.  A move that completes a full proper
    coloring ends with the distinguished "proper-coloring" status.
    """
    mg = graph.multigon_of_edge(ec.edge)
    if mg is None or mg.order < 3:
        raise EColoringError(
            f"edge {ec.edge} is not in a multigon of order three or more"
        )
    reason = verify_e_coloring(graph, ec)
    if reason is not None:
        raise EColoringError(f"input is not a valid e-coloring: {reason}")

    e = ec.edge
    u, v = graph.edge_endpoints(e)
    mg_others = sorted(x for x in mg.edge_ids if x != e)
    colors = dict(ec.colors)
    eset = ec.edge_colors
    moves = 0

    def checked(state_desc):
        nonlocal moves
        moves += 1
        if moves > MOVE_BOUND:
            raise UnhandledStateError(f"move bound {MOVE_BOUND} exceeded")
        cur = EColoring(e, dict(colors), eset)
        reason = verify_e_coloring(graph, cur)
        if reason is not None:
            raise UnhandledStateError(f"move '{state_desc}' broke validity: {reason}")
        return cur

    def proper(full, desc):
        reason = verify_coloring(graph, full)
        if reason is not None:
            raise UnhandledStateError(f"move '{desc}' claimed properness: {reason}")
        return CanonicalizeResult("proper-coloring", None, full, moves + 1)

    while True:
        state = EColoring(e, dict(colors), eset)
        if is_canonical_shape(graph, state):
            return CanonicalizeResult("canonical", state, None, moves)

        if len(eset) == 5:
            in_set = [m for m in mg_others if colors[m] in eset]
            if in_set:
                # Shrink the set: drop the repeated color and one more, which
                # recolors the parallel edge.
                m = in_set[0]
                x = colors[m]
                y = min(eset - {x})
                colors[m] = y
                eset = frozenset(eset - {x, y})
                checked("five-to-three via repeated color")
                continue
            phi = min(set(COLORS) - eset)
            phis = [m for m in mg_others if colors[m] == phi]
            if len(phis) >= 2:
                keep = sorted(eset)[:3]
                drop = sorted(eset)[3:]
                colors[phis[0]] = drop[0]
                colors[phis[1]] = drop[1]
                eset = frozenset(keep)
                checked("five-to-three via two outside-colored edges")
                continue
            raise UnhandledStateError(
                "five-color set with no reduction available on the multigon"
            )

        t_u = _tripled_color(graph, ec=EColoring(e, colors, eset), v=u)
        t_v = _tripled_color(graph, ec=EColoring(e, colors, eset), v=v)

        if t_u in eset and t_v in eset:
            # Tripled colors differ (equal would be canonical already): walk
            # the two-color trail between the endpoints.
            a, b = t_u, t_v
            e1 = min(
                x for x in graph.incident_edges(v) if x != e and colors[x] == b
            )
            trail, end = _alternating_trail(graph, colors, e1, v, a, b, e)
            if end == u:
                _swap_trail(colors, trail, a, b)
                gamma = min(eset - {a, b})
                full = dict(colors)
                full[e] = gamma
                return proper(full, "cross trail swap")
            if end == v:
                _swap_trail(colors, trail, a, b)
                eset = frozenset(eset)
                checked("closing trail swap at far endpoint")
                continue
            raise UnhandledStateError("two-color trail ended at an interior vertex")

        if (t_u in eset) != (t_v in eset):
            # One endpoint tripled inside the set, the other outside.
            if t_u in eset:
                near, far, alpha, phi = u, v, t_u, t_v
            else:
                near, far, alpha, phi = v, u, t_v, t_u
            starts = sorted(
                x for x in graph.incident_edges(far) if x != e and colors[x] == phi
            )
            done = False
            for start in starts:
                trail, end = _alternating_trail(graph, colors, start, far, alpha, phi, e)
                if end == far and len(trail) > 1:
                    _swap_trail(colors, trail, alpha, phi)
                    checked("trail returning to the outside-tripled endpoint")
                    done = True
                    break
                if end == near and colors[trail[-1]] == alpha:
                    _swap_trail(colors, trail, alpha, phi)
                    eset = frozenset((eset - {alpha}) | {phi})
                    eset = _exchange_colors(colors, eset, alpha, phi)
                    checked("trail crossing to the inside-tripled endpoint")
                    done = True
                    break
            if done:
                continue
            raise UnhandledStateError("no usable trail from the outside-tripled endpoint")

        if t_u == t_v and t_u not in eset:
            phi = t_u
            alpha = min(eset)
            starts = sorted(
                x for x in graph.incident_edges(u) if x != e and colors[x] == phi
            )
            done = False
            for start in starts:
                trail, end = _alternating_trail(graph, colors, start, u, alpha, phi, e)
                if end == v:
                    _swap_trail(colors, trail, alpha, phi)
                    eset = frozenset((eset - {alpha}) | {phi})
                    eset = _exchange_colors(colors, eset, alpha, phi)
                    checked("trail between two outside-tripled endpoints")
                    done = True
                    break
            if done:
                continue
            raise UnhandledStateError("no trail connects the two outside-tripled endpoints")

        raise UnhandledStateError(
            f"endpoints tripled in distinct colors outside the set "
            f"({color_name(t_u)}, {color_name(t_v)})"
        )


# -- mates --------------------------------------------------------------------


@dataclass(frozen=True)
class Mate:
    color: int
    edges: tuple[int, ...]
    side: frozenset[int]
    trivial: bool
    profile: dict[int, int]
    color_count: int
    five_color_set: bool

    def to_json(self) -> dict:
        return {
            "color": color_name(self.color),
            "edges": list(self.edges),
            "side": sorted(self.side),
            "trivial": self.trivial,
            "profile": {color_name(c): e for c, e in sorted(self.profile.items())},
            "color_count": self.color_count,
            "five_color_set": self.five_color_set,
        }


@dataclass(frozen=True)
class MateResult:
    status: str  # "mate", "none-found", or "proper-coloring"
    mate: Mate | None
    coloring: dict[int, int] | None


def _mate_from_side(graph, ec, c, side) -> Mate | None:
    edges = tuple(
        x
        for x in graph.edge_ids()
        if (graph.edge_endpoints(x)[0] in side) != (graph.edge_endpoints(x)[1] in side)
    )
    if ec.edge not in edges:
        return None
    profile: dict[int, int] = {}
    count_c = 0
    for x in edges:
        assigned = ec.edge_colors if x == ec.edge else {ec.colors[x]}
        for cc in assigned:
            if cc == c:
                count_c += 1
            else:
                if cc in profile:
                    return None
                profile[cc] = x
    if set(profile) != set(COLORS) - {c}:
        return None
    trivial = len(side) in (1, graph.n - 1)
    mate = Mate(
        color=c,
        edges=edges,
        side=frozenset(side),
        trivial=trivial,
        profile=profile,
        color_count=count_c,
        five_color_set=len(ec.edge_colors) == 5,
    )
    if not trivial and count_c < 5:
        raise EColoringError(
            f"non-trivial mate with only {count_c} edges of its color"
        )
    return mate


def find_mate(
    graph: PlaneMultigraph,
    ec: EColoring,
    c: int,
    cap: int = cuts_mod.DEFAULT_VERTEX_CAP,
) -> MateResult:
    """Search for a c-mate: an odd cut through e with one edge per other color.

    Trivial cuts (single-vertex sides) are checked first, then all odd
    subsets in lexicographic bitmask order.  The "proper-coloring" status is
    reserved for searches that stumble on a full coloring; the plain
    enumeration never does, but callers can rely on the result contract.
    """
    reason = verify_e_coloring(graph, ec)
    if reason is not None:
        raise EColoringError(f"invalid e-coloring: {reason}")
    if c not in COLORS:
        raise EColoringError(f"unknown color {c}")
    if graph.n > cap:
        raise EColoringError(f"vertex count {graph.n} above enumeration cap {cap}")

    u, v = graph.edge_endpoints(ec.edge)
    for side in (frozenset({u}), frozenset({v})):
        mate = _mate_from_side(graph, ec, c, side)
        if mate is not None:
            return MateResult("mate", mate, None)
    for cut in cuts_mod.odd_cut_sides(graph, cap):
        mate = _mate_from_side(graph, ec, c, cut.side)
        if mate is not None:
            return MateResult("mate", mate, None)
    return MateResult("none-found", None, None)
