"""Exact discharging: initial charges, the eight rules, and the audit.

All charge arithmetic uses integer quarter-units (1 unit = 4 quarter-units),
so conservation and golden totals are exact.  Charged elements are faces of
degree at least three and maximal multigons; bigon faces inside a bundle are
represented by their multigon.  Rules are applied simultaneously from the
static classification, never iteratively.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cuts as cuts_mod
from . import reductions
from .plane_graph import FaceClassification, Multigon, PlaneMultigraph, classify

QUARTERS_PER_UNIT = 4

RULE_AMOUNTS = {
    "RMb": 6,
    "RMd": 2,
    "RT": 4,
    "RB3": 4,
    "RB5": 4,
    "RB": 2,
    "R3": 1,
    "R3t": 2,
}

Element = tuple[str, int]  # ("face", id) or ("multigon", id)


class DischargeError(ValueError):
    pass


def _element_json(el: Element):
    return {"kind": el[0], "id": el[1]}


@dataclass(frozen=True)
class ChargeLedger:
    charges: dict[Element, int]  # quarter-units

    @property
    def total(self) -> int:
        return sum(self.charges.values())

    def to_json(self) -> dict:
        return {
            "charges": [
                {"kind": k, "id": i, "quarter_units": q}
                for (k, i), q in sorted(self.charges.items())
            ],
            "total_quarter_units": self.total,
        }


@dataclass(frozen=True)
class RuleApplication:
    rule: str
    sender: Element
    receiver: Element
    amount: int  # quarter-units

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "sender": _element_json(self.sender),
            "receiver": _element_json(self.receiver),
            "quarter_units": self.amount,
        }


def _charged_faces(graph: PlaneMultigraph):
    return [f for f in graph.faces() if f.degree >= 3]


def initial_charges(graph: PlaneMultigraph) -> ChargeLedger:
    """4(d-3) quarter-units per d-face, -4(m-1) per order-m multigon."""
    classify(graph)  # rejects degenerate cyclic multigons
    charges: dict[Element, int] = {}
    for f in _charged_faces(graph):
        charges[("face", f.id)] = 4 * (f.degree - 3)
    for m in graph.multigons():
        charges[("multigon", m.id)] = -4 * (m.order - 1)
    ledger = ChargeLedger(charges)
    if ledger.total != -24:
        raise DischargeError(
            f"initial total is {ledger.total} quarter-units, expected -24"
        )
    return ledger


def _multigon_incidences(graph: PlaneMultigraph, m: Multigon) -> list[int]:
    """Outer faces of a multigon, one entry per incident boundary edge."""
    out = []
    for e in m.edge_ids:
        for f in graph.edge_faces(e):
            if f not in m.bigon_face_ids:
                out.append(f)
    return sorted(out)


def rule_applications(graph: PlaneMultigraph) -> list[RuleApplication]:
    cls = classify(graph)
    multigons = graph.multigons()
    deg = {f.id: f.degree for f in graph.faces()}
    apps: list[RuleApplication] = []

    def app(rule, sender_face, receiver):
        apps.append(
            RuleApplication(rule, ("face", sender_face), receiver, RULE_AMOUNTS[rule])
        )

    five_face_five_multi = {
        f
        for f in deg
        if deg[f] == 5 and len(cls.adjacent_multigons(f)) == 5
    }

    # RMb / RMd: dangerous multigons, once per (multigon, face) pair.
    mb_md_receivers: set[int] = set()
    for m in multigons:
        if m.id not in cls.dangerous_multigons:
            continue
        outer = sorted(set(_multigon_incidences(graph, m)))
        for f in outer:
            if cls.bigness[f] >= 4:
                app("RMb", f, ("multigon", m.id))
                mb_md_receivers.add(m.id)
        for f in outer:
            if f in cls.dangerous_faces:
                app("RMd", f, ("multigon", m.id))
                mb_md_receivers.add(m.id)

    # RT: remaining trigons, per incidence.
    for m in multigons:
        if m.order != 3 or m.id in mb_md_receivers:
            continue
        for f in _multigon_incidences(graph, m):
            app("RT", f, ("multigon", m.id))

    # RB3 / RB5 / RB: bigons.
    for m in multigons:
        if m.order != 2:
            continue
        incidences = _multigon_incidences(graph, m)
        distinct = sorted(set(incidences))
        senders3 = [
            f
            for f in distinct
            if cls.bigness[f] >= 3
            and any(deg[g] == 3 for g in distinct if g != f)
        ]
        senders5 = [
            f
            for f in distinct
            if cls.bigness[f] >= 4
            and any(g in five_face_five_multi for g in distinct if g != f)
        ]
        if senders3 or senders5:
            for f in senders3:
                app("RB3", f, ("multigon", m.id))
            for f in senders5:
                app("RB5", f, ("multigon", m.id))
        else:
            for f in incidences:
                app("RB", f, ("multigon", m.id))

    # R3 / R3t: receiving 3-faces.
    for f in deg:
        if deg[f] != 3:
            continue
        bigons = cls.adjacent_multigons_of_order(f, 2)
        trigons = cls.adjacent_multigons_of_order(f, 3)
        big_neighbors = sorted(
            {g for _e, g in cls.face_face_adj[f] if cls.bigness[g] >= 3}
        )
        if bigons and len(big_neighbors) >= 2:
            for g in big_neighbors:
                app("R3", g, ("face", f))
        if trigons:
            for g in sorted(
                {g for _e, g in cls.face_face_adj[f] if cls.bigness[g] >= 5}
            ):
                app("R3t", g, ("face", f))
    return apps


def final_charges(
    ledger: ChargeLedger, apps: list[RuleApplication]
) -> ChargeLedger:
    charges = dict(ledger.charges)
    for a in apps:
        if a.sender not in charges:
            raise DischargeError(f"unknown sender {a.sender}")
        if a.receiver not in charges:
            raise DischargeError(f"unknown receiver {a.receiver}")
        charges[a.sender] -= a.amount
        charges[a.receiver] += a.amount
    out = ChargeLedger(charges)
    if out.total != ledger.total:
        raise DischargeError("charge was not conserved")
    return out


def _lemma_family(el: Element, deg: dict[int, int]) -> str:
    if el[0] == "multigon":
        return "final-multigon"
    d = deg[el[1]]
    if d in (3, 4, 5):
        return f"final-{d}-face"
    return "final-big-face"


def _sent_amounts(
    graph: PlaneMultigraph,
    cls: FaceClassification,
    apps: list[RuleApplication],
    face_id: int,
) -> list[int]:
    """Per-boundary-edge amounts sent by a face, in boundary order.

    The element across edge i is the multigon containing it, or the face on
    the other side.  A per-pair rule amount is attributed to the first
    boundary edge meeting its receiver.
    """
    sent: dict[Element, int] = {}
    for a in apps:
        if a.sender == ("face", face_id):
            sent[a.receiver] = sent.get(a.receiver, 0) + a.amount
    remaining = dict(sent)
    amounts = []
    for e, g in cls.face_face_adj[face_id]:
        m = graph.multigon_of_edge(e)
        target: Element = ("multigon", m.id) if m else ("face", g)
        amounts.append(remaining.pop(target, 0))
    return amounts


@dataclass(frozen=True)
class SSumFinding:
    face: int
    start_index: int
    window: int
    total: int
    bound: int

    def to_json(self) -> dict:
        return {
            "face": self.face,
            "start_index": self.start_index,
            "window": self.window,
            "quarter_units": self.total,
            "bound_quarter_units": self.bound,
        }


@dataclass(frozen=True)
class AuditReport:
    initial: ChargeLedger
    final: ChargeLedger
    applications: list[RuleApplication]
    hypothesis_checks: dict[str, str]
    negative_elements: list[dict]
    catalog: reductions.CatalogResult
    s_sum_checks: int
    s_sum_findings: list[SSumFinding]
    verdict: str  # "consistent" or "ANOMALY"

    def to_json(self) -> dict:
        return {
            "initial": self.initial.to_json(),
            "final": self.final.to_json(),
            "applications": [a.to_json() for a in self.applications],
            "hypothesis_checks": self.hypothesis_checks,
            "negative_elements": self.negative_elements,
            "catalog": self.catalog.to_json(),
            "s_sum_checks": self.s_sum_checks,
            "s_sum_findings": [f.to_json() for f in self.s_sum_findings],
            "verdict": self.verdict,
        }


def audit(
    graph: PlaneMultigraph, cap: int = cuts_mod.DEFAULT_VERTEX_CAP
) -> AuditReport:
    """Run the whole discharging pipeline and reconcile it with the catalog.

    A desk instance is not a minimal counterexample, so negative final
    charges are expected; the audit demands that the catalog locates at
    least one violated structural conclusion explaining why.  If no
    violation exists anywhere, the instance would satisfy every structural
    lemma while carrying negative total charge, which the case analysis
    rules out — such an input is flagged as an ANOMALY.
    """
    cls = classify(graph)
    deg = {f.id: f.degree for f in graph.faces()}
    initial = initial_charges(graph)
    apps = rule_applications(graph)
    final = final_charges(initial, apps)

    checks: dict[str, str] = {}
    checks["6-regular"] = "pass" if graph.is_regular(6) else "fail"
    if graph.n <= cap:
        report = cuts_mod.min_odd_cut(graph, cap)
        checks["min-odd-cut>=6"] = (
            "pass" if report.minimum.size >= 6 else f"fail ({report.minimum.size})"
        )
        nt = report.minimum_nontrivial
        if nt is None:
            checks["min-nontrivial-odd-cut>=8"] = "pass (no non-trivial odd cut)"
        else:
            checks["min-nontrivial-odd-cut>=8"] = (
                "pass" if nt.size >= 8 else f"fail ({nt.size})"
            )
    else:
        checks["min-odd-cut>=6"] = "skipped (above enumeration cap)"
        checks["min-nontrivial-odd-cut>=8"] = "skipped (above enumeration cap)"

    catalog = reductions.match_catalog(graph, cap)
    violations = catalog.violations()

    # Annotate negative elements with their lemma family and nearby
    # violations.
    multigons = graph.multigons()

    def neighborhood(el: Element) -> set[Element]:
        out = {el}
        if el[0] == "face":
            f = el[1]
            out.update(("face", g) for g in cls.adjacent_faces(f))
            out.update(("multigon", m) for m in cls.adjacent_multigons(f))
        else:
            m = multigons[el[1]]
            out.update(
                ("face", f) for f in reductions._outer_faces(graph, m)
            )
        return out

    negative = []
    for el, q in sorted(final.charges.items()):
        if q >= 0:
            continue
        near = neighborhood(el)
        related = sorted(
            {
                v.lemma
                for v in violations
                if any(
                    e in near
                    for e in v.elements
                    if e[0] in ("face", "multigon")
                )
            }
        )
        negative.append(
            {
                "element": _element_json(el),
                "quarter_units": q,
                "lemma_family": _lemma_family(el, deg),
                "nearby_violations": related,
            }
        )

    # Premise-guarded s-sum spot checks on >=6-faces.
    s_checks = 0
    findings: list[SSumFinding] = []
    for f in graph.faces():
        if f.degree < 6:
            continue
        s = _sent_amounts(graph, cls, apps, f.id)
        n = len(s)
        for i in range(n):
            s_checks += 1
            total = s[i] + s[(i + 1) % n]
            if total > 8:
                findings.append(SSumFinding(f.id, i, 2, total, 8))
        if cls.bigness[f.id] >= 3:
            for i in range(n):
                s_checks += 1
                total = s[i] + s[(i + 1) % n] + s[(i + 2) % n]
                if total > 14:
                    findings.append(SSumFinding(f.id, i, 3, total, 14))

    verdict = "consistent" if violations else "ANOMALY"
    return AuditReport(
        initial=initial,
        final=final,
        applications=apps,
        hypothesis_checks=checks,
        negative_elements=negative,
        catalog=catalog,
        s_sum_checks=s_checks,
        s_sum_findings=findings,
        verdict=verdict,
    )
