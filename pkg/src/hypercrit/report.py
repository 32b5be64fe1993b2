"""End-to-end criticality report: chromatic and transversal verdicts plus bound checks."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from importlib import resources

from hypercrit.certify import (
    BundleVerification,
    CriticalityReport,
    check_chromatic_critical,
    generate_bundle,
    parse_bundle,
    verify_bundle,
)
from hypercrit.core import Hypergraph, VertexSet, degrees, parse_edge_list
from hypercrit.corpus import builtin_h9
from hypercrit.setpairs import SetPairSystem, bollobas_sum, edge_bound, extract_setpair_system, verify_cross_intersecting
from hypercrit.transversal import TauCriticalVerdict, check_tau_critical

MODES = ("chromatic", "transversal", "full")


def data_text(name: str) -> str:
    return resources.files("hypercrit").joinpath("data", name).read_text(encoding="utf-8")


def seed_check() -> BundleVerification:
    """Verify the shipped certificate file against the shipped edge list and the built-in H9."""
    H = parse_edge_list(data_text("h9.edges"))
    if H != builtin_h9():
        raise RuntimeError("shipped edge list differs from the built-in hypergraph")
    return verify_bundle(H, parse_bundle(data_text("h9.cert")))


@dataclass(frozen=True)
class BoundChecks:
    system: SetPairSystem
    cross_intersecting: bool
    bollobas: Fraction
    edges: int
    bound: int
    support: VertexSet
    support_min_degree: int

    @property
    def edges_ok(self) -> bool:
        return self.edges <= self.bound

    @property
    def degree_ok(self) -> bool:
        return self.support_min_degree <= 6 and len(self.support) >= 5

    @property
    def passed(self) -> bool:
        return self.cross_intersecting and self.bollobas <= 1 and self.edges_ok and self.degree_ok


@dataclass(frozen=True)
class Report:
    mode: str
    hypergraph: Hypergraph
    chromatic: CriticalityReport | None = None
    transversal: TauCriticalVerdict | None = None
    transversal_error: str | None = None
    bounds: BoundChecks | None = None
    seed: BundleVerification | None = None

    @property
    def ok(self) -> bool:
        checks = []
        if self.mode in ("chromatic", "full"):
            checks.append(self.chromatic is not None and self.chromatic.verdict)
        if self.mode in ("transversal", "full"):
            checks.append(self.transversal is not None and self.transversal.is_critical)
            checks.append(self.bounds is not None and self.bounds.passed)
        if self.seed is not None:
            checks.append(self.seed.passed)
        return all(checks)


def _bound_checks(H: Hypergraph, jobs: int) -> BoundChecks:
    S = extract_setpair_system(H, jobs=jobs)
    live = {v: d for v, d in degrees(H).items() if d}
    return BoundChecks(
        system=S,
        cross_intersecting=verify_cross_intersecting(S),
        bollobas=bollobas_sum(S),
        edges=len(H.edges),
        bound=edge_bound(3, 3),
        support=tuple(live),
        support_min_degree=min(live.values(), default=0),
    )


def run_report(H: Hypergraph, mode: str = "full", jobs: int = 1, with_seed_check: bool = False) -> Report:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    out = Report(mode, H)
    if mode in ("chromatic", "full"):
        crit = check_chromatic_critical(H, jobs=jobs)
        if crit.verdict:
            crit = replace(crit, bundle=generate_bundle(H, jobs=jobs, report=crit))
        out = replace(out, chromatic=crit)
    if mode in ("transversal", "full"):
        if not H.is_uniform(3):
            out = replace(out, transversal_error="hypergraph is not 3-uniform")
        else:
            verdict = check_tau_critical(H, 3, 3, jobs=jobs)
            out = replace(out, transversal=verdict)
            if verdict.is_critical:
                out = replace(out, bounds=_bound_checks(H, jobs))
    if with_seed_check:
        out = replace(out, seed=seed_check())
    return out


def _set(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _tsv_set(vs) -> str:
    return " ".join(map(str, vs))


def render_text(rep: Report) -> str:
    H = rep.hypergraph
    lines = [f"hypergraph: n={H.n} vertices={len(H.vertices)} edges={len(H.edges)} mode={rep.mode}"]
    c = rep.chromatic
    if c is not None:
        lines.append("")
        lines.append("[chromatic]")
        lines.append("degrees: " + " ".join(f"{v}:{d}" for v, d in c.degree_map.items()))
        lines.append(f"min degree: {c.min_degree}")
        lines.append(f"chromatic number: {c.chi}")
        ne = sum(c.edge_critical.values())
        nv = sum(c.vertex_critical.values())
        lines.append(f"edge deletions 2-colourable: {ne}/{len(c.edge_critical)}")
        lines.append(f"vertex deletions 2-colourable: {nv}/{len(c.vertex_critical)}")
        if c.isolated:
            lines.append(f"isolated vertices: {_set(c.isolated)}")
        if c.bundle is not None:
            lines.append(f"certificates generated: {len(c.bundle)}")
        lines.append(f"critically 3-chromatic: {'yes' if c.verdict else 'no'}")
        for why in c.reasons:
            lines.append(f"  - {why}")
    if rep.mode in ("transversal", "full"):
        lines.append("")
        lines.append("[transversal]")
        t = rep.transversal
        if t is None:
            lines.append(f"not applicable: {rep.transversal_error}")
        else:
            lines.append(f"tau: {t.tau} witness {_set(t.witness)}")
            for e, d in t.per_edge.items():
                b = _set(d.blocker) if d.blocker is not None else "-"
                lines.append(f"  tau(H-{_set(e)}) = {d.tau_after}  blocker {b}")
            lines.append(f"tau-critical of order 3: {'yes' if t.is_critical else 'no'}")
        b = rep.bounds
        if b is not None:
            lines.append(f"set pairs cross-intersecting: {'yes' if b.cross_intersecting else 'no'}")
            lines.append(f"bollobas sum: {b.bollobas} (<= 1: {'yes' if b.bollobas <= 1 else 'no'})")
            lines.append(f"edges {b.edges} <= bound {b.bound}: {'yes' if b.edges_ok else 'no'}")
            lines.append(
                f"min degree {b.support_min_degree} <= 6 on {len(b.support)} >= 5 vertices: "
                f"{'yes' if b.degree_ok else 'no'}"
            )
    if rep.seed is not None:
        s = rep.seed
        lines.append("")
        lines.append("[seed check]")
        lines.append(f"shipped certificates: {s.n_passed}/{s.n_expected} pass, complete: {'yes' if s.complete else 'no'}")
    lines.append("")
    lines.append("All checks passed." if rep.ok else "Some checks failed.")
    return "\n".join(lines) + "\n"


def render_tsv(rep: Report) -> str:
    H = rep.hypergraph
    rows: list[tuple[str, object]] = [("n", H.n), ("vertices", len(H.vertices)), ("edges", len(H.edges)), ("mode", rep.mode)]
    c = rep.chromatic
    if c is not None:
        rows += [(f"degree.{v}", d) for v, d in c.degree_map.items()]
        rows += [
            ("min_degree", c.min_degree),
            ("chi", c.chi if c.chi is not None else "none"),
            ("edge_deletions_ok", f"{sum(c.edge_critical.values())}/{len(c.edge_critical)}"),
            ("vertex_deletions_ok", f"{sum(c.vertex_critical.values())}/{len(c.vertex_critical)}"),
            ("isolated", _tsv_set(c.isolated)),
            ("chromatic_critical", int(c.verdict)),
        ]
    if rep.mode in ("transversal", "full"):
        t = rep.transversal
        if t is None:
            rows.append(("tau_critical", 0))
            rows.append(("tau_error", rep.transversal_error))
        else:
            rows.append(("tau", t.tau))
            rows.append(("tau_witness", _tsv_set(t.witness)))
            for e, d in t.per_edge.items():
                rows.append((f"tau_after.{'-'.join(map(str, e))}", d.tau_after))
            rows.append(("tau_critical", int(t.is_critical)))
        b = rep.bounds
        if b is not None:
            rows += [
                ("cross_intersecting", int(b.cross_intersecting)),
                ("bollobas_sum", str(b.bollobas)),
                ("edge_bound", b.bound),
                ("edge_bound_ok", int(b.edges_ok)),
                ("support_min_degree", b.support_min_degree),
                ("degree_bound_ok", int(b.degree_ok)),
            ]
    if rep.seed is not None:
        rows += [("seed_passed", rep.seed.n_passed), ("seed_expected", rep.seed.n_expected), ("seed_ok", int(rep.seed.passed))]
    rows.append(("ok", int(rep.ok)))
    return "".join(f"{k}\t{v}\n" for k, v in rows)
