"""Chromatic criticality verdicts and 2-colouring certificate bundles.

Certificate file format, one entry per line::

    E a b c : v1 v2 ... vk      # blue set making edge {a,b,c} uniquely monochromatic
    V v : v1 v2 ... vk          # blue set properly 2-colouring H - v

E-lines come first in lexicographic edge order, then V-lines by vertex.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import partial

from hypercrit._parallel import pmap
from hypercrit.color import (
    chromatic_number,
    find_2coloring,
    find_unique_mono_certificate,
    find_vertex_deletion_coloring,
    monochromatic_edges,
)
from hypercrit.core import (
    Hypergraph,
    VertexSet,
    check_vertex,
    degrees,
    delete_edge,
    delete_vertex,
    isolated_vertices,
)


@dataclass(frozen=True)
class CertificateBundle:
    edge_certs: dict[VertexSet, VertexSet] = field(default_factory=dict)
    vertex_certs: dict[int, VertexSet] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.edge_certs) + len(self.vertex_certs)


@dataclass(frozen=True)
class CriticalityReport:
    chi: int | None
    min_degree: int
    degree_map: dict[int, int]
    edge_critical: dict[VertexSet, bool]
    vertex_critical: dict[int, bool]
    isolated: VertexSet
    verdict: bool
    bundle: CertificateBundle | None = None

    @property
    def reasons(self) -> list[str]:
        out = []
        if self.chi != 3:
            out.append(f"chromatic number is {self.chi}, not 3")
        bad_e = [e for e, ok in self.edge_critical.items() if not ok]
        if bad_e:
            out.append(f"{len(bad_e)} edge deletion(s) stay non-2-colourable")
        if self.isolated:
            out.append(f"isolated vertices {list(self.isolated)} obstruct vertex-minimality")
        bad_v = [v for v, ok in self.vertex_critical.items() if not ok and v not in self.isolated]
        if bad_v:
            out.append(f"vertex deletion(s) {bad_v} stay non-2-colourable")
        return out


@dataclass(frozen=True)
class EntryCheck:
    kind: str  # "E" or "V"
    key: VertexSet | int
    blue: VertexSet
    passed: bool
    reason: str = ""


@dataclass(frozen=True)
class BundleVerification:
    entries: tuple[EntryCheck, ...]
    missing_edges: tuple[VertexSet, ...]
    missing_vertices: tuple[int, ...]

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.entries)

    @property
    def n_expected(self) -> int:
        return len(self.entries) + len(self.missing_edges) + len(self.missing_vertices)

    @property
    def complete(self) -> bool:
        return not self.missing_edges and not self.missing_vertices

    @property
    def passed(self) -> bool:
        return self.complete and all(c.passed for c in self.entries)


def check_edge_cert(H: Hypergraph, e: Iterable[int], blue: Iterable[int]) -> bool:
    e = H.canonical_edge(e)
    return monochromatic_edges(H, blue) == [e]


def check_vertex_cert(H: Hypergraph, v: int, blue: Iterable[int]) -> bool:
    blue = tuple(blue)
    check_vertex(H, v)
    if v in blue:
        raise ValueError(f"blue set for deleted vertex {v} contains it")
    return not monochromatic_edges(delete_vertex(H, v), blue)


def _edge_ok(H: Hypergraph, e: VertexSet) -> bool:
    return find_2coloring(delete_edge(H, e)) is not None


def _vertex_ok(H: Hypergraph, v: int) -> bool:
    return find_2coloring(delete_vertex(H, v)) is not None


def check_chromatic_critical(H: Hypergraph, jobs: int = 1) -> CriticalityReport:
    """Is ``H`` critically 3-chromatic?

    chi(H) = 3 and every single edge deletion and vertex deletion is
    2-colourable. Isolated vertices are listed and make the verdict false.
    """
    degs = degrees(H)
    try:
        chi = chromatic_number(H)[0]
    except ValueError:
        chi = None
    isolated = isolated_vertices(H)
    edge_flags = dict(zip(H.edges, pmap(partial(_edge_ok, H), H.edges, jobs)))
    live = [v for v in H.vertices if v not in isolated]
    vertex_flags = dict(zip(live, pmap(partial(_vertex_ok, H), live, jobs)))
    for v in isolated:
        vertex_flags[v] = False
    vertex_flags = dict(sorted(vertex_flags.items()))
    verdict = chi == 3 and all(edge_flags.values()) and all(vertex_flags.values())
    return CriticalityReport(
        chi=chi,
        min_degree=min(degs.values(), default=0),
        degree_map=degs,
        edge_critical=edge_flags,
        vertex_critical=vertex_flags,
        isolated=isolated,
        verdict=verdict,
    )


def _edge_cert(H: Hypergraph, e: VertexSet) -> VertexSet | None:
    c = find_unique_mono_certificate(H, e)
    return None if c is None else c.blue


def _vertex_cert(H: Hypergraph, v: int) -> VertexSet | None:
    c = find_vertex_deletion_coloring(H, v)
    return None if c is None else c.blue


def generate_bundle(H: Hypergraph, jobs: int = 1, report: CriticalityReport | None = None) -> CertificateBundle:
    """Lex-least certificates for every edge and vertex deletion of a critically 3-chromatic ``H``."""
    if report is None:
        report = check_chromatic_critical(H, jobs=jobs)
    if not report.verdict:
        raise ValueError("hypergraph is not critically 3-chromatic: " + "; ".join(report.reasons))
    edge_certs = dict(zip(H.edges, pmap(partial(_edge_cert, H), H.edges, jobs)))
    vertex_certs = dict(zip(H.vertices, pmap(partial(_vertex_cert, H), H.vertices, jobs)))
    if any(b is None for b in edge_certs.values()) or any(b is None for b in vertex_certs.values()):
        raise RuntimeError("certificate search disagrees with the criticality verdict")
    return CertificateBundle(edge_certs, vertex_certs)


def verify_bundle(H: Hypergraph, b: CertificateBundle) -> BundleVerification:
    entries = []
    for e, blue in sorted(b.edge_certs.items()):
        try:
            ok, why = check_edge_cert(H, e, blue), ""
            if not ok:
                mono = monochromatic_edges(H, blue)
                why = f"monochromatic edges {mono}"
        except ValueError as exc:
            ok, why = False, str(exc)
        entries.append(EntryCheck("E", tuple(e), tuple(blue), ok, why))
    for v, blue in sorted(b.vertex_certs.items()):
        try:
            ok, why = check_vertex_cert(H, v, blue), ""
            if not ok:
                why = f"monochromatic edges {monochromatic_edges(delete_vertex(H, v), blue)}"
        except ValueError as exc:
            ok, why = False, str(exc)
        entries.append(EntryCheck("V", v, tuple(blue), ok, why))
    missing_e = tuple(e for e in H.edges if e not in b.edge_certs)
    missing_v = tuple(v for v in H.vertices if v not in b.vertex_certs)
    return BundleVerification(tuple(entries), missing_e, missing_v)


class CertificateParseError(ValueError):
    pass


def _ints(tokens: list[str], lineno: int) -> VertexSet:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise CertificateParseError(f"line {lineno}: non-integer token") from None
    if any(v < 1 for v in vals):
        raise CertificateParseError(f"line {lineno}: labels must be >= 1")
    if len(set(vals)) != len(vals):
        raise CertificateParseError(f"line {lineno}: repeated label")
    return tuple(sorted(vals))


def parse_bundle(text: bytes | str) -> CertificateBundle:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edge_certs: dict[VertexSet, VertexSet] = {}
    vertex_certs: dict[int, VertexSet] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if ":" not in tokens:
            raise CertificateParseError(f"line {lineno}: missing ':' separator")
        sep = tokens.index(":")
        kind, key, blue = tokens[0], tokens[1:sep], _ints(tokens[sep + 1 :], lineno)
        if kind == "E":
            e = _ints(key, lineno)
            if not e:
                raise CertificateParseError(f"line {lineno}: empty edge")
            if e in edge_certs:
                raise CertificateParseError(f"line {lineno}: duplicate certificate for edge {e}")
            edge_certs[e] = blue
        elif kind == "V":
            if len(key) != 1:
                raise CertificateParseError(f"line {lineno}: vertex entry needs exactly one vertex")
            (v,) = _ints(key, lineno)
            if v in vertex_certs:
                raise CertificateParseError(f"line {lineno}: duplicate certificate for vertex {v}")
            vertex_certs[v] = blue
        else:
            raise CertificateParseError(f"line {lineno}: entry kind must be E or V, got {kind!r}")
    return CertificateBundle(edge_certs, vertex_certs)


def _line(prefix: str, key: Iterable[int], blue: Iterable[int]) -> str:
    return " ".join([prefix, *map(str, key), ":", *map(str, blue)]) + "\n"


def emit_bundle(b: CertificateBundle) -> bytes:
    lines = [_line("E", e, blue) for e, blue in sorted(b.edge_certs.items())]
    lines += [_line("V", (v,), blue) for v, blue in sorted(b.vertex_certs.items())]
    return "".join(lines).encode("utf-8")


__all__ = [
    "BundleVerification",
    "CertificateBundle",
    "CertificateParseError",
    "CriticalityReport",
    "check_chromatic_critical",
    "check_edge_cert",
    "check_vertex_cert",
    "emit_bundle",
    "generate_bundle",
    "parse_bundle",
    "verify_bundle",
]
