from importlib import resources
from itertools import combinations, product

import pytest
from hypothesis import given, settings

import oracles
from hypercrit.certify import (
    CertificateBundle,
    CertificateParseError,
    check_chromatic_critical,
    check_edge_cert,
    check_vertex_cert,
    emit_bundle,
    generate_bundle,
    parse_bundle,
    verify_bundle,
)
from hypercrit.color import chromatic_number, find_2coloring, find_unique_mono_certificate
from hypercrit.core import Hypergraph, delete_edge, delete_vertex
from hypercrit.corpus import builtin_h9, complete_uniform, fano_plane, single_edge

from strategies import hypergraphs


def shipped_bundle_text():
    return resources.files("hypercrit").joinpath("data", "h9.cert").read_bytes()


def brute_critical(H):
    """Critically 3-chromatic by exhaustive 2-colouring enumeration."""
    def two_col(G):
        return bool(oracles.proper_blue_sets(G.vertices, G.edges))

    if two_col(H) or oracles.chromatic_number(H.vertices, H.edges) != 3:
        return False
    return all(two_col(delete_edge(H, e)) for e in H.edges) and all(
        two_col(delete_vertex(H, v)) for v in H.vertices
    )


def test_check_edge_cert():
    H = builtin_h9()
    assert check_edge_cert(H, (1, 2, 3), (6, 7, 8, 9))
    assert check_edge_cert(H, (5, 7, 9), (1, 2, 6, 8))
    assert not check_edge_cert(H, (1, 2, 3), range(1, 10))
    with pytest.raises(ValueError):
        check_edge_cert(H, (1, 2, 4), ())


def test_check_vertex_cert():
    H = builtin_h9()
    assert check_vertex_cert(H, 1, (2, 3, 4, 5))
    assert check_vertex_cert(H, 9, (1, 2, 6, 8))
    assert not check_vertex_cert(H, 1, ())
    with pytest.raises(ValueError):
        check_vertex_cert(H, 10, ())
    with pytest.raises(ValueError):
        check_vertex_cert(H, 1, (1, 2))


def test_h9_is_critical():
    r = check_chromatic_critical(builtin_h9())
    assert r.verdict and r.chi == 3 and r.min_degree == 7
    assert all(r.edge_critical.values()) and len(r.edge_critical) == 22
    assert all(r.vertex_critical.values()) and len(r.vertex_critical) == 9


def test_fano_is_critical():
    F = fano_plane()
    assert brute_critical(F)
    assert check_chromatic_critical(F).verdict


def test_k5_is_critical():
    K = complete_uniform(5, 3)
    assert brute_critical(K)
    assert check_chromatic_critical(K).verdict


def test_isolated_vertex_fails_verdict():
    K = Hypergraph(6, complete_uniform(5, 3).edges)
    r = check_chromatic_critical(K)
    assert r.chi == 3 and r.isolated == (6,)
    assert not r.verdict
    assert any("isolated" in why for why in r.reasons)


def test_singleton_edge_report():
    r = check_chromatic_critical(Hypergraph(2, [(1,), (1, 2)]))
    assert r.chi is None and not r.verdict


def test_generate_bundle_h9():
    H = builtin_h9()
    b = generate_bundle(H)
    assert len(b.edge_certs) == 22 and len(b.vertex_certs) == 9
    res = verify_bundle(H, b)
    assert res.passed and res.n_passed == 31


def test_generate_bundle_fano():
    F = fano_plane()
    b = generate_bundle(F)
    assert len(b.edge_certs) == 7 and len(b.vertex_certs) == 7
    assert verify_bundle(F, b).passed
    for e, blue in b.edge_certs.items():
        assert tuple(blue) == oracles.lex_least_unique_mono(F.vertices, F.edges, e)


def test_generate_bundle_rejects_colourable():
    with pytest.raises(ValueError):
        generate_bundle(single_edge())


def test_shipped_bundle_verifies():
    b = parse_bundle(shipped_bundle_text())
    res = verify_bundle(builtin_h9(), b)
    assert res.passed and res.n_passed == 31 and res.n_expected == 31


def test_shipped_bundle_roundtrip_is_bit_exact():
    data = shipped_bundle_text()
    assert emit_bundle(parse_bundle(data)) == data
    assert data.startswith(b"E 1 2 3 : 6 7 8 9\n")


def test_missing_entry():
    b = parse_bundle(shipped_bundle_text())
    del b.edge_certs[(5, 7, 9)]
    res = verify_bundle(builtin_h9(), b)
    assert not res.complete and not res.passed
    assert res.missing_edges == ((5, 7, 9),)
    assert res.n_passed == 30 and res.n_expected == 31


def test_bad_vertex_entry():
    H = builtin_h9()
    b = parse_bundle(shipped_bundle_text())
    b.vertex_certs[1] = (2, 3)
    assert oracles.mono_edges(delete_vertex(H, 1).edges, {2, 3})
    res = verify_bundle(H, b)
    failed = [c for c in res.entries if not c.passed]
    assert [(c.kind, c.key) for c in failed] == [("V", 1)]
    assert res.complete and not res.passed


def test_vertex_one_blue_6789_is_a_valid_certificate():
    # both halves {2,3,4,5} and {6,7,8,9} avoid every edge of H - 1
    H = builtin_h9()
    assert oracles.mono_edges(delete_vertex(H, 1).edges, {6, 7, 8, 9}) == []
    assert check_vertex_cert(H, 1, (6, 7, 8, 9))


def test_verify_reports_unknown_edge_as_failure():
    b = CertificateBundle({(1, 2, 4): (3,)}, {})
    res = verify_bundle(builtin_h9(), b)
    assert not res.entries[0].passed


@pytest.mark.parametrize(
    "text",
    ["E 1 2 3 6 7\n", "X 1 : 2\n", "V 1 2 : 3\n", "E 1 2 3 : a\n", "V 1 : 2\nV 1 : 3\n", "E : 1\n"],
)
def test_parse_bundle_errors(text):
    with pytest.raises(CertificateParseError):
        parse_bundle(text)


def test_empty_blue_set_roundtrip():
    b = CertificateBundle({(1, 2, 3): ()}, {1: ()})
    text = emit_bundle(b)
    assert text == b"E 1 2 3 :\nV 1 :\n"
    assert parse_bundle(text) == b


def test_jobs_do_not_change_bundle():
    H = builtin_h9()
    assert generate_bundle(H, jobs=1) == generate_bundle(H, jobs=3)


@settings(max_examples=100)
@given(hypergraphs(max_n=7))
def test_certificate_soundness(H):
    for e in H.edges:
        for blue in [(), tuple(v for v in H.vertices if v % 2)]:
            if check_edge_cert(H, e, blue):
                assert find_2coloring(delete_edge(H, e)) is not None


def test_certificate_completeness_small_3graphs():
    for n in range(3, 6):
        triples = list(combinations(range(1, n + 1), 3))
        for bits in product((0, 1), repeat=len(triples)):
            H = Hypergraph(n, [t for t, x in zip(triples, bits) if x])
            if find_2coloring(H) is not None:
                continue
            for e in H.edges:
                if find_2coloring(delete_edge(H, e)) is not None:
                    assert find_unique_mono_certificate(H, e) is not None


@settings(max_examples=100)
@given(hypergraphs(max_n=6))
def test_verdict_consistency(H):
    r = check_chromatic_critical(H)
    assert r.verdict == brute_critical(H) and not (r.verdict and r.isolated)
    if r.verdict:
        assert chromatic_number(H)[0] == 3
        assert verify_bundle(H, generate_bundle(H, report=r)).passed
