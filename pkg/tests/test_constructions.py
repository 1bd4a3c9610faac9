import pytest

from hypercolor.chromatic import strong_chromatic_number
from hypercolor.constructions import (
    ConstructionError,
    construct_complete_embedded,
    construct_F,
    construct_F_prime,
    construct_H,
    construct_H_d,
    construct_sqrt_family,
)
from hypercolor.geometry import verify_embedding
from hypercolor.hypercore import serialize
from hypercolor.momentcurve import certify_order


def _counts(fam):
    return fam.hypergraph.n, len(fam.hypergraph.edges)


def _meta_counts_agree(fam):
    m = fam.meta
    return (m["vertices"], m["edges"]) == _counts(fam) == (m["predicted_vertices"], m["predicted_edges"])


def test_F_small_cases():
    f1 = construct_F(1)
    assert f1.hypergraph.edges == frozenset({("v0", "v1", "w1")})
    f2 = construct_F(2)
    assert _counts(f2) == (5, 4)
    assert f2.hypergraph.edges == frozenset({
        ("v0", "v1", "w1"), ("v0", "v2", "w2"), ("v1", "v2", "w2"), ("v2", "w1", "w2")})


def test_F_prime_small_case():
    fp = construct_F_prime(2)
    assert set(fp.hypergraph.vertices) == {"v0", "v1", "w1", "v0'"}
    assert fp.hypergraph.edges == frozenset({("v0", "v1", "w1"), ("v0'", "v1", "w1"), ("v0", "v0'", "w1")})


@pytest.mark.parametrize("m", range(1, 6))
def test_F_family(m):
    fam = construct_F(m)
    assert _meta_counts_agree(fam)
    assert _counts(fam) == (2 * m + 1, m * m)
    assert certify_order(fam.hypergraph, fam.certificate).valid


@pytest.mark.parametrize("m", range(2, 6))
def test_F_prime_family(m):
    fam = construct_F_prime(m)
    assert _meta_counts_agree(fam)
    assert certify_order(fam.hypergraph, fam.certificate).valid


@pytest.mark.parametrize("m,expected", [(2, (3, 1)), (3, (12, 12)), (4, (76, 144))])
def test_H_family(m, expected):
    fam = construct_H(m)
    assert _counts(fam) == expected
    assert _meta_counts_agree(fam)
    assert certify_order(fam.hypergraph, fam.certificate).valid


def test_H_copies_are_disjoint_intervals():
    fam = construct_H(4)
    pos = fam.certificate.positions
    assert sorted(pos.values()) == list(range(1, 77))
    blocks = {}
    for v, p in pos.items():
        if "/" in v:
            blocks.setdefault(v.split("/")[0], []).append(p)
    spans = sorted((min(ps), max(ps), len(ps)) for ps in blocks.values())
    assert len(spans) == 6
    assert all(hi - lo + 1 == size == 12 for lo, hi, size in spans)
    assert all(a[1] < b[0] for a, b in zip(spans, spans[1:]))
    names = [set(v for v in pos if v.startswith(pre + "/")) for pre in blocks]
    assert sum(map(len, names)) == len(set().union(*names))


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("d", [3, 4, 5])
def test_Hd_family(m, d):
    fam = construct_H_d(m, d)
    assert _meta_counts_agree(fam)
    assert fam.meta["d"] == 2 * d - 3
    assert certify_order(fam.hypergraph, fam.certificate, escalate=fam.meta["escalate_default"]).valid


def test_Hd_counts():
    assert _counts(construct_H_d(3, 4)) == (16, 49)
    assert _counts(construct_H_d(3, 5)) == (21, 246)
    assert _counts(construct_H_d(4, 4)) == (92, 2353)
    two = construct_H_d(2, 6)
    assert _counts(two) == (6, 1)


def test_sqrt_family_small():
    fam = construct_sqrt_family(4)
    assert _counts(fam) == (16, 6)
    assert verify_embedding(fam.hypergraph, fam.certificate).valid
    assert strong_chromatic_number(fam.hypergraph).value >= 4


def test_sqrt_family_five():
    fam = construct_sqrt_family(5)
    assert _meta_counts_agree(fam)
    assert verify_embedding(fam.hypergraph, fam.certificate).valid
    assert strong_chromatic_number(fam.hypergraph).value >= 5


def test_complete_embedded():
    fam = construct_complete_embedded(5, 3)
    assert fam.meta["d"] == 5 and _counts(fam) == (5, 10)
    assert verify_embedding(fam.hypergraph, fam.coordinates).valid
    k32 = construct_complete_embedded(6, 2)
    assert k32.coordinates.points["4"] == (4, 16, 64)
    single = construct_complete_embedded(3, 3)
    assert verify_embedding(single.hypergraph, single.coordinates).valid


@pytest.mark.parametrize("build,args", [
    (construct_F, (0,)), (construct_F_prime, (1,)), (construct_H, (1,)),
    (construct_H_d, (2, 2)), (construct_sqrt_family, (3,)), (construct_complete_embedded, (0, 2)),
])
def test_rejects_bad_parameters(build, args):
    with pytest.raises(ConstructionError):
        build(*args)


def test_deterministic_output():
    for build, args in [(construct_H, (4,)), (construct_H_d, (3, 4)), (construct_F_prime, (4,))]:
        a, b = build(*args), build(*args)
        assert serialize(a.hypergraph) == serialize(b.hypergraph)
        assert a.certificate.to_document() == b.certificate.to_document()
    s1, s2 = construct_sqrt_family(4), construct_sqrt_family(4)
    assert s1.certificate.to_document() == s2.certificate.to_document()
