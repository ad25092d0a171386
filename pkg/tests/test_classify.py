import pytest
from hypothesis import given

from discharge_lab import classify as C
from discharge_lab import fixtures
from discharge_lab.classify import FourKind, PoorClass, structure
from discharge_lab.sketch import Sketch

from conftest import in_class_graphs, plane_graphs


def face_of(name, roles):
    return int(fixtures.resolve(name, "f:" + roles)[1:])


def vid(name, role):
    return fixtures.load(name)[1][role]


def tri_faces(g):
    return [f.id for f in g.faces if f.degree == 3]


# signatures -------------------------------------------------------------------


def test_signature_examples(fx):
    bow = fx("BOWTIE")
    assert {C.face_signature(bow, f) for f in tri_faces(bow)} == {(2, 2, 4)}
    k4 = fx("K4")
    assert {C.face_signature(k4, f) for f in tri_faces(k4)} == {(3, 3, 3)}
    g = fx("L334-POS")
    assert C.face_signature(g, face_of("L334-POS", "u,v,w")) == (3, 3, 4)


def test_signature_rejects_non_triangle(fx):
    g = fx("C7")
    with pytest.raises(C.ClassifyError):
        C.face_signature(g, 0)


@pytest.mark.parametrize(
    "sig,pattern,ok",
    [
        ((3, 4, 5), "(3,4,5+)", True),
        ((3, 4, 4), "(3,4,5+)", False),
        ((3, 3, 4), "(3,3,4-)", True),
        ((3, 4, 6), "(3,4-,5)", False),
        ((2, 4, 5), "(3,4-,5)", False),
        ((3, 3, 5), "(3,4-,5)", True),
        ((4, 4, 9), "(4,4+,5+)", True),
        ((5, 5, 5), "(*,*,5)", True),
    ],
)
def test_pattern_helper(sig, pattern, ok):
    assert C.signature_matches(sig, pattern) is ok


def test_pattern_is_order_free():
    assert C.signature_matches((5, 3, 4), "(3,4,5)")
    assert C.match_roles((5, 3, 4), "(3,4,5+)") == (1, 2, 0)


def test_bad_pattern():
    with pytest.raises(ValueError):
        C.parse_pattern("(3,x,5)")


# bad 3-vertices and pendants --------------------------------------------------


def test_bad3_examples(fx):
    assert C.bad_3vertices(fx("K4")) == frozenset(range(1, 5))
    assert C.bad_3vertices(fx("C7")) == frozenset()
    assert C.bad_3vertices(fx("BOWTIE")) == frozenset()


def test_pendant_examples(fx):
    c7 = fx("C7")
    assert all(C.pendant_incidences(c7, v) == () for v in c7.vertices)
    g, ids = fixtures.load("PENDANT-1")
    abc = face_of("PENDANT-1", "a,b,c")
    (inc,) = C.pendant_incidences(g, ids["v"])
    assert (inc.host, inc.bad, inc.face) == (ids["v"], ids["a"], abc)
    assert C.pendant_faces(g, ids["v"]) == (abc,)


def test_k4_pendant_incidences(fx):
    # each neighbour of v is a bad 3-vertex on the one face avoiding v
    k4 = fx("K4")
    for v in k4.vertices:
        incs = C.pendant_incidences(k4, v)
        assert len(incs) == 3
        assert len(C.pendant_faces(k4, v)) == 1


def _pendant_oracle(g):
    """Straight from the definition, without the Structure caches."""
    out = {v: set() for v in g.vertices}
    for f in g.faces:
        if f.degree != 3:
            continue
        for u in f.boundary:
            if g.degree(u) != 3:
                continue
            for v in g.neighbors(u):
                if v not in f.boundary:
                    out[v].add((u, f.id))
    return out


@given(plane_graphs(n_min=3, n_max=12))
def test_pendant_incidences_match_definition(g):
    want = _pendant_oracle(g)
    for v in g.vertices:
        got = {(i.bad, i.face) for i in C.pendant_incidences(g, v)}
        assert got == want[v]
        for i in C.pendant_incidences(g, v):
            assert g.degree(i.bad) == 3 and i.bad in g.vertices_on(i.face)
            assert i.host in g.neighbors(i.bad) and i.host not in g.vertices_on(i.face)
        assert set(C.pendant_faces(g, v)) == {f for _, f in want[v]}


@given(in_class_graphs(n_min=3, n_max=12))
def test_prop2b_bound(g):
    s = structure(g)
    for v in g.vertices:
        k = g.degree(v)
        # distinct triangles: both faces of a lone triangle are 3-faces
        alpha = len({frozenset(g.vertices_on(f)) for f in s.tris_at[v]})
        assert alpha <= k // 2
        assert len(s.pendant_faces[v]) <= k - 2 * alpha


# 4-vertices -------------------------------------------------------------------


def test_four_kinds(fx):
    bow = fx("BOWTIE")
    c = next(v for v in bow.vertices if bow.degree(v) == 4)
    assert C.special_or_good_4vertex(bow, c) is FourKind.NEITHER
    assert C.special_or_good_4vertex(fx("GOOD4"), vid("GOOD4", "v")) is FourKind.GOOD
    assert C.special_or_good_4vertex(fx("GOOD4-P1"), vid("GOOD4-P1", "v")) is FourKind.GOOD
    assert C.special_or_good_4vertex(fx("SPECIAL4"), vid("SPECIAL4", "v")) is FourKind.SPECIAL


def test_four_kind_needs_degree_4(fx):
    with pytest.raises(C.ClassifyError):
        C.special_or_good_4vertex(fx("K4"), 1)


# bad (3,4,5+)-faces -------------------------------------------------------------


def test_bad345_examples(fx):
    k4 = fx("K4")
    assert not any(C.is_bad_345p_face(k4, f) for f in tri_faces(k4))
    assert C.is_bad_345p_face(fx("LBAD345S-POS"), face_of("LBAD345S-POS", "au,ax,v"))
    assert not C.is_bad_345p_face(fx("PLAIN345"), face_of("PLAIN345", "u,x,v"))


# chains -------------------------------------------------------------------------


def _isolated_344():
    sk = Sketch()
    sk.tri("u", "a", "b")
    sk.edge("u", "w")
    sk.pad("a", 4)
    sk.pad("b", 4)
    return sk.build(), sk


def test_no_chain_without_neighbouring_triangles():
    g, sk = _isolated_344()
    f = next(f.id for f in g.faces if f.degree == 3)
    assert C.find_chains(g, f) == ()


def test_chain1(fx):
    g = fx("CHAIN-1")
    t0 = face_of("CHAIN-1", "u,x0,t0")
    (chain,) = C.find_chains(g, t0)
    assert chain.length == 1
    assert chain.triangles[-1] == face_of("CHAIN-1", "t0,xn,yn")
    assert chain.terminal == "44+5+"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("end", ["", "-444"])
def test_chain_lengths(n, end):
    # interior (4,4,4)-faces carry a good 4-vertex, so every prefix is a
    # chain in its own right
    name = f"CHAIN-{n}{end}"
    g = fixtures.graph(name)
    t0 = face_of(name, "u,x0,t0")
    chains = C.find_chains(g, t0)
    assert sorted(c.length for c in chains) == list(range(1, n + 1))
    for ch in chains:
        _check_chain_invariants(g, ch)
    longest = max(chains, key=lambda c: c.length)
    assert longest.triangles[-1] == face_of(name, f"t{n - 1},xn,yn")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_into_345(n):
    name = f"CHAIN-{n}-345"
    g = fixtures.graph(name)
    t0 = face_of(name, "u,x0,t0")
    last = face_of(name, f"t{n - 1},xn,yn")
    ends = [c.triangles[-1] for c in C.find_chains(g, t0)]
    kinds = [a.kind for a in C.chain_anomalies(g, t0) if a.triangles[-1] == last]
    if n == 1:
        assert last in ends and not kinds
    else:
        # a long chain into a (3,4,k)-face is forbidden
        assert last not in ends and kinds == ["ii"]


def _check_chain_invariants(g, ch):
    s = structure(g)
    assert s.sig_is(ch.triangles[0], "(3,4,4)")
    for t in ch.triangles[1:-1]:
        assert s.sig_is(t, "(4,4,4)")
    assert s.sig_is(ch.triangles[-1], "(3+,4,4+)")
    assert len(ch.connectors) == ch.length
    for i, t in enumerate(ch.connectors):
        assert g.degree(t) == 4
        shared = set(g.vertices_on(ch.triangles[i])) & set(g.vertices_on(ch.triangles[i + 1]))
        assert shared == {t}
    assert len(set(ch.triangles[:-1])) == ch.length


def test_chain_to_itself(fx):
    g = fx("LCHAINSELF-POS")
    t0 = face_of("LCHAINSELF-POS", "x0,u,t0")
    kinds = {a.kind for a in C.chain_anomalies(g, t0)}
    assert "self" in kinds
    loops = [a for a in C.chain_anomalies(g, t0) if a.kind == "self"]
    assert any(a.triangles[a.loop_index] == t0 for a in loops)


def test_chain_needs_344(fx):
    with pytest.raises(C.ClassifyError):
        C.find_chains(fx("K4"), 0)


@given(plane_graphs(n_min=3, n_max=12, maximal=1.0))
def test_chain_invariants_everywhere(g):
    s = structure(g)
    for f in tri_faces(g):
        if s.sig_is(f, "(3,4,4)"):
            for ch in C.find_chains(g, f):
                _check_chain_invariants(g, ch)


# poor classes ---------------------------------------------------------------------


def test_poor_examples(fx):
    assert C.poor_class(fx("POOR-1"), face_of("POOR-1", "u1,u2,v")) is PoorClass.POOR
    assert C.poor_class(fx("SEMI-1"), face_of("SEMI-1", "u1,u2,v")) is PoorClass.SEMI_POOR
    bow = fx("BOWTIE")
    assert {C.poor_class(bow, f) for f in tri_faces(bow)} == {PoorClass.NOT_APPLICABLE}


def test_k4_faces_are_poor(fx):
    # every K4 3-vertex has an off-face neighbour, itself of degree 3
    k4 = fx("K4")
    assert {C.poor_class(k4, f) for f in tri_faces(k4)} == {PoorClass.POOR}


@given(plane_graphs(n_min=3, n_max=12))
def test_every_triangle_has_one_class(g):
    for f in tri_faces(g):
        pc = C.poor_class(g, f)
        assert isinstance(pc, PoorClass)
        has3 = any(g.degree(v) == 3 for v in g.vertices_on(f))
        assert (pc is PoorClass.NOT_APPLICABLE) == (not has3)


def test_special_semipoor(fx):
    assert not C.is_special_semipoor_377(fx("SEMI-1"), face_of("SEMI-1", "u1,u2,v"))
    assert C.is_special_semipoor_377(fx("L377-POS"), face_of("L377-POS", "u,v,w"))
    sk = Sketch()
    sk.tri("u", "v", "w")
    sk.leaf("u")
    sk.pad("v", 6)
    sk.pad("w", 8)
    g = sk.build()
    f = next(f.id for f in g.faces if f.degree == 3)
    assert C.poor_class(g, f) is PoorClass.SEMI_POOR
    assert not C.is_special_semipoor_377(g, f)


def test_special_semipoor_needs_semi(fx):
    with pytest.raises(C.ClassifyError):
        C.is_special_semipoor_377(fx("POOR-1"), face_of("POOR-1", "u1,u2,v"))


def test_pure(fx):
    g = fx("L377-POS")
    a = {f: C.poor_class(g, f) for f in tri_faces(g)}
    fresh = type(g)(g.rotation)
    assert {f: C.poor_class(fresh, f) for f in tri_faces(fresh)} == a
