import pytest
from hypothesis import given
from hypothesis import strategies as st

from discharge_lab.corpus import CorpusError, CorpusSpec, canonical_code, digest, generate, load
from discharge_lab.plane_graph import PlaneGraph, in_class, write_planar_code


def _codes(spec):
    return [g.encode_body() for g in generate(spec)]


def test_deterministic():
    spec = CorpusSpec(n_min=3, n_max=10, count=80, seed=5, maximal=0.4)
    assert _codes(spec) == _codes(spec)
    assert _codes(spec) != _codes(CorpusSpec(n_min=3, n_max=10, count=80, seed=6, maximal=0.4))


def test_filter_and_sizes():
    spec = CorpusSpec(n_min=4, n_max=11, count=120, seed=1, maximal=0.5)
    gs = list(generate(spec))
    assert len(gs) == 120
    assert all(in_class(g) and 4 <= g.vertex_count <= 11 for g in gs)


def test_unfiltered_reaches_out_of_class():
    gs = list(generate(CorpusSpec(n_min=5, n_max=9, count=60, seed=2, class_filter=False, maximal=1.0)))
    assert any(not in_class(g) for g in gs)


def test_distinct_up_to_isomorphism():
    gs = list(generate(CorpusSpec(n_min=3, n_max=8, count=100, seed=3)))
    keys = [canonical_code(g) for g in gs]
    assert len(set(keys)) == len(keys)


def test_maximal_triangle():
    gs = list(generate(CorpusSpec(n_min=3, n_max=3, count=1, seed=0, maximal=1.0)))
    assert len(gs) == 1
    g = gs[0]
    assert (g.vertex_count, g.edge_count) == (3, 3)


def test_unsatisfiable_count():
    # only a handful of plane graphs on 3..4 vertices avoid 4- and 5-cycles
    with pytest.raises(CorpusError, match="distinct"):
        list(generate(CorpusSpec(n_min=3, n_max=4, count=100, seed=0)))


@pytest.mark.parametrize(
    "kw",
    [dict(n_min=0), dict(n_min=5, n_max=4), dict(n_max=300), dict(seed=-1), dict(seed=2**64), dict(maximal=2.0), dict(count=-1)],
)
def test_spec_validation(kw):
    with pytest.raises(CorpusError):
        CorpusSpec(**kw)


def test_parse():
    spec = CorpusSpec.parse("gen:n=3..12,count=500,seed=7,filter=off,maximal=0.2")
    assert spec == CorpusSpec(3, 12, 500, 7, False, 0.2)
    assert CorpusSpec.parse("gen:n=6").n_max == 6
    with pytest.raises(CorpusError):
        CorpusSpec.parse("gen:size=3")


def test_load_gen_and_file(tmp_path):
    gs = load("gen:n=3..7,count=10,seed=4")
    path = tmp_path / "c.pc"
    path.write_bytes(write_planar_code(gs))
    assert load(path) == gs


def _relabel(g, perm, mirror=False):
    return PlaneGraph({perm[v]: [perm[u] for u in (g.rotation[v][::-1] if mirror else g.rotation[v])] for v in g.vertices})


@given(st.integers(0, 2**32), st.randoms(use_true_random=False), st.booleans())
def test_canonical_code_invariant(seed, rnd, mirror):
    g = next(generate(CorpusSpec(n_min=2, n_max=11, count=1, seed=seed, maximal=0.5)))
    perm = list(g.vertices)
    rnd.shuffle(perm)
    h = _relabel(g, dict(zip(g.vertices, perm)), mirror)
    assert canonical_code(h) == canonical_code(g)
    assert digest(h) == digest(g)


def test_canonical_code_separates(fx):
    assert canonical_code(fx("BOWTIE")) != canonical_code(fx("C7"))
    assert len(digest(fx("K4"))) == 16
