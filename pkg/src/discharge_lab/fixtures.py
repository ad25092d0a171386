"""Named fixture graphs.

Every fixture is a small plane graph built with :class:`~.sketch.Sketch`
from triangles, bridges and pendant leaves.  The blocks of such a graph are
triangles and single edges arranged in a tree (or, for the chain-loop
fixture, one long ring), so in-class membership is structural; it is still
checked in the tests.

Each :class:`Fixture` records what it is meant to exhibit:

``lemmas``
    lemma id -> role names that must lie in some match's deletion set;
``absent``
    lemma ids that must not match at all;
``charges``
    (rule set, element, exact final charge) triples, elements written
    ``"f:a,b,c"`` for the 3-face on the named vertices or ``"v:a"``;
``cases``
    (rule set, element, audit case label prefix).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .plane_graph import PlaneGraph
from .sketch import Sketch

Q = Fraction


@dataclass(frozen=True)
class Fixture:
    name: str
    build: Callable[[], Sketch]
    lemmas: dict = field(default_factory=dict)
    absent: tuple[str, ...] = ()
    charges: tuple[tuple[str, str, Fraction], ...] = ()
    cases: tuple[tuple[str, str, str], ...] = ()
    in_class: bool = True
    doc: str = ""


FIXTURES: dict[str, Fixture] = {}


def fixture(name: str, **meta):
    def wrap(fn: Callable[[], Sketch]) -> Callable[[], Sketch]:
        FIXTURES[name] = Fixture(name, fn, doc=(fn.__doc__ or "").strip(), **meta)
        return fn

    return wrap


@lru_cache(maxsize=None)
def load(name: str) -> tuple[PlaneGraph, dict]:
    """The fixture's graph and its role-name -> vertex-id map."""
    sk = FIXTURES[name].build()
    return sk.build(), {k: v for k, v in sk.ids.items() if isinstance(k, str)}


def graph(name: str) -> PlaneGraph:
    return load(name)[0]


def resolve(name: str, element: str) -> str:
    """Ledger key (``v7``/``f3``) for a role-named element of a fixture."""
    g, ids = load(name)
    kind, _, body = element.partition(":")
    names = body.split(",")
    vs = {ids[n] for n in names}
    if kind == "v":
        return f"v{ids[names[0]]}"
    for f in g.faces:
        if f.degree == len(vs) and set(f.boundary) == vs:
            return f"f{f.id}"
    raise KeyError(f"{name}: no face on {body}")


def _leafy(sk: Sketch, **degrees: int) -> None:
    for name, d in degrees.items():
        sk.pad(name, d)


def _tri344(sk: Sketch, four: str, tag: str) -> None:
    """Hang a (3,4,4)-face on 4-vertex ``four`` (the other 4-vertex padded)."""
    a, b = f"{tag}3", f"{tag}4"
    sk.tri(a, four, b)
    _leafy(sk, **{a: 3, b: 4})


def _pendant(sk: Sketch, host: str, tag: str, d1: int = 6, d2: int = 6) -> None:
    """Make ``host`` adjacent to a bad 3-vertex on a triangle away from it."""
    y = f"{tag}y"
    sk.edge(host, y)
    sk.tri(y, f"{tag}1", f"{tag}2")
    _leafy(sk, **{f"{tag}1": d1, f"{tag}2": d2})


# basic graphs -------------------------------------------------------------------


@fixture("TRIANGLE", lemmas={"P2a": ["a"]})
def _triangle():
    sk = Sketch()
    sk.tri("a", "b", "c")
    return sk


@fixture("BOWTIE")
def _bowtie():
    sk = Sketch()
    sk.tri("c", "a", "b")
    sk.tri("c", "d", "e")
    return sk


@fixture("K4", in_class=False, lemmas={"P2b": ["a"], "L-333": ["a"]}, absent=("P2a",))
def _k4():
    sk = Sketch()
    sk.face("a", "b", "c")
    sk.face("a", "c", "d")
    sk.face("a", "d", "b")
    sk.face("b", "d", "c")
    return sk


@fixture("C7", lemmas={"P2a": ["c1"]}, absent=(
    "P2b", "L-334", "L-5vertex", "L-333", "L-344pendant", "L-special344",
    "L-chain-344", "L-chain-self", "L-exist-chain", "L-bad345s", "L-35k", "L-355",
    "L-345-45k", "L-346", "L-chain-unique", "L-3to6", "L-336", "L-poor-half",
    "L-8vertex", "L-7vertex", "L-377",
))
def _c7():
    sk = Sketch()
    names = [f"c{i}" for i in range(1, 8)]
    sk.face(*names)
    return sk


@fixture("PENDANT-1")
def _pendant1():
    """Triangle abc with d(a) = 3; a's third neighbour v is off the triangle."""
    sk = Sketch()
    sk.tri("a", "b", "c")
    sk.edge("a", "v")
    _leafy(sk, v=4, b=4, c=4)
    return sk


@fixture("GOOD4")
def _good4():
    """4-vertex v on one 3-face and no pendant 3-face."""
    sk = Sketch()
    sk.tri("v", "a", "b")
    _leafy(sk, v=4, a=6, b=6)
    return sk


@fixture("GOOD4-P1")
def _good4_p1():
    """4-vertex v on one 3-face with one pendant 3-face."""
    sk = Sketch()
    sk.tri("v", "a", "b")
    _pendant(sk, "v", "p")
    _leafy(sk, v=4, a=6, b=6)
    return sk


@fixture("SPECIAL4")
def _special4():
    """4-vertex v on one 3-face with two pendant 3-faces."""
    sk = Sketch()
    sk.tri("v", "a", "b")
    _pendant(sk, "v", "p")
    _pendant(sk, "v", "q")
    _leafy(sk, a=6, b=6)
    return sk


@fixture("POOR-1")
def _poor1():
    """(3,3,7)-face whose 3-vertices both have 4-vertex pendant neighbours."""
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    sk.edge("u1", "p1")
    sk.edge("u2", "p2")
    _leafy(sk, v=7, p1=4, p2=4)
    return sk


@fixture("SEMI-1")
def _semi1():
    """(3,3,7)-face; pendant neighbours of degree 4 and 6."""
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    sk.edge("u1", "p1")
    sk.edge("u2", "p2")
    _leafy(sk, v=7, p1=4, p2=6)
    return sk


@fixture("L336-POOR", lemmas={"L-336": ["u1", "u2"]})
def _l336_poor():
    """(3,3,6)-face whose 3-vertices both have 5- pendant neighbours."""
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    sk.edge("u1", "p1")
    sk.edge("u2", "p2")
    _leafy(sk, v=6, p1=5, p2=5)
    return sk


@fixture("L336-SEMI", lemmas={"L-336": ["u1"]})
def _l336_semi():
    """(3,3,6)-face with exactly one 3-vertex next to a 5- pendant neighbour."""
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    sk.edge("u1", "p1")
    sk.edge("u2", "p2")
    _leafy(sk, v=6, p1=5, p2=6)
    return sk


@fixture("PLAIN345")
def _plain345():
    """(3,4,5)-face whose 4-vertex lies on no other triangle."""
    sk = Sketch()
    sk.tri("u", "x", "v")
    sk.leaf("u")
    _leafy(sk, x=4, v=5)
    return sk


def _chain(n: int, end: str = "445") -> Sketch:
    """(3,4,4)-face T0 = (u, x0, t0) followed by n-1 interior (4,4,4)-faces
    and a final triangle through t_{n-1}.

    ``end`` selects the final triangle: ``445`` a (4,4,5)-face, ``345`` a bad
    (3,4,5)-face, ``444`` a (4,4,4)-face with a good vertex.
    """
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.edge("u", "w")
    _leafy(sk, x0=4, w=6)
    for i in range(1, n):
        sk.tri(f"t{i - 1}", f"x{i}", f"t{i}")
        _leafy(sk, **{f"x{i}": 4})
    last = f"t{n - 1}"
    if end == "445":
        sk.tri(last, "xn", "yn")
        _leafy(sk, xn=5, yn=4)
    elif end == "345":
        sk.tri(last, "xn", "yn")
        _leafy(sk, xn=5, yn=3)
    else:
        sk.tri(last, "xn", "yn")
        _leafy(sk, xn=4, yn=4)
    return sk


for _n in range(1, 5):
    fixture(f"CHAIN-{_n}")(lambda n=_n: _chain(n))
    fixture(f"CHAIN-{_n}-345")(lambda n=_n: _chain(n, "345"))
    fixture(f"CHAIN-{_n}-444")(lambda n=_n: _chain(n, "444"))


# lemma fixtures ---------------------------------------------------------------


@fixture("L334-POS", lemmas={"L-334": ["u", "v", "w"]})
def _l334():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _leafy(sk, u=3, v=3, w=4)
    return sk


@fixture("L334-NEG", absent=("L-334",))
def _l334_neg():
    """(3,3,5)-face: one degree too many."""
    sk = Sketch()
    sk.tri("u", "v", "w")
    _leafy(sk, u=3, v=3, w=5)
    return sk


@fixture("L5VERTEX-POS", lemmas={"L-5vertex": ["v", "u"]})
def _l5():
    sk = Sketch()
    sk.tri("v", "a1", "b1")
    sk.tri("v", "a2", "b2")
    sk.edge("v", "u")
    _leafy(sk, a1=3, b1=4, a2=3, b2=4, u=3)
    return sk


@fixture("L5VERTEX-NEG", absent=("L-5vertex",))
def _l5_neg():
    """The fifth neighbour is a 4-vertex."""
    sk = Sketch()
    sk.tri("v", "a1", "b1")
    sk.tri("v", "a2", "b2")
    sk.edge("v", "u")
    _leafy(sk, a1=3, b1=4, a2=3, b2=4, u=4)
    return sk


@fixture("L333-POS", lemmas={"L-333": ["v", "x", "y"]})
def _l333():
    sk = Sketch()
    sk.path("x", "v", "y")
    _leafy(sk, v=3, x=3, y=3)
    return sk


@fixture("L333-NEG", absent=("L-333",))
def _l333_neg():
    sk = Sketch()
    sk.path("x", "v", "y")
    _leafy(sk, v=3, x=3, y=4)
    return sk


@fixture("L344PENDANT-POS", lemmas={"L-344pendant": ["u", "p"]})
def _l344p():
    sk = Sketch()
    sk.tri("u", "x", "t")
    sk.edge("u", "p")
    _leafy(sk, x=4, t=4, p=3)
    return sk


@fixture("L344PENDANT-NEG", absent=("L-344pendant",))
def _l344p_neg():
    sk = Sketch()
    sk.tri("u", "x", "t")
    sk.edge("u", "p")
    _leafy(sk, x=4, t=4, p=4)
    return sk


@fixture("LSPECIAL344-POS", lemmas={"L-special344": ["u", "x", "t"]})
def _lspecial():
    sk = Sketch()
    sk.tri("u", "x", "t")
    sk.edge("u", "p")
    _pendant(sk, "x", "c")
    _pendant(sk, "x", "d")
    _leafy(sk, t=4, p=6)
    return sk


@fixture("LSPECIAL344-NEG", absent=("L-special344",))
def _lspecial_neg():
    """Only one pendant face at x, so x is good."""
    sk = Sketch()
    sk.tri("u", "x", "t")
    sk.edge("u", "p")
    _pendant(sk, "x", "c")
    _leafy(sk, x=4, t=4, p=6)
    return sk


@fixture("LCHAIN344-I", lemmas={"L-chain-344": ["u", "t0", "x1"]})
def _lchain_i():
    """T0 = (u,x0,t0), T1 = (t0,x1,t1) with x1 special."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("t0", "x1", "t1")
    sk.edge("u", "w")
    _pendant(sk, "x1", "c")
    _pendant(sk, "x1", "d")
    _leafy(sk, x0=4, t1=4, w=6)
    return sk


@fixture("LCHAIN344-II", lemmas={"L-chain-344": ["u", "t0", "t1", "a"]})
def _lchain_ii():
    """T0, a (4,4,4)-face T1, then T2 = (t1, a, b) with d(a) = 3."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("t0", "x1", "t1")
    sk.tri("t1", "a", "b")
    sk.edge("u", "w")
    _leafy(sk, x0=4, x1=4, a=3, b=5, w=6)
    return sk


@fixture("LCHAIN344-III", lemmas={"L-chain-344": ["u", "t0", "a", "b"]})
def _lchain_iii():
    """T0 = (u,x0,t0) sharing t0 with the (3,4,4)-face (t0, a, b)."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("t0", "a", "b")
    sk.edge("u", "w")
    _leafy(sk, x0=4, a=3, b=4, w=6)
    return sk


@fixture("LCHAIN344-NEG", absent=("L-chain-344", "L-chain-self"))
def _lchain_neg():
    return _chain(3)


@fixture("LCHAINSELF-POS", lemmas={"L-chain-self": ["u", "t0", "x0"]})
def _lchain_self():
    """Seven triangles in a ring; the chain from T0 returns to T0."""
    sk = Sketch()
    ring = ["x0", "t0", "c1", "c2", "c3", "c4", "c5"]
    apex = ["u", "a1", "a2", "a3", "a4", "a5", "a6"]
    for i, a in enumerate(apex):
        sk.face(ring[i], a, ring[(i + 1) % len(ring)])
    sk.edge("u", "w")
    _leafy(sk, w=6, **{a: 4 for a in apex[1:]})
    return sk


@fixture("LEXISTCHAIN-POS", lemmas={"L-exist-chain": ["u", "x0", "t0"]})
def _lexist():
    """(3,4,4)-face whose 4-vertices sit on (3,3,4)-faces: no chain at all."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("x0", "a", "b")
    sk.tri("t0", "c", "d")
    sk.edge("u", "w")
    _leafy(sk, a=3, b=3, c=3, d=3, w=6)
    return sk


@fixture("LEXISTCHAIN-NEG", absent=("L-exist-chain",))
def _lexist_neg():
    """Both 4-vertices of T0 lead to a (4,4,5)-face."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("x0", "a", "b")
    sk.tri("t0", "c", "d")
    sk.edge("u", "w")
    _leafy(sk, a=4, b=5, c=4, d=5, w=6)
    return sk


def _bad345(sk: Sketch, v: str, tag: str) -> None:
    """Bad (3,4,5)-face (tag3, tag4, v); tag4 also on a (3,4,4)-face."""
    u, x = f"{tag}u", f"{tag}x"
    sk.tri(u, x, v)
    sk.edge(u, f"{tag}p")
    sk.tri(x, f"{tag}h3", f"{tag}h4")
    sk.edge(f"{tag}h3", f"{tag}hp")
    _leafy(sk, **{f"{tag}h4": 4})
    _leafy(sk, **{f"{tag}hp": 6, f"{tag}p": 6})


def _pendant_low(sk: Sketch, v: str, tag: str) -> None:
    """Pendant (3,4,4)-face at v (a (3,4-,4-)-face)."""
    _pendant(sk, v, tag, 4, 4)


@fixture("LBAD345S-POS", lemmas={"L-bad345s": ["v", "ax", "a", "b"]})
def _lbad345s():
    sk = Sketch()
    _bad345(sk, "v", "a")
    sk.tri("a", "b", "v")
    sk.edge("a", "ap2")
    sk.edge("b", "bp")
    _leafy(sk, v=5, ap2=6, bp=6)
    return sk


@fixture("LBAD345S-NEG", absent=("L-bad345s",))
def _lbad345s_neg():
    """As LBAD345S-POS but the second face at v is a non-bad (3,4,5)-face."""
    sk = Sketch()
    _bad345(sk, "v", "a")
    sk.tri("a", "b", "v")
    sk.edge("a", "ap2")
    sk.edge("b", "bp")
    _leafy(sk, v=5, ap2=6, bp=6, b=4)
    return sk


@fixture("L35K-POS", lemmas={"L-35k": ["u", "v"]})
def _l35k():
    """Loaded 5-vertex v; the 3-vertex u of (u, k, v) has a 1-vertex pendant."""
    sk = Sketch()
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    sk.tri("u", "k", "v")
    sk.edge("u", "p")
    _leafy(sk, k=6)
    return sk


@fixture("L35K-NEG", absent=("L-35k",))
def _l35k_neg():
    sk = Sketch()
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    sk.tri("u", "k", "v")
    sk.edge("u", "p")
    _leafy(sk, k=6, p=4)
    return sk


@fixture("L355-POS", lemmas={"L-355": ["u", "v", "w"]})
def _l355():
    sk = Sketch()
    sk.tri("u", "v", "w")
    sk.edge("u", "p")
    for x in ("v", "w"):
        _bad345(sk, x, f"{x}b")
        _pendant_low(sk, x, f"{x}z")
    _leafy(sk, p=5)
    return sk


@fixture("L355-NEG", absent=("L-355",))
def _l355_neg():
    """Only one of the two 5-vertices is loaded."""
    sk = Sketch()
    sk.tri("u", "v", "w")
    sk.edge("u", "p")
    _bad345(sk, "v", "vb")
    _pendant_low(sk, "v", "vz")
    _leafy(sk, p=5, w=5)
    return sk


@fixture("L345-45K-POS", lemmas={"L-345-45k": ["v", "t0", "a", "zy"]})
def _l345_45k():
    sk = Sketch()
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    sk.tri("a", "c", "t0")
    sk.tri("t0", "x", "v")
    sk.edge("a", "ap")
    _leafy(sk, c=4, x=4, ap=6)
    return sk


@fixture("L345-45K-NEG", absent=("L-345-45k",))
def _l345_45k_neg():
    """The would-be T0 is a (3,4,5)-face, so no chain reaches (t0, x, v)."""
    sk = Sketch()
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    sk.tri("a", "c", "t0")
    sk.tri("t0", "x", "v")
    sk.edge("a", "ap")
    _leafy(sk, c=5, x=4, ap=6)
    return sk


@fixture("L346-POS", lemmas={"L-346": ["v"]})
def _l346():
    sk = Sketch()
    _bad345(sk, "v", "b")
    sk.tri("u2", "x2", "v")
    sk.tri("u3", "x3", "v")
    sk.edge("u2", "p2")
    sk.edge("u3", "p3")
    _leafy(sk, x2=4, x3=4, p2=6, p3=6)
    return sk


@fixture("L346-NEG", absent=("L-346",))
def _l346_neg():
    sk = Sketch()
    _bad345(sk, "v", "b")
    sk.tri("u2", "x2", "v")
    sk.tri("u3", "x3", "v")
    sk.edge("u2", "p2")
    sk.edge("u3", "p3")
    _leafy(sk, x2=4, x3=5, p2=6, p3=6)
    return sk


@fixture("LCHAINUNIQUE-POS", lemmas={"L-chain-unique": ["u", "u2", "c"]})
def _lunique():
    """Two (3,4,4)-faces chaining through one (4,4,4)-face into one terminal."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("u2", "y0", "s0")
    sk.tri("t0", "s0", "c")
    sk.tri("c", "p", "q")
    sk.edge("u", "w")
    sk.edge("u2", "w2")
    _leafy(sk, x0=4, y0=4, p=4, q=5, w=6, w2=6)
    return sk


@fixture("LCHAINUNIQUE-NEG", absent=("L-chain-unique",))
def _lunique_neg():
    """One (3,4,4)-face chaining through the (4,4,4)-face."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("t0", "s0", "c")
    sk.tri("c", "p", "q")
    sk.edge("u", "w")
    _leafy(sk, x0=4, s0=4, p=4, q=5, w=6)
    return sk


@fixture("L3TO6-POS", lemmas={"L-3to6": ["v"]})
def _l3to6():
    sk = Sketch()
    sk.path("a", "v", "b")
    sk.edge("v", "c")
    _leafy(sk, a=4, b=4, c=5)
    return sk


@fixture("L3TO6-NEG", absent=("L-3to6",))
def _l3to6_neg():
    sk = Sketch()
    sk.path("a", "v", "b")
    sk.edge("v", "c")
    _leafy(sk, a=4, b=4, c=6)
    return sk


@fixture("L336-NEG", absent=("L-336",))
def _l336_neg():
    """(3,3,6)-face with both pendant neighbours of degree 6: non-poor."""
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    sk.edge("u1", "p1")
    sk.edge("u2", "p2")
    _leafy(sk, v=6, p1=6, p2=6)
    return sk


def _poor_face(sk: Sketch, v: str, tag: str, third: int = 3) -> None:
    """(3,3,d(v))-face at v whose 3-vertices have 1-vertex pendants."""
    a, b = f"{tag}a", f"{tag}b"
    sk.tri(a, b, v)
    sk.leaf(a)
    if third == 3:
        sk.leaf(b)
    else:
        _leafy(sk, **{b: third})


@fixture("LPOORHALF-POS", lemmas={"L-poor-half": ["v"]})
def _lpoorhalf():
    sk = Sketch()
    for t in "abc":
        _poor_face(sk, "v", t)
    return sk


@fixture("LPOORHALF-NEG", absent=("L-poor-half",))
def _lpoorhalf_neg():
    sk = Sketch()
    for t in "ab":
        _poor_face(sk, "v", t)
    _leafy(sk, v=6)
    return sk


@fixture("L8VERTEX-I", lemmas={"L-8vertex": ["v", "sa"]})
def _l8_i():
    """8-vertex: three poor (3,3,8)-faces and a semi-poor (3,6,8)-face."""
    sk = Sketch()
    for t in "abc":
        _poor_face(sk, "v", t)
    sk.tri("sa", "sb", "v")
    sk.leaf("sa")
    _leafy(sk, sb=6)
    return sk


@fixture("L8VERTEX-II", lemmas={"L-8vertex": ["v", "py", "qy"]})
def _l8_ii():
    """8-vertex: three poor (3,3,8)-faces and two pendant 3-faces."""
    sk = Sketch()
    for t in "abc":
        _poor_face(sk, "v", t)
    _pendant(sk, "v", "p")
    _pendant(sk, "v", "q")
    return sk


@fixture("L8VERTEX-NEG", absent=("L-8vertex",))
def _l8_neg():
    sk = Sketch()
    for t in "abc":
        _poor_face(sk, "v", t)
    _pendant(sk, "v", "p")
    sk.leaf("v")
    return sk


@fixture("L7VERTEX-I", lemmas={"L-7vertex": ["v", "sa", "py"]})
def _l7_i():
    """7-vertex: two poor (3,3,7)-faces, a semi-poor (3,6,7)-face, a pendant face."""
    sk = Sketch()
    for t in "ab":
        _poor_face(sk, "v", t)
    sk.tri("sa", "sb", "v")
    sk.leaf("sa")
    _pendant(sk, "v", "p")
    _leafy(sk, sb=6)
    return sk


@fixture("L7VERTEX-II", lemmas={"L-7vertex": ["v", "py", "qy", "ry"]})
def _l7_ii():
    """7-vertex: two poor (3,3,7)-faces and three pendant 3-faces."""
    sk = Sketch()
    for t in "ab":
        _poor_face(sk, "v", t)
    for t in "pqr":
        _pendant(sk, "v", t)
    return sk


@fixture("L7VERTEX-NEG", absent=("L-7vertex",))
def _l7_neg():
    sk = Sketch()
    for t in "ab":
        _poor_face(sk, "v", t)
    for t in "pq":
        _pendant(sk, "v", t)
    sk.leaf("v")
    return sk


def _loaded7(sk: Sketch, v: str) -> None:
    for t in ("a", "b"):
        _poor_face(sk, v, f"{v}{t}")
    _pendant(sk, v, f"{v}p")


@fixture("L377-POS", lemmas={"L-377": ["u", "v", "w"]})
def _l377():
    sk = Sketch()
    sk.tri("u", "v", "w")
    sk.leaf("u")
    _loaded7(sk, "v")
    _loaded7(sk, "w")
    return sk


@fixture("L377-NEG", absent=("L-377",))
def _l377_neg():
    """w carries a second pendant face, so it is not loaded."""
    sk = Sketch()
    sk.tri("u", "v", "w")
    sk.leaf("u")
    _loaded7(sk, "v")
    for t in ("a", "b"):
        _poor_face(sk, "w", f"w{t}")
    _pendant(sk, "w", "wp")
    sk.leaf("w")
    sk.leaf("w")
    return sk


# audit fixtures -----------------------------------------------------------------
#
# Each realizes one face case of the (1,1,0) or (3,0,0) argument with the
# extremal contributions, so the final charge is the value the case analysis
# computes.  Pendant neighbours that should contribute nothing are leaves.


def _second_tri(sk: Sketch, x: str, tag: str, d: int = 6) -> None:
    """Put x on a second 3-face whose other vertices have degree d."""
    sk.tri(x, f"{tag}1", f"{tag}2")
    _leafy(sk, **{f"{tag}1": d, f"{tag}2": d})


def _three(sk: Sketch, u: str, pendant_degree: int) -> None:
    """Give 3-vertex u its pendant neighbour of the stated degree."""
    p = f"{u}p"
    sk.edge(u, p)
    if pendant_degree > 1:
        _leafy(sk, **{p: pendant_degree})


R110, R300 = "R110", "R300"


@fixture("A110-C1", charges=((R110, "f:u1,u2,v", Q(0)),), cases=((R110, "f:u1,u2,v", "Case 1"),))
def _a1():
    sk = Sketch()
    sk.tri("u1", "u2", "v")
    _three(sk, "u1", 6)
    _three(sk, "u2", 6)
    _leafy(sk, v=5)
    return sk


@fixture("A110-C2-GOOD", charges=((R110, "f:u,x,t", Q(0)),), cases=((R110, "f:u,x,t", "Case 2"),))
def _a2g():
    sk = Sketch()
    sk.tri("u", "x", "t")
    _three(sk, "u", 4)
    _pendant(sk, "x", "xq")
    _leafy(sk, x=4)
    _second_tri(sk, "t", "ts")
    return sk


@fixture("A110-C2-NOGOOD", charges=((R110, "f:u,x,t", Q(0)),), cases=((R110, "f:u,x,t", "Case 2"),))
def _a2n():
    sk = Sketch()
    sk.tri("u", "x", "t")
    _three(sk, "u", 4)
    _second_tri(sk, "x", "xs")
    _second_tri(sk, "t", "ts")
    return sk


@fixture("A110-C3", charges=((R110, "f:u,x,v", Q(0)),), cases=((R110, "f:u,x,v", "Case 3"),))
def _a3():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 1)
    sk.tri("h3", "x", "h4")
    _three(sk, "h3", 6)
    _leafy(sk, h4=4, v=5)
    return sk


@fixture("A110-C4-PLAIN", charges=((R110, "f:u,x,v", Q(0)),), cases=((R110, "f:u,x,v", "Case 4"),))
def _a4p():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 1)
    _second_tri(sk, "x", "xs")
    _leafy(sk, v=5)
    return sk


@fixture("A110-C4-BADNEXT", charges=((R110, "f:u,x,v", Q(0)),), cases=((R110, "f:u,x,v", "Case 4"),))
def _a4b():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 5)
    _second_tri(sk, "x", "xs")
    _bad345(sk, "v", "b")
    _leafy(sk, v=5)
    return sk


@fixture("A110-C5-BAD", charges=((R110, "f:u,x,v", Q(0)),), cases=((R110, "f:u,x,v", "Case 5"),))
def _a5b():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 1)
    sk.tri("h3", "x", "h4")
    _three(sk, "h3", 6)
    _leafy(sk, h4=4, v=6)
    return sk


@fixture("A110-C5-PLAIN", charges=((R110, "f:u,x,v", Q(0)),), cases=((R110, "f:u,x,v", "Case 5"),))
def _a5p():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 1)
    _second_tri(sk, "x", "xs")
    _leafy(sk, v=6)
    return sk


@fixture("A110-C6", charges=((R110, "f:u,x,v", Q(1, 4)),), cases=((R110, "f:u,x,v", "Case 6"),))
def _a6():
    sk = Sketch()
    sk.tri("u", "x", "v")
    _three(sk, "u", 1)
    _second_tri(sk, "x", "xs")
    _leafy(sk, v=7)
    return sk


@fixture("A110-C7-PLAIN", charges=((R110, "f:u,v,w", Q(0)),), cases=((R110, "f:u,v,w", "Case 7"),))
def _a7p():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _three(sk, "u", 1)
    _leafy(sk, v=5, w=5)
    return sk


@fixture("A110-C7-LOADED", charges=((R110, "f:u,v,w", Q(0)),), cases=((R110, "f:u,v,w", "Case 7"),))
def _a7l():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _three(sk, "u", 5)
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    _leafy(sk, w=5)
    return sk


@fixture("A110-C8-PLAIN", charges=((R110, "f:u,v,w", Q(0)),), cases=((R110, "f:u,v,w", "Case 8"),))
def _a8p():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _three(sk, "u", 1)
    _leafy(sk, v=5, w=6)
    return sk


@fixture("A110-C8-LOADED", charges=((R110, "f:u,v,w", Q(0)),), cases=((R110, "f:u,v,w", "Case 8"),))
def _a8l():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _three(sk, "u", 5)
    _bad345(sk, "v", "b")
    _pendant_low(sk, "v", "z")
    _leafy(sk, w=6)
    return sk


@fixture("A110-C9", charges=((R110, "f:u,v,w", Q(0)),), cases=((R110, "f:u,v,w", "Case 9"),))
def _a9():
    sk = Sketch()
    sk.tri("u", "v", "w")
    _three(sk, "u", 1)
    _leafy(sk, v=6, w=6)
    return sk


@fixture("A110-C10-NOGOOD", charges=((R110, "f:a,b,c", Q(0)),), cases=((R110, "f:a,b,c", "Case 10"),))
def _a10n():
    sk = Sketch()
    sk.tri("a", "b", "c")
    for x in "abc":
        _second_tri(sk, x, f"{x}s")
    return sk


@fixture("A110-C10-GOOD", charges=((R110, "f:a,b,c", Q(0)),), cases=((R110, "f:a,b,c", "Case 10"),))
def _a10g():
    sk = Sketch()
    sk.tri("a", "b", "c")
    _pendant(sk, "a", "aq")
    sk.leaf("a")
    for x in "bc":
        _second_tri(sk, x, f"{x}s")
    return sk


@fixture("A110-C11-NOCHAIN", charges=((R110, "f:a,b,v", Q(0)),), cases=((R110, "f:a,b,v", "Case 11"),))
def _a11n():
    sk = Sketch()
    sk.tri("a", "b", "v")
    for x in "ab":
        _second_tri(sk, x, f"{x}s")
    _leafy(sk, v=5)
    return sk


@fixture("A110-C11-CHAIN", charges=((R110, "f:t0,x1,v", Q(0)), (R110, "bank", Q(1, 2))),
         cases=((R110, "f:t0,x1,v", "Case 11"),))
def _a11c():
    """T0 = (u, x0, t0) chains into (t0, x1, v) and, through x0, into a
    (4,6,6)-face; the bank takes 1/2 from each terminal and pays T0 1/2."""
    sk = Sketch()
    sk.tri("u", "x0", "t0")
    sk.tri("t0", "x1", "v")
    _three(sk, "u", 4)
    _second_tri(sk, "x0", "x0s")
    _second_tri(sk, "x1", "x1s")
    _leafy(sk, v=5)
    return sk


@fixture("A300-C1", charges=((R300, "f:a,b,c", Q(0)),), cases=((R300, "f:a,b,c", "Case 1"),))
def _b1():
    sk = Sketch()
    sk.tri("a", "b", "c")
    _leafy(sk, a=4, b=4, c=4)
    return sk


@fixture("A300-C2-RICH", charges=((R300, "f:u,x,y", Q(0)),), cases=((R300, "f:u,x,y", "Case 2"),))
def _b2r():
    sk = Sketch()
    sk.tri("u", "x", "y")
    _three(sk, "u", 6)
    _leafy(sk, x=4, y=4)
    return sk


@fixture("A300-C2-POOR", charges=((R300, "f:u,x,y", Q(0)),), cases=((R300, "f:u,x,y", "Case 2"),))
def _b2p():
    sk = Sketch()
    sk.tri("u", "x", "y")
    _three(sk, "u", 5)
    _leafy(sk, x=4, y=6)
    return sk


@fixture("A300-C3-11", charges=((R300, "f:a,b,v", Q(0)),), cases=((R300, "f:a,b,v", "Case 3"),))
def _b3_11():
    sk = Sketch()
    sk.tri("a", "b", "v")
    _three(sk, "a", 1)
    _three(sk, "b", 1)
    _leafy(sk, v=11)
    return sk


@fixture("A300-C3-4", charges=((R300, "f:a,b,v", Q(0)),), cases=((R300, "f:a,b,v", "Case 3"),))
def _b3_4():
    sk = Sketch()
    sk.tri("a", "b", "v")
    _three(sk, "a", 6)
    _three(sk, "b", 6)
    _leafy(sk, v=4)
    return sk


@fixture("A300-C3-POOR", charges=((R300, "f:a,b,v", Q(0)),), cases=((R300, "f:a,b,v", "Case 3"),))
def _b3p():
    sk = Sketch()
    sk.tri("a", "b", "v")
    _three(sk, "a", 1)
    _three(sk, "b", 1)
    _leafy(sk, v=8)
    return sk


@fixture("A300-C3-SEMI", charges=((R300, "f:a,b,v", Q(0)),), cases=((R300, "f:a,b,v", "Case 3"),))
def _b3s():
    sk = Sketch()
    sk.tri("a", "b", "v")
    _three(sk, "a", 1)
    _three(sk, "b", 6)
    _leafy(sk, v=8)
    return sk


@fixture("A300-C3-NONPOOR", charges=((R300, "f:a,b,v", Q(0)),), cases=((R300, "f:a,b,v", "Case 3"),))
def _b3n():
    sk = Sketch()
    sk.tri("a", "b", "v")
    _three(sk, "a", 6)
    _three(sk, "b", 6)
    _leafy(sk, v=8)
    return sk


@fixture("A300-C4", charges=((R300, "f:a,b,c", Q(0)),), cases=((R300, "f:a,b,c", "Case 4"),))
def _b4():
    sk = Sketch()
    sk.tri("a", "b", "c")
    for x in "abc":
        _three(sk, x, 6)
    return sk


def names() -> list[str]:
    return list(FIXTURES)


def negative_control() -> tuple[PlaneGraph, frozenset[int]]:
    """A K4 block hanging off a path: 3-colorable without the block, not with it.

    Returned with the block's vertex set, to be used as a fake configuration
    under the (0,0,0) profile.
    """
    sk = Sketch()
    sk.face("a", "b", "c")
    sk.face("a", "c", "d")
    sk.edge("b", "d")
    sk.path("a", "p", "q", "r")
    g = sk.build()
    return g, frozenset(sk[x] for x in "abcd")
