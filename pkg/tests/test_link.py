import pytest

from eqkr.fixtures import BRAIDS, REIDEMEISTER_PAIRS, diagram
from eqkr.link import DiagramError, assemble, build_cube, parse_braid, parse_input, parse_pd
from eqkr.mf import InvariantError
from eqkr.ring import Poly


def test_parse_pd_kink():
    D = parse_pd('{"crossings": [{"sign": 1, "edges": [2, 2, 1, 1]}]}')
    assert D.components == 1 and D.writhe() == 1


@pytest.mark.parametrize("bad", [
    "[1, 2",
    {"crossings": [{"sign": 2, "edges": [1, 2, 2, 1]}]},
    {"crossings": [{"sign": 1, "edges": [1, 2, 3]}]},
    {"crossings": [{"sign": 1, "edges": [1, 2, 3, 4]}]},
    {"crossings": [{"edges": [1, 2, 2, 1]}]},
    {"loops": -1},
    {"nothing": 1},
    [1, 2],
])
def test_parse_errors(bad):
    with pytest.raises(DiagramError):
        parse_input(bad)


def test_parse_braid_errors():
    with pytest.raises(DiagramError):
        parse_braid("1 3", 3)
    with pytest.raises(DiagramError):
        parse_braid("x", 2)
    with pytest.raises(DiagramError):
        parse_braid("1", 2, closure="plat")
    with pytest.raises(DiagramError):
        parse_input({"braid": "1"})


def test_braid_letter_forms():
    a = parse_braid("s1 s1^-1", 2)
    b = parse_braid("1 -1", 2)
    c = parse_braid([1, -1], 2)
    assert [x.sign for x in a.crossings] == [x.sign for x in b.crossings] == \
        [x.sign for x in c.crossings] == [1, -1]


@pytest.mark.parametrize("name,components", [
    ("unknot", 1), ("unlink2", 2), ("kink_pos", 1), ("hopf", 2), ("trefoil", 1),
    ("r2_hopf", 3), ("hopf_unknot", 3), ("r3_left", 2), ("r2_unlink", 2),
])
def test_components(name, components):
    assert diagram(name).components == components


def test_cube_shape():
    D = diagram("trefoil")
    cube = build_cube(D, 2)
    assert len(cube.vertices) == 8
    assert len(list(cube.edges())) == 12
    for state, v in cube.vertices.items():
        assert v.h == sum(state) - D.n_minus
        v.koszul.check_rows()


@pytest.mark.parametrize("name", sorted({a for _, a, _ in REIDEMEISTER_PAIRS} | {b for _, _, b in REIDEMEISTER_PAIRS}))
def test_differential_squares_to_zero(name):
    C = assemble(diagram(name), 2)   # check=True verifies d o d = 0 and degree 0
    assert C.check() is C


def test_differential_with_active_coefficient():
    C = assemble(diagram("trefoil"), 2, [-1])
    C.check()
    assert any(e.variables() == {-1} for M in C.differentials.values() for row in M for e in row if e)


def test_check_detects_corruption():
    C = assemble(diagram("hopf"), 2)
    i = min(C.differentials)
    M = C.differentials[i]
    s = next(s for s in range(len(M[0])) if any(row[s] for row in M))
    t = next(t for t in range(len(M)) if M[t][s])
    M[t][s] = M[t][s] + Poly.x(1, 2)
    with pytest.raises(InvariantError):
        C.check()


def test_every_braid_fixture_assembles():
    for name in BRAIDS:
        if len(parse_braid(*BRAIDS[name]).crossings) <= 3:
            assemble(diagram(name), 2)


def test_r1_r2_shift_calibration():
    n = 3
    kink = build_cube(diagram("kink_pos"), n)
    assert {s: (v.h, v.q_shift) for s, v in kink.vertices.items()} == {(0,): (0, 1 - n), (1,): (1, -n)}
    r2 = build_cube(diagram("r2_unlink"), n)
    assert sorted(v.q_shift for v in r2.vertices.values()) == [-1, 0, 0, 1]
    assert {v.h for v in r2.vertices.values()} == {-1, 0, 1}


@pytest.mark.parametrize("name", ["unknot", "unlink2", "kink_pos", "kink_neg", "hopf", "trefoil",
                                  "r2_unlink", "r2_hopf", "r3_left"])
def test_surviving_z2_degree(name):
    # every vertex is concentrated in Z/2 degree (components + crossings) mod 2;
    # the crossing count is a fixed per-crossing shift of this presentation
    from eqkr.link import vertex_homologies
    D = diagram(name)
    data = vertex_homologies(build_cube(D, 2, zero_codes=[-1]), [])
    assert {d.homology.parity for d in data.values()} == {(D.components + len(D.crossings)) % 2}
