from fractions import Fraction

import pytest

from eqkr.fixtures import diagram
from eqkr.homology import (compute, euler_characteristic, format_laurent,
                           homology_euler, invariance_check)
from eqkr.link import assemble


def test_format_laurent():
    assert format_laurent({-1: 1, 1: 1}) == "q^-1 + q"
    assert format_laurent({0: 2, 4: -1}) == "2 - q^4"
    assert format_laurent({-8: -1, -4: 1, -2: 1, 0: 1}) == "-q^-8 + q^-4 + q^-2 + 1"
    assert format_laurent({}) == "0"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unknot_a_zero(n):
    raw = compute(diagram("unknot"), n)
    assert raw.table == {(0, 2 * k): 1 for k in range(n)}
    sym = compute(diagram("unknot"), n, normalize=True)
    assert sym.table == {(0, 2 * k + 1 - n): 1 for k in range(n)}


def test_unknot_pid():
    r = compute(diagram("unknot"), 2, "pid")
    assert r.table == {(0, 0): 1, (0, 2): 1} and r.torsion == []


def test_trefoil_reports():
    D = diagram("trefoil")
    az = compute(D, 2)
    assert az.table == {(0, -2): 1, (0, 0): 1, (2, -4): 1, (3, -8): 1}
    pid = compute(D, 2, "pid")
    assert pid.table == {(0, -2): 1, (0, 0): 1}
    assert pid.torsion == [(3, -8, 1)]
    sp = compute(D, 2, "specialized", values={0: 1})
    assert sp.table == {(0, None): 2} and not sp.graded


@pytest.mark.parametrize("name", ["unknot", "kink_pos", "kink_neg", "hopf", "trefoil",
                                  "trefoil_mirror", "r2_unlink", "r3_left"])
@pytest.mark.parametrize("mode", ["a_zero", "pid"])
def test_euler_consistency(name, mode):
    r = compute(diagram(name), 2, mode)
    assert homology_euler(r) == r.euler


def test_euler_n3():
    for name in ("unknot", "hopf", "kink_neg"):
        r = compute(diagram(name), 3)
        assert homology_euler(r) == r.euler
    r = compute(diagram("hopf"), 3, "pid", keep=1)
    assert homology_euler(r) == r.euler


def test_kink_and_flat_unknot_share_euler():
    e0 = euler_characteristic(assemble(diagram("unknot"), 2))
    for kink in ("kink_pos", "kink_neg"):
        assert euler_characteristic(assemble(diagram(kink), 2)) == e0


def test_json_is_deterministic():
    a = compute(diagram("hopf"), 2, "pid").to_json()
    b = compute(diagram("hopf"), 2, "pid").to_json()
    assert a == b
    assert '"mode": "pid"' in a and '"keep": "a0"' in a


def test_report_text():
    r = compute(diagram("trefoil"), 2, "pid")
    text = r.to_text()
    assert "torsion at i=3, j=-8: Q[a0]/(a0^1)" in text and "euler" in text
    sp = compute(diagram("unknot"), 3, "specialized", values={0: Fraction(1, 2), 1: 0})
    assert "(ungraded)" in sp.to_text() and sp.total_rank() == 3


def test_invariance_check_reports_differences():
    ok = invariance_check(diagram("kink_pos"), diagram("unknot"), 2)
    assert ok and ok.diff() == "identical"
    bad = invariance_check(diagram("hopf"), diagram("unknot"), 2)
    assert not bad and "vs" in bad.diff()


def test_mode_errors():
    with pytest.raises(ValueError):
        compute(diagram("unknot"), 2, "pid", keep=1)
    with pytest.raises(ValueError):
        compute(diagram("unknot"), 2, "specialized", values={3: 1})
    with pytest.raises(ValueError):
        compute(diagram("unknot"), 2, "nonsense")
