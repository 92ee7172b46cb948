from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from constrank import cartan
from constrank.cartan import RootSystemError, RootSystemSpec, build_root_system

CARTAN = {
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "G2": ((2, -3), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
}
WEYL_ORDER = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12, "B3": 48, "C3": 48, "D4": 192}


@pytest.mark.parametrize("name", sorted(CARTAN))
def test_cartan_matrix(name):
    assert build_root_system(name).cartan_matrix == CARTAN[name]


@pytest.mark.parametrize("name,count", [("A1", 1), ("A4", 10), ("B3", 9), ("C4", 16), ("D4", 12), ("G2", 6)])
def test_positive_root_count(name, count):
    assert len(build_root_system(name).positive_roots) == count


def test_g2_highest_root():
    rs = build_root_system("G2")
    assert max(rs.positive_roots_simple, key=sum) == (3, 2)
    assert rs.root_norm((1, 0)) * 3 == rs.root_norm((0, 1))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_weyl_group_order(name):
    rs = build_root_system(name)
    words = cartan.weyl_group_words(rs)
    assert len(words) == WEYL_ORDER[name]
    assert words[0] == []
    assert len(words[-1]) == len(rs.positive_roots)
    assert cartan.apply_word(rs, words[-1], rs.rho) == tuple(-c for c in rs.rho)


def test_weyl_cap_is_enforced():
    with pytest.raises(RootSystemError):
        cartan.weyl_group_words(build_root_system("D4"))
    assert len(cartan.weyl_group_words(build_root_system("D4"), cap=200)) == 192


@pytest.mark.parametrize("text", ["E6", "X2", "G3", "B1", "A0", "A", ""])
def test_invalid_root_systems(text):
    with pytest.raises(RootSystemError):
        RootSystemSpec.parse(text)


def test_minus_w0():
    A3 = build_root_system("A3")
    assert cartan.minus_w0(A3, (1, 2, 0)) == (0, 2, 1)
    for name in ("B2", "G2", "C3"):
        rs = build_root_system(name)
        lam = tuple(range(1, rs.rank + 1))
        assert cartan.minus_w0(rs, lam) == lam


def test_rho_pairs_to_one():
    for name in ("A3", "B3", "G2", "D4"):
        rs = build_root_system(name)
        for i in range(rs.rank):
            assert rs.coroot_pairing(rs.rho, rs.to_simple_coords(rs.simple_root(i))) == 1


small_weights = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@settings(max_examples=80, deadline=None)
@given(small_weights, small_weights, small_weights)
def test_dominance_is_a_partial_order(a, b, c):
    rs = build_root_system("B2")
    leq = lambda x, y: cartan.dominance_leq(rs, x, y)[0]
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@settings(max_examples=80, deadline=None)
@given(small_weights, small_weights)
def test_dominance_certificate(a, b):
    rs = build_root_system("G2")
    ok, x = cartan.dominance_leq(rs, a, b)
    if ok:
        assert rs.to_weight(x) == cartan.sub(b, a)
        assert all(c >= 0 for c in x)


@settings(max_examples=60, deadline=None)
@given(small_weights, st.integers(1, 5))
def test_dominant_representative_is_scale_equivariant(g, k):
    rs = build_root_system("G2")
    dom, word = cartan.dominant_representative(rs, g)
    assert cartan.is_dominant(dom)
    assert cartan.apply_word(rs, word, g) == dom
    assert cartan.dominant_representative(rs, cartan.scale(k, g))[0] == cartan.scale(k, dom)


def _lp_in_hull(points, target):
    n = len(points)
    A_eq = [[p[j] for p in points] for j in range(len(target))] + [[1] * n]
    b_eq = list(target) + [1]
    res = linprog([0] * n, A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * n, method="highs")
    return res.status == 0


@pytest.mark.parametrize("name,lam", [("A2", (2, 1)), ("B2", (1, 2)), ("G2", (1, 1)), ("C2", (0, 3))])
def test_convex_hull_test_matches_linear_programming(name, lam):
    rs = build_root_system(name)
    orbit = sorted(cartan.weyl_orbit(rs, lam))
    for x in range(-6, 7):
        for y in range(-6, 7):
            assert cartan.in_convex_hull_of_orbit(rs, lam, (x, y)) == _lp_in_hull(orbit, (x, y)), (x, y)


def test_dominant_weights_below():
    A2 = build_root_system("A2")
    assert set(cartan.dominant_weights_below(A2, (2, 2))) == {(2, 2), (3, 0), (0, 3), (1, 1), (0, 0)}
    for g in cartan.dominant_weights_below(A2, (4, 1)):
        assert cartan.dominance_leq(A2, g, (4, 1))[0]


def test_to_simple_coords_is_exact():
    B3 = build_root_system("B3")
    assert B3.to_simple_coords((0, 0, 1)) == (Fraction(1, 2), Fraction(1), Fraction(3, 2))
    assert not cartan.root_lattice_member(B3, (0, 0, 1))
    assert cartan.root_lattice_member(B3, (1, 0, 0))


def test_parse_weight():
    assert cartan.parse_weight("1,0,2") == (1, 0, 2)
    with pytest.raises(ValueError):
        cartan.parse_weight("1;2")
