import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constrank import cartan, irrep
from constrank.irrep import (GuardExceeded, build_irrep, build_sl2, commutator_defects, dual_module, is_cyclic,
                             root_string, shapovalov_rank, support_law_holds, symmetric_power_module,
                             weight_grading_ok, weight_multiplicity, weyl_dim)
from constrank.linalg import rank_exact

DIMS = [
    ("A1", (5,), 6), ("A2", (1, 0), 3), ("A2", (1, 1), 8), ("A2", (2, 1), 15), ("A2", (3, 0), 10),
    ("B2", (1, 0), 5), ("B2", (0, 1), 4), ("B2", (0, 2), 10), ("C2", (1, 1), 16), ("G2", (1, 0), 7),
    ("G2", (0, 1), 14), ("G2", (2, 0), 27), ("A3", (1, 1, 1), 64), ("B3", (0, 0, 1), 8), ("D4", (0, 1, 0, 0), 28),
]
SMALL = [("A1", (4,)), ("A2", (2, 1)), ("B2", (1, 1)), ("C2", (1, 1)), ("G2", (1, 0)), ("G2", (0, 1)),
         ("A3", (1, 0, 1)), ("B3", (1, 0, 0))]


@pytest.mark.parametrize("name,lam,dim", DIMS)
def test_dimension_matches_table(name, lam, dim):
    rs = cartan.build_root_system(name)
    assert weyl_dim(rs, lam) == dim
    assert build_irrep(rs, lam).dim == dim


@pytest.mark.parametrize("name,lam", SMALL)
def test_structure(name, lam):
    M = build_irrep(cartan.build_root_system(name), lam)
    assert commutator_defects(M) == []
    assert weight_grading_ok(M)
    assert is_cyclic(M)
    assert support_law_holds(M)


@pytest.mark.parametrize("name,lam", SMALL)
def test_shapovalov_rank_confirms_basis(name, lam):
    rs = cartan.build_root_system(name)
    M = build_irrep(rs, lam)
    assert shapovalov_rank(rs, lam, M.words) == M.dim
    # basis vectors really are the f-words applied to the top vector
    for b in range(1, M.dim):
        i, p = M.parents[b]
        assert M.words[b] == (i,) + M.words[p]
        assert M.apply(M.F[i], {p: Fraction(1)}) == {b: Fraction(1)}


def test_known_multiplicities():
    A2 = cartan.build_root_system("A2")
    G2 = cartan.build_root_system("G2")
    assert weight_multiplicity(build_irrep(A2, (1, 1)), (0, 0)) == 2
    assert weight_multiplicity(build_irrep(A2, (2, 2)), (0, 0)) == 3
    assert weight_multiplicity(build_irrep(G2, (0, 1)), (0, 0)) == 2
    assert weight_multiplicity(build_irrep(G2, (1, 0)), (0, 0)) == 1
    assert weight_multiplicity(build_irrep(G2, (2, 0)), (0, 0)) == 3


@pytest.mark.parametrize("name,lam", SMALL + [("G2", (1, 1))])
def test_weyl_symmetry_of_multiplicities(name, lam):
    rs = cartan.build_root_system(name)
    M = build_irrep(rs, lam)
    for g in M.support():
        for i in range(rs.rank):
            assert weight_multiplicity(M, cartan.simple_reflection(rs, i, g)) == weight_multiplicity(M, g)


@pytest.mark.parametrize("name,lam", SMALL)
def test_root_strings(name, lam):
    rs = cartan.build_root_system(name)
    M = build_irrep(rs, lam)
    for g in M.support():
        for beta in rs.positive_roots:
            p, q = root_string(M, g, beta)
            assert rs.coroot_pairing(g, rs.to_simple_coords(beta)) == q - p


def test_sl2_closed_form_is_a_module():
    for n in range(8):
        M = build_sl2(n)
        assert commutator_defects(M) == [] and weight_grading_ok(M) and is_cyclic(M)


@pytest.mark.parametrize("name,lam", [("A2", (2, 0)), ("A3", (1, 2, 0)), ("G2", (1, 0)), ("B2", (0, 1))])
def test_dual_module(name, lam):
    rs = cartan.build_root_system(name)
    D = dual_module(build_irrep(rs, lam))
    assert commutator_defects(D) == []
    assert weight_grading_ok(D)
    assert D.highest_weight == cartan.minus_w0(rs, lam)
    V = build_irrep(rs, D.highest_weight)
    assert sorted(D.weights) == sorted(V.weights)
    assert len(irrep.intertwiners(V, D)) == 1


def test_symmetric_power():
    A2 = cartan.build_root_system("A2")
    S = symmetric_power_module(build_irrep(A2, (1, 0)), 3)
    assert S.dim == 10 and commutator_defects(S) == [] and weight_grading_ok(S)
    assert sorted(S.weights) == sorted(build_irrep(A2, (3, 0)).weights)
    with pytest.raises(GuardExceeded):
        symmetric_power_module(build_irrep(A2, (1, 1)), 6, guard=100)


def test_guard_and_bad_weights():
    A2 = cartan.build_root_system("A2")
    with pytest.raises(GuardExceeded):
        build_irrep(A2, (9, 9), guard=50)
    with pytest.raises(ValueError):
        build_irrep(A2, (1, -1))
    with pytest.raises(ValueError):
        build_irrep(A2, (1,))


def test_intertwiner_with_closed_form():
    A1 = cartan.build_root_system("A1")
    for n in range(6):
        (T,) = irrep.intertwiners(build_irrep(A1, (n,)), build_sl2(n))
        assert rank_exact(T) == n + 1
    assert irrep.intertwiners(build_irrep(A1, (3,)), build_sl2(2)) == []


def test_module_document_is_exact():
    A2 = cartan.build_root_system("A2")
    doc = json.loads(build_irrep(A2, (1, 1)).dumps())
    assert doc["highest_weight"] == [1, 1]
    assert doc["dim"] == 8
    assert json.loads(build_irrep(A2, (1, 1)).dumps()) == doc


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_dim_equals_weyl_dim_b2(a, b):
    rs = cartan.build_root_system("B2")
    M = build_irrep(rs, (a, b))
    assert M.dim == weyl_dim(rs, (a, b)) == sum(weight_multiplicity(M, g) for g in M.support())
