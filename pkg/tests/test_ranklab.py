import csv
import io
import itertools
import json
from fractions import Fraction
from math import comb

import pytest

from constrank import cartan
from constrank.ranklab import (LinearMatrixSpace, RankConfig, TheoremConditions, VerdictKind, corank1_pipeline,
                               generic_rank_estimate, rank_at_closed_orbit, sl2_scan, sl2_summand_matrix,
                               summand_matrix_checks, theorem_conditions, verdict, wedge_kernel_compare,
                               wedge_theta)
from constrank.ranklab.sl2 import CSV_FIELDS, corank_of, scan_cell
from constrank.ranklab.verdict import SemicontinuityError, corank


def diag_space(*diagonals):
    n = len(diagonals[0])
    return LinearMatrixSpace((n, n), [{(r, r): Fraction(d[r]) for r in range(n) if d[r]} for d in diagonals])


def test_verdict_rules():
    L = diag_space((1, 1, 0), (0, 1, 1))
    v = verdict(L, 3, TheoremConditions(False), RankConfig(samples=20))
    assert v.kind is VerdictKind.CERTIFIED_NOT_CONSTANT
    assert v.min_rank_witness[1] == 2 and v.max_rank_witness[1] == 3
    assert v.common_rank is None

    L = diag_space((1, 1, 0))
    assert verdict(L, 3, TheoremConditions(True, 0, 1)).kind is VerdictKind.CONSTANT_CORANK_ONE
    assert verdict(L, 3, TheoremConditions(False)).kind is VerdictKind.PROBABLY_CONSTANT
    assert verdict(L, 4, TheoremConditions(True, 0, 1)).kind is VerdictKind.PROBABLY_CONSTANT


def test_semicontinuity_violation_is_reported():
    # rank 2 at e_0 but 0 whenever the first coordinate vanishes
    L = diag_space((1, 1), (0, 0))
    with pytest.raises(SemicontinuityError):
        verdict(L, 2, TheoremConditions(False), RankConfig(samples=50, bound=1))


def test_degenerate_space_rejected():
    with pytest.raises(ValueError):
        verdict(diag_space((0, 0)), 2, TheoremConditions(False))


def test_generic_rank_estimate_is_deterministic():
    L = diag_space((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert generic_rank_estimate(L, 5, 10, 7) == generic_rank_estimate(L, 5, 10, 7)
    assert rank_at_closed_orbit(L) == 1


def test_theorem_conditions():
    A1, A2 = cartan.build_root_system("A1"), cartan.build_root_system("A2")
    assert theorem_conditions(A1, (4,), (4,), (6,)) == TheoremConditions(True, 0, 1)
    assert theorem_conditions(A1, (2,), (4,), (4,)) == TheoremConditions(True, 0, 2)
    assert not theorem_conditions(A1, (3,), (4,), (5,)).holds
    assert theorem_conditions(A2, (1, 0), (3, 0), (2, 1)) == TheoremConditions(True, 0, 3)
    assert not theorem_conditions(A2, (1, 1), (1, 1), (0, 3)).holds


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_multiple_of_fundamental_weight_on_nu_or_mu(name):
    # with mu = d nu (d >= 1), asking nu to be a multiple of omega_i is the same as asking it of mu
    rs = cartan.build_root_system(name)
    box = list(itertools.product(range(4), repeat=2))
    for nu, mu in itertools.product(box, box):
        for i in range(2):
            lam = cartan.sub(cartan.add(nu, mu), rs.simple_root(i))
            if not cartan.is_dominant(lam):
                continue
            got = theorem_conditions(rs, nu, mu, lam)
            d = next((d for d in range(1, 4) if cartan.scale(d, nu) == mu), None)
            alt = d is not None and nu[i] > 0 and nu[1 - i] == 0
            if alt:
                assert got.holds and got.d == d
            elif got.holds:
                assert got.i != i


def test_pipeline_certifies_theorem_cases():
    A1, A2 = cartan.build_root_system("A1"), cartan.build_root_system("A2")
    rep = corank1_pipeline(A1, (2,), (2,), (2,))
    assert rep.kinds == [VerdictKind.CONSTANT_CORANK_ONE]
    assert rep.consistent and rep.sym_vanishing
    assert corank(rep, rep.candidates[0]) == 1
    rep = corank1_pipeline(A2, (1, 0), (1, 0), (0, 1))
    assert rep.kinds == [VerdictKind.CONSTANT_CORANK_ONE]


def test_pipeline_detects_non_constant_rank():
    rep = corank1_pipeline(cartan.build_root_system("A1"), (4,), (2,), (2,))
    assert rep.kinds == [VerdictKind.CERTIFIED_NOT_CONSTANT]
    assert rep.consistent


def test_pipeline_with_repeated_summand_tries_combinations():
    A2 = cartan.build_root_system("A2")
    rep = corank1_pipeline(A2, (1, 1), (1, 1), (1, 1))
    assert rep.multiplicity == 2
    assert len(rep.candidates) == 4
    assert rep.to_dict()["multiplicity"] == 2


def test_pipeline_when_nu_is_absent():
    rep = corank1_pipeline(cartan.build_root_system("A1"), (1,), (2,), (2,))
    assert rep.multiplicity == 0 and rep.candidates == []


def test_report_replays_from_seed():
    A2 = cartan.build_root_system("A2")
    a = corank1_pipeline(A2, (1, 1), (1, 1), (1, 1), RankConfig(seed=5)).to_dict()
    b = corank1_pipeline(A2, (1, 1), (1, 1), (1, 1), RankConfig(seed=5)).to_dict()
    assert a == b and a["seed"] == 5


def test_summand_matrix_example():
    high, low = sl2_summand_matrix(2, 3, 1)
    assert high == [[0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    assert low == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]
    with pytest.raises(ValueError):
        sl2_summand_matrix(3, 2, 0)


@pytest.mark.parametrize("m,n,k", [(0, 0, 0), (2, 2, 1), (3, 5, 2), (4, 4, 0), (5, 7, 3)])
def test_summand_matrix_is_the_primitive_vector(m, n, k):
    res = summand_matrix_checks(m, n, k)
    assert res["weight_ok"] and res["primitive_in_tensor"] and res["primitive_in_hom"]
    assert res["corank_high"] == k


def test_sum_of_extreme_vectors_necessary_condition():
    # for k >= 1, corank k of highest + lowest forces 2m - n + 1 >= 3k
    for n in range(11):
        for m in range(n + 1):
            for k in range(1, m + 1):
                high, low = sl2_summand_matrix(m, n, k)
                both = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(high, low)]
                if corank_of(both) == k:
                    assert 2 * m - n + 1 >= 3 * k, (m, n, k)


def test_binomial_band():
    m, n, k = 6, 8, 2
    high, _ = sl2_summand_matrix(m, n, k)
    for i in range(m - k + 1):
        assert high[m - i][n - m + k + i] == (-1) ** i * comb(m - k, i)
    assert sum(1 for row in high for x in row if x) == m - k + 1


def test_scan_small_and_formats():
    res = sl2_scan(4)
    assert len(res.rows) == sum((m + 1) for n in range(5) for m in range(n + 1))
    assert not res.flagged and not res.inconsistent and not res.truncated
    rows = list(csv.DictReader(io.StringIO(res.to_csv())))
    assert list(rows[0]) == CSV_FIELDS
    assert [(int(r["m"]), int(r["n"]), int(r["k"])) for r in rows] == sorted(
        (int(r["m"]), int(r["n"]), int(r["k"])) for r in rows)
    doc = json.loads(res.to_json())
    assert doc["flagged"] == 0 and len(doc["rows"]) == len(rows)
    assert res.to_csv() == sl2_scan(4).to_csv()


def test_scan_cell_corank():
    row = scan_cell(4, 4, 2, RankConfig())
    assert row.nu == 4 and row.verdict == VerdictKind.CERTIFIED_NOT_CONSTANT.value
    row = scan_cell(4, 6, 1, RankConfig())
    assert row.verdict == VerdictKind.CONSTANT_CORANK_ONE.value and row.rank_closed_orbit == 4


def test_wedge_example_and_shape():
    assert wedge_kernel_compare(4, 1, 2) == (2, 0)
    L = wedge_theta(5, 2, 1)
    assert L.shape == (10, 10) and L.param_dim == 5
    with pytest.raises(ValueError):
        wedge_theta(4, 2, 2)


def test_wedge_map_is_exterior_multiplication():
    # e_0 ^ (e_1 ^ e_2) = e_0 ^ e_1 ^ e_2 and e_2 ^ (e_0 ^ e_1) = + e_0 ^ e_1 ^ e_2
    L = wedge_theta(4, 2, 1)
    src = list(itertools.combinations(range(4), 2))
    tgt = list(itertools.combinations(range(4), 3))
    assert L.matrices[0][(tgt.index((0, 1, 2)), src.index((1, 2)))] == 1
    assert L.matrices[2][(tgt.index((0, 1, 2)), src.index((0, 1)))] == 1
    assert L.matrices[1][(tgt.index((0, 1, 2)), src.index((0, 2)))] == -1
