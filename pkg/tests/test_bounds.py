import math
import random

import pytest

from torsionlab import complexes
from torsionlab.bounds import (
    batch_verify_dv,
    batch_verify_soule,
    dv_torsion_check,
    soule_bound,
)
from torsionlab.exact import IntegerMatrix, cokernel
from torsionlab.simplicial import SimplicialPair, boundary_matrix, empty_complex


def test_soule_diagonal_equality():
    report = soule_bound(IntegerMatrix.diagonal([2, 3]))
    assert report.chosen_columns == (0, 1)
    assert report.bound == pytest.approx(6.0)
    assert report.exact_torsion == 6
    assert report.holds
    assert report.bound_squared == report.exact_torsion ** 2


@pytest.mark.parametrize("diag", [[1, 1], [2, 5, 9], [3], [4, 4, 4, 4]])
def test_soule_equality_on_positive_diagonals(diag):
    report = soule_bound(IntegerMatrix.diagonal(diag))
    product = math.prod(diag)
    assert report.exact_torsion == product
    assert report.bound_squared == product ** 2
    assert report.holds


def test_soule_hollow_triangle_boundary():
    d1 = boundary_matrix(complexes.hollow_triangle(), 1)
    report = soule_bound(d1)
    assert report.exact_torsion == 1
    assert report.holds
    # each selected column has norm sqrt(2)
    assert report.bound == pytest.approx(2 ** (len(report.chosen_columns) / 2))


def test_soule_zero_matrix():
    report = soule_bound(IntegerMatrix.zeros(3, 3))
    assert report.chosen_columns == ()
    assert report.exact_torsion == 1
    assert report.bound == pytest.approx(1.0)
    assert report.holds


def test_soule_verdict_is_column_permutation_invariant():
    rng = random.Random(99)
    for _ in range(30):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        entries = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        mat = IntegerMatrix.from_rows(entries, cols)
        perm = list(range(cols))
        rng.shuffle(perm)
        permuted = IntegerMatrix.from_rows([[row[j] for j in perm] for row in entries], cols)
        assert soule_bound(mat).holds == soule_bound(permuted).holds


def test_soule_small_norm_heuristic_tightens():
    mat = IntegerMatrix.from_rows([[100, 1, 0], [0, 0, 1]], 3)
    default = soule_bound(mat)
    tight = soule_bound(mat, prefer_small_norms=True)
    assert default.holds and tight.holds
    assert tight.bound <= default.bound


def test_soule_batch_holds():
    summary = batch_verify_soule(300, seed=7)
    assert summary.all_hold
    assert summary.max_ratio <= 1.0 + 1e-12


def test_soule_chosen_columns_form_image_basis():
    from torsionlab.exact import rational_rank
    rng = random.Random(41)
    for _ in range(25):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = IntegerMatrix.from_rows(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)], cols)
        report = soule_bound(mat)
        assert len(report.chosen_columns) == rational_rank(mat)
        submatrix = IntegerMatrix.from_rows(
            [[row[j] for j in report.chosen_columns] for row in mat.entries],
            len(report.chosen_columns))
        assert rational_rank(submatrix) == len(report.chosen_columns)


def test_dv_check_rp2():
    k = complexes.projective_plane_6()
    pair = SimplicialPair(total=k, sub=empty_complex(k.vertex_count))
    report = dv_torsion_check(pair, 1)
    assert (report.D, report.V) == (5, 6)
    assert report.torsion_order == 2
    assert report.log_bound == pytest.approx(5 * 6 * math.log(2))
    assert report.holds


def test_dv_check_self_pair_trivial():
    k = complexes.torus_7()
    pair = SimplicialPair(total=k, sub=k)
    for p in (1, 2):
        report = dv_torsion_check(pair, p)
        assert report.torsion_order == 1
        assert report.log_torsion == 0.0
        assert report.holds


def test_dv_bound_monotone_in_budget():
    k = complexes.projective_plane_6()
    pair = SimplicialPair(total=k, sub=empty_complex(k.vertex_count))
    report = dv_torsion_check(pair, 1)
    # enlarging D or V only increases the bound
    assert report.log_bound <= (report.D + 1) ** 1 * report.V * math.log(2)
    assert report.log_bound <= report.D ** 1 * (report.V + 1) * math.log(2)


def test_dv_batch_holds_with_pairs():
    summary = batch_verify_dv(30, seed=3, with_subcomplexes=True)
    assert summary.all_hold
    assert summary.max_ratio <= 1.0


def test_batch_rejects_bad_count():
    with pytest.raises(ValueError):
        batch_verify_soule(0, seed=1)
    with pytest.raises(ValueError):
        batch_verify_dv(0, seed=1)


def test_batch_failure_payload_reproduces():
    # sanity-check the reporting path: tamper with a record to ensure the
    # instance payload fully determines the check
    summary = batch_verify_soule(5, seed=1)
    for record in summary.records:
        assert set(record) >= {"index", "rows", "cols", "torsion", "bound", "holds"}


def test_ratio_zero_for_trivial_torsion():
    report = soule_bound(IntegerMatrix.identity(3))
    assert report.ratio() == 0.0
