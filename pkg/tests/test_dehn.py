import math
import random
from math import gcd

import pytest

from torsionlab.dehn import (
    FIGURE_EIGHT,
    FIGURE_EIGHT_EXCLUSIONS,
    FillingError,
    FillingSlope,
    PeripheralData,
    fill_homology,
    figure_eight_family,
    figure_eight_filling,
    knot_complement_data,
    ray_singer,
    torsion_schedule,
)
from torsionlab.exact import AbelianGroupStructure as G
from torsionlab.exact import IntegerMatrix, cokernel


def test_slope_validation():
    with pytest.raises(FillingError):
        FillingSlope(0, 0)
    with pytest.raises(FillingError):
        FillingSlope(2, 4)
    FillingSlope(0, 1)
    FillingSlope(-3, 5)


def test_figure_eight_basic_slopes():
    assert figure_eight_filling(FillingSlope(5, 1)).group == G(0, (5,))
    assert figure_eight_filling(FillingSlope(1, 0)).group == G(0)
    assert figure_eight_filling(FillingSlope(0, 1)).group == G(1)


def test_figure_eight_torsion_order_is_p():
    for p in range(1, 51):
        for q in range(1, 11):
            if gcd(p, q) != 1:
                continue
            group = fill_homology(FIGURE_EIGHT, FillingSlope(p, q)).group
            assert group.torsion_order == p
            assert group.betti == 0


def test_exclusion_flags_match_list():
    for p in range(0, 8):
        for q in range(0, 8):
            if (p, q) == (0, 0) or gcd(p, q) != 1:
                continue
            flag = figure_eight_filling(FillingSlope(p, q)).hyperbolic
            expected = "excluded" if (p, q) in FIGURE_EIGHT_EXCLUSIONS else "yes"
            assert flag == expected


def test_exclusions_up_to_sign():
    assert figure_eight_filling(FillingSlope(-2, -1)).hyperbolic == "excluded"
    assert figure_eight_filling(FillingSlope(-5, 1)).hyperbolic == "yes"


def test_slope_sign_invariance():
    rng = random.Random(17)
    for _ in range(100):
        p = rng.randint(-30, 30)
        q = rng.randint(-30, 30)
        if (p, q) == (0, 0) or gcd(p, q) != 1:
            continue
        a = fill_homology(FIGURE_EIGHT, FillingSlope(p, q)).group
        b = fill_homology(FIGURE_EIGHT, FillingSlope(-p, -q)).group
        assert a == b


def test_solid_torus_cokernel_identity():
    # order of coker([[q, -p], [1, 0]]) is p, for any coprime pair
    rng = random.Random(23)
    checked = 0
    while checked < 500:
        p = rng.randint(1, 200)
        q = rng.randint(-200, 200)
        if gcd(p, q) != 1:
            continue
        group = cokernel(IntegerMatrix.from_rows([[q, -p], [1, 0]], 2))
        assert group.torsion_order == p
        assert group.betti == 0
        checked += 1


def test_lower_bound_with_infinite_order_meridian():
    rng = random.Random(31)
    for _ in range(50):
        # core H_1 = Z^2 + Z/k, meridian hits a free generator
        k = rng.randint(2, 9)
        data = PeripheralData(
            core_presentation=IntegerMatrix.from_rows([[0], [0], [k]], 1),
            mu_image=(1, rng.randint(-3, 3), rng.randint(0, k - 1)),
            lambda_image=(0, 0, rng.randint(0, k - 1)),
        )
        assert data.mu_has_infinite_order()
        p, q = 7, 3
        group = fill_homology(data, FillingSlope(p, q)).group
        assert group.torsion_order >= p


def test_lambda_must_be_torsion():
    with pytest.raises(FillingError):
        PeripheralData(
            core_presentation=IntegerMatrix.zeros(1, 0),
            mu_image=(1,),
            lambda_image=(1,),
        )


def test_family_table_contents():
    table = figure_eight_family(range(1, 6), range(1, 3))
    slopes = {(row["p"], row["q"]) for row in table}
    assert (2, 2) not in slopes  # gcd filter
    for row in table:
        assert row["volume_upper_bound"] == pytest.approx(2.0298832128, abs=1e-8)
        if row["p"] >= 2:
            assert row["torsion"] == [row["p"]]


def test_knot_complement_data_shape():
    data = knot_complement_data()
    assert data.generators == 1
    assert data.mu_has_infinite_order()


def test_ray_singer_values():
    assert ray_singer(1, math.e) == pytest.approx(1.0)
    assert ray_singer(5, 2.0) == pytest.approx(math.log(2 / 5))
    with pytest.raises(NotImplementedError):
        ray_singer(5, 2.0, rational_homology_sphere=False)
    with pytest.raises(ValueError):
        ray_singer(0, 1.0)


def test_schedule_finite_alpha():
    volumes = [float(n) for n in range(10, 501, 10)]
    schedule = torsion_schedule(1.0, volumes)
    assert schedule.limit_reading == "linear_ratio"
    assert schedule.limit_estimate() == pytest.approx(1.0, abs=0.01)
    # the log reading decays to zero for this prescription
    assert schedule.entries[-1].log_ratio < schedule.entries[0].log_ratio
    assert schedule.entries[-1].log_ratio < 0.02


def test_schedule_alpha_zero_and_infinity():
    volumes = [float(n) for n in range(10, 201, 10)]
    zero = torsion_schedule(0.0, volumes)
    assert zero.entries[-1].linear_ratio < zero.entries[0].linear_ratio
    assert zero.entries[-1].linear_ratio == pytest.approx(1 / math.sqrt(200), abs=0.01)
    inf = torsion_schedule(math.inf, volumes)
    assert inf.entries[-1].linear_ratio == pytest.approx(200.0)


def test_schedule_linear_reading_reaches_alpha():
    volumes = [float(n) for n in range(50, 2001, 50)]
    schedule = torsion_schedule(2.0, volumes)
    assert schedule.entries[-1].linear_ratio == pytest.approx(2.0, abs=0.01)


def test_ray_singer_tracks_normalized_torsion():
    # along any sequence with log(torsion)/vol -> alpha, tau/vol -> -alpha
    alpha = 0.7
    for volume in (40.0, 80.0, 160.0):
        torsion = int(math.exp(alpha * volume))
        value = ray_singer(torsion, volume) / volume
        assert value == pytest.approx(-alpha, abs=math.log(volume) / volume + 1e-3)
    volume = 320.0
    torsion = int(math.exp(alpha * volume))
    assert ray_singer(torsion, volume) / volume == pytest.approx(-alpha, abs=0.02)


def test_schedule_determinism_and_validation():
    volumes = [10.0, 20.0, 30.0]
    a = torsion_schedule(1.5, volumes)
    b = torsion_schedule(1.5, volumes)
    assert a == b
    with pytest.raises(ValueError):
        torsion_schedule(1.0, [])
    with pytest.raises(ValueError):
        torsion_schedule(1.0, [10.0, 10.0])
    with pytest.raises(ValueError):
        torsion_schedule(-1.0, [10.0, 20.0])
