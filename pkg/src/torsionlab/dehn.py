"""First homology of Dehn fillings, the figure-eight family, and torsion
schedules for sequences of fillings.

Filling a one-cusp manifold along the slope p*mu + q*lambda glues in a
solid torus; the Mayer-Vietoris sequence presents H_1 of the result as
the cokernel of the map from H_1 of the boundary torus into
H_1(solid torus) + H_1(core).  The solid-torus row kills the filling
slope, so it sends (mu, lambda) to (q, -p) (any primitive annihilating
vector gives an isomorphic cokernel).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .constants import figure_eight_volume
from .exact import AbelianGroupStructure, IntegerMatrix, cokernel, rational_rank


class FillingError(ValueError):
    """Invalid slope or peripheral data."""


@dataclass(frozen=True)
class PeripheralData:
    """H_1 presentation of a compact core plus the peripheral images.

    core_presentation has one row per generator of H_1(core) and one
    column per relation.  mu_image and lambda_image are the images of the
    meridian/longitude basis of the boundary torus; lambda must be a
    torsion (or zero) class, as it is for any one-cusp manifold.
    """

    core_presentation: IntegerMatrix
    mu_image: tuple[int, ...]
    lambda_image: tuple[int, ...]

    def __post_init__(self):
        n = self.core_presentation.rows
        if len(self.mu_image) != n or len(self.lambda_image) != n:
            raise FillingError("peripheral images must have one entry per core generator")
        if any(self.lambda_image):
            with_lambda = IntegerMatrix.from_rows(
                [list(row) + [lam] for row, lam in
                 zip(self.core_presentation.entries, self.lambda_image)],
                self.core_presentation.cols + 1)
            if rational_rank(with_lambda) != rational_rank(self.core_presentation):
                raise FillingError("longitude image must be a torsion class of the core")

    @property
    def generators(self) -> int:
        return self.core_presentation.rows

    def mu_has_infinite_order(self) -> bool:
        """True when the meridian image generates an infinite cyclic subgroup."""
        if not any(self.mu_image):
            return False
        with_mu = IntegerMatrix.from_rows(
            [list(row) + [m] for row, m in
             zip(self.core_presentation.entries, self.mu_image)],
            self.core_presentation.cols + 1)
        return rational_rank(with_mu) > rational_rank(self.core_presentation)


def knot_complement_data() -> PeripheralData:
    """Peripheral data of any knot complement in the 3-sphere.

    H_1 of the core is Z generated by the meridian, and the longitude is
    nullhomologous; the figure-eight knot is the case of interest here.
    """
    return PeripheralData(
        core_presentation=IntegerMatrix.zeros(1, 0),
        mu_image=(1,),
        lambda_image=(0,),
    )


FIGURE_EIGHT = knot_complement_data()

# Fillings possibly failing to be hyperbolic, up to sign: the six
# sporadic figure-eight slopes.
FIGURE_EIGHT_EXCLUSIONS = frozenset({(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)})


@dataclass(frozen=True)
class FillingSlope:
    """Primitive class p*mu + q*lambda on the boundary torus."""

    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise FillingError("slope (0, 0) is not a curve")
        if gcd(self.p, self.q) != 1:
            raise FillingError(f"slope ({self.p}, {self.q}) is not primitive")


@dataclass(frozen=True)
class FillingResult:
    group: AbelianGroupStructure
    hyperbolic: str  # "yes" | "excluded" | "unknown"

    def to_json(self, slope: FillingSlope | None = None) -> dict:
        doc: dict = {}
        if slope is not None:
            doc["p"] = slope.p
            doc["q"] = slope.q
        doc["betti"] = self.group.betti
        doc["torsion"] = list(self.group.invariant_factors)
        doc["hyperbolic"] = self.hyperbolic
        return doc


def fill_homology(data: PeripheralData, slope: FillingSlope) -> FillingResult:
    """H_1 of the filled manifold as a cokernel.

    Rows: solid-torus generator plus core generators.  Columns: images of
    mu and lambda, then the core relations padded by zero on the
    solid-torus row.
    """
    n = data.generators
    r = data.core_presentation.cols
    rows: list[list[int]] = [[slope.q, -slope.p] + [0] * r]
    for i in range(n):
        rows.append([data.mu_image[i], data.lambda_image[i]]
                    + list(data.core_presentation.entries[i]))
    group = cokernel(IntegerMatrix.from_rows(rows, 2 + r))
    return FillingResult(group=group, hyperbolic="unknown")


def figure_eight_filling(slope: FillingSlope) -> FillingResult:
    """Filling of the figure-eight complement, with the hyperbolicity flag."""
    base = fill_homology(FIGURE_EIGHT, slope)
    excluded = (abs(slope.p), abs(slope.q)) in FIGURE_EIGHT_EXCLUSIONS
    return FillingResult(group=base.group, hyperbolic="excluded" if excluded else "yes")


def figure_eight_family(p_range: Sequence[int], q_range: Sequence[int]) -> list[dict]:
    """Filling table over all primitive slopes in the given ranges.

    Every hyperbolic member has volume strictly below the figure-eight
    volume, reported as the shared upper bound.
    """
    volume_bound = figure_eight_volume()
    table = []
    for p in p_range:
        for q in q_range:
            if (p, q) == (0, 0) or gcd(p, q) != 1:
                continue
            result = figure_eight_filling(FillingSlope(p, q))
            row = result.to_json(FillingSlope(p, q))
            row["volume_upper_bound"] = volume_bound
            table.append(row)
    return table


def ray_singer(tors_order: int, volume: float, rational_homology_sphere: bool = True) -> float:
    """Analytic torsion of a rational homology sphere:
    -log(torsion order) + log(volume).

    The regulator term of the general formula vanishes exactly in the
    rational-homology-sphere case, which is the only one implemented.
    """
    if not rational_homology_sphere:
        raise NotImplementedError("regulator computation is out of scope; "
                                  "only rational homology spheres are supported")
    if tors_order < 1:
        raise ValueError("torsion order must be a positive integer")
    if volume <= 0:
        raise ValueError("volume must be positive")
    return -math.log(tors_order) + math.log(volume)


@dataclass(frozen=True)
class ScheduleEntry:
    volume: float
    p: int
    log_ratio: float     # log(p_n) / v_n
    linear_ratio: float  # p_n / v_n


@dataclass(frozen=True)
class TorsionSchedule:
    """Torsion orders p_n for a sequence of fillings with volumes v_n.

    For finite positive alpha the prescription is p_n = floor(alpha*v_n).
    Two normalizations are reported per entry because the source formula
    conflates them: log(p_n)/v_n (log of the torsion order over volume,
    which tends to 0 for this choice of p_n) and p_n/v_n (which tends to
    alpha).  `limit_reading` names the one that reproduces the target.
    """

    alpha: float
    entries: tuple[ScheduleEntry, ...]
    limit_reading: str

    def limit_estimate(self) -> float:
        if self.limit_reading == "linear_ratio":
            return self.entries[-1].linear_ratio
        return self.entries[-1].log_ratio


def torsion_schedule(alpha: float, volumes: Sequence[float]) -> TorsionSchedule:
    """Torsion orders along an increasing volume sequence.

    alpha = inf uses p_n = floor(v_n^2) and alpha = 0 uses
    p_n = floor(sqrt(v_n)); both make the normalized quantities reach the
    target in the limit.  Torsion orders are clamped to at least 1 (a
    trivial torsion group), which only matters for volumes below 1/alpha.
    """
    if not volumes:
        raise ValueError("volume sequence must be nonempty")
    if any(v <= 0 for v in volumes):
        raise ValueError("volumes must be positive")
    if any(b <= a for a, b in zip(volumes, volumes[1:])):
        raise ValueError("volumes must be strictly increasing")
    if alpha < 0:
        raise ValueError("alpha must lie in [0, inf]")

    entries = []
    for v in volumes:
        if math.isinf(alpha):
            p = math.floor(v * v)
        elif alpha == 0:
            p = math.floor(math.sqrt(v))
        else:
            p = math.floor(alpha * v)
        p = max(p, 1)
        entries.append(ScheduleEntry(
            volume=float(v),
            p=p,
            log_ratio=math.log(p) / v,
            linear_ratio=p / v,
        ))
    return TorsionSchedule(alpha=alpha, entries=tuple(entries), limit_reading="linear_ratio")
