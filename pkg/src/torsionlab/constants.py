"""Closed-form and quadrature evaluation of the geometric constants.

Covers Euclidean and hyperbolic ball volumes, the packing ratio
N(d, r, R) bounding r-discrete sets in R-balls, the unit-vector packing
number b(d), the thick-thin epsilon assignment with its commutator chain,
the covering constants c and D, and the figure-eight knot complement
volume as a Lobachevsky-type integral.

Thick-thin quantities are exact rationals (fractions of the configured
Margulis epsilon); only genuinely transcendental values are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath
from scipy.integrate import quad

from .precision import working_precision


# --- ball volumes and the packing ratio -------------------------------------

def euclidean_ball_volume(d: int, r: float) -> float:
    """Volume of the radius-r ball in R^d: pi^(d/2) r^d / Gamma(d/2 + 1)."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if r <= 0:
        raise ValueError("radius must be positive")
    return math.pi ** (d / 2) * r ** d / math.gamma(d / 2 + 1)


def sphere_surface_area(d: int) -> float:
    """Surface area of the unit sphere S^(d-1) in R^d."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return 2 * math.pi ** (d / 2) / math.gamma(d / 2)


def hyperbolic_ball_volume(d: int, R: float) -> float:
    """Volume of the radius-R ball in hyperbolic d-space.

    surface(S^(d-1)) * integral_0^R sinh(t)^(d-1) dt, evaluated by
    adaptive quadrature; d = 2 and d = 3 use closed forms.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if R <= 0:
        raise ValueError("radius must be positive")
    if d == 1:
        return 2.0 * R
    if d == 2:
        return 2 * math.pi * (math.cosh(R) - 1)
    if d == 3:
        return math.pi * (math.sinh(2 * R) - 2 * R)
    value, _ = quad(lambda t: math.sinh(t) ** (d - 1), 0.0, R,
                    epsabs=0.0, epsrel=1e-13, limit=200)
    return sphere_surface_area(d) * value


def hyperbolic_ball_volume_mp(d: int, R: float) -> float:
    """Independent high-precision quadrature of the same volume (cross-check)."""
    if d == 1:
        return 2.0 * R
    with mpmath.workprec(working_precision()):
        integral = mpmath.quad(lambda t: mpmath.sinh(t) ** (d - 1), [0, R])
        surface = 2 * mpmath.pi ** (mpmath.mpf(d) / 2) / mpmath.gamma(mpmath.mpf(d) / 2)
        return float(surface * integral)


class VolumeRatio(NamedTuple):
    """The ratio N(d, r, R) together with its Euclidean lower bound."""

    value: float
    euclidean_lower_bound: float
    r_below_R: bool


def volume_ratio_bound(d: int, r: float, R: float) -> VolumeRatio:
    """N(d, r, R) = vol_H(B(R + r/2)) / vol_E(B(r/2)).

    Any r-discrete subset of an R-ball in a pinched Hadamard manifold has
    at most this many points.  Accepts 0 < r < 2R and flags whether the
    stricter regime r < R holds.  Also reports ((2R + r)/r)^d, the lower
    bound coming from the Euclidean volume comparison.
    """
    if r <= 0 or R <= 0:
        raise ValueError("radii must be positive")
    if r >= 2 * R:
        raise ValueError("requires r < 2R")
    value = hyperbolic_ball_volume(d, R + r / 2) / euclidean_ball_volume(d, r / 2)
    lower = ((2 * R + r) / r) ** d
    return VolumeRatio(value=value, euclidean_lower_bound=lower, r_below_R=r < R)


# --- unit-vector packing ----------------------------------------------------

def spherical_cap_area(d: int, theta: float) -> float:
    """Area of a spherical cap of angular radius theta on S^(d-1)."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    if not 0 < theta <= math.pi:
        raise ValueError("cap radius must lie in (0, pi]")
    if d == 2:
        return 2 * theta
    if d == 3:
        return 2 * math.pi * (1 - math.cos(theta))
    value, _ = quad(lambda t: math.sin(t) ** (d - 2), 0.0, theta,
                    epsabs=0.0, epsrel=1e-13, limit=200)
    return sphere_surface_area(d - 1) * value


def unit_vector_packing_bound(d: int) -> int:
    """Upper bound for the number of pairwise 1-discrete unit vectors in R^d.

    Chord >= 1 means angle >= pi/3, so caps of angular radius pi/6 have
    disjoint interiors and the count is at most area(S^(d-1))/area(cap).
    For d = 2 the pigeonhole value 6 is exact (regular hexagon).
    """
    if not 2 <= d <= 24:
        raise ValueError("dimension must be between 2 and 24")
    if d == 2:
        return 6
    return math.floor(sphere_surface_area(d) / spherical_cap_area(d, math.pi / 6))


# --- thick-thin assignment ---------------------------------------------------

def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion
    return Fraction(value)


@dataclass(frozen=True)
class ThickThinParams:
    """Margulis configuration and the derived epsilon pair.

    eps0 is the configured Margulis epsilon itself and
    eps = eps0 / (4 * m * 17^d); both are exact rationals, so
    eps * (4 * m * 17^d) == eps0 holds with no rounding.
    """

    d: int
    margulis_eps: Fraction
    margulis_index: int

    def __post_init__(self):
        object.__setattr__(self, "margulis_eps", _as_fraction(self.margulis_eps))
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if self.margulis_eps <= 0:
            raise ValueError("Margulis epsilon must be positive")
        if self.margulis_index < 1:
            raise ValueError("Margulis index must be a positive integer")

    @property
    def eps0(self) -> Fraction:
        return self.margulis_eps

    @property
    def eps(self) -> Fraction:
        return self.margulis_eps / (4 * self.margulis_index * 17 ** self.d)


@dataclass(frozen=True)
class EpsilonAssignment:
    """Weight eps0 / (4 * 17^i) attached to a centrality rank i.

    Rank 0 is the loxodromic case; parabolic ranks run up to d - 1 (the
    nilpotency degree of a cusp group is at most d - 1).
    """

    params: ThickThinParams
    centrality_rank: int

    def __post_init__(self):
        if not 0 <= self.centrality_rank <= self.params.d - 1:
            raise ValueError(f"centrality rank must lie in [0, {self.params.d - 1}]")

    @property
    def value(self) -> Fraction:
        return self.params.eps0 / (4 * 17 ** self.centrality_rank)


def thick_thin_constants(params: ThickThinParams) -> dict:
    """Exact rationals eps, eps0 plus the constraint delta must satisfy.

    delta itself is not constructible (it comes from a compactness
    argument); only its upper bound eps / (2 * (b + 1)) is reported, with
    b the unit-vector packing bound.
    """
    b = unit_vector_packing_bound(params.d) if params.d <= 24 else None
    result = {
        "d": params.d,
        "eps0": params.eps0,
        "eps": params.eps,
        "eps_over_eps0": params.eps / params.eps0,
        "delta": None,
        "delta_note": "delta is not constructed; it must satisfy delta <= eps/(2(b+1))",
    }
    if b is not None:
        result["b"] = b
        result["delta_upper_bound"] = params.eps / (2 * (b + 1))
    return result


@dataclass(frozen=True)
class CommutatorCheck:
    rank_a: int
    rank_c: int
    lhs: Fraction
    rhs: Fraction
    passes: bool


def commutator_inequality_check(d: int) -> list[CommutatorCheck]:
    """Exact check of 16/(4*17^i_a) < 1/(4*17^i_c) for all admissible ranks.

    i_a is the smaller rank of the two commuting elements and i_c <= i_a - 1
    is the rank of their commutator (the rank drops in a nilpotent group).
    Every admissible pair up to rank d - 1 must pass.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    checks = []
    for rank_a in range(1, d):
        for rank_c in range(rank_a):
            lhs = Fraction(16, 4 * 17 ** rank_a)
            rhs = Fraction(1, 4 * 17 ** rank_c)
            checks.append(CommutatorCheck(rank_a, rank_c, lhs, rhs, lhs < rhs))
    return checks


def commutator_inequality_violation(rank: int) -> CommutatorCheck:
    """The same inequality without the rank drop (i_c = i_a): always fails."""
    lhs = Fraction(16, 4 * 17 ** rank)
    rhs = Fraction(1, 4 * 17 ** rank)
    return CommutatorCheck(rank, rank, lhs, rhs, lhs < rhs)


# --- covering constants ------------------------------------------------------

@dataclass(frozen=True)
class CoveringConstants:
    """The two constants controlling the nerve of the thick-part cover."""

    c: float
    D: float
    n_eps: float
    n_delta: float


def covering_constants(d: int, eps: float, eps0: float, delta: float, b: int) -> CoveringConstants:
    """c = (N(d,eps,4*eps0)+1) / vol_E(B(delta/2)), D = (N+1) * N(d,delta,2(b+1)delta)."""
    if min(eps, eps0, delta) <= 0 or b < 1:
        raise ValueError("all parameters must be positive")
    if eps >= eps0:
        raise ValueError("requires eps < eps0")
    if delta > eps / (2 * (b + 1)):
        raise ValueError("delta must satisfy delta <= eps/(2(b+1))")
    n_eps = volume_ratio_bound(d, eps, 4 * eps0).value
    n_delta = volume_ratio_bound(d, delta, 2 * (b + 1) * delta).value
    return CoveringConstants(
        c=(n_eps + 1) / euclidean_ball_volume(d, delta / 2),
        D=(n_eps + 1) * n_delta,
        n_eps=n_eps,
        n_delta=n_delta,
    )


# --- figure-eight volume -----------------------------------------------------

def _lobachevsky_integrand(theta: float) -> float:
    return -math.log(2 * math.sin(theta))


def figure_eight_volume(refinement: int = 0) -> float:
    """6 * integral_0^(pi/3) of -log(2 sin theta) dtheta.

    The integrand has an integrable log singularity at 0, removed by the
    substitution theta = u^2.  refinement 0 uses adaptive quadrature on
    the substituted integrand; refinement 1 uses high-precision tanh-sinh
    quadrature on the raw integrand.  The two agree to well below 1e-9.
    """
    if refinement == 0:
        upper = math.sqrt(math.pi / 3)
        value, _ = quad(lambda u: _lobachevsky_integrand(u * u) * 2 * u, 0.0, upper,
                        epsabs=1e-14, epsrel=1e-13, limit=400)
        return 6.0 * value
    if refinement == 1:
        with mpmath.workprec(working_precision()):
            value = mpmath.quad(lambda t: -mpmath.log(2 * mpmath.sin(t)), [0, mpmath.pi / 3])
            return float(6 * value)
    raise ValueError("refinement must be 0 or 1")
