"""Nerves of finite covers by metric balls in Euclidean or hyperbolic space.

Ball covers are good covers (balls are convex, and so are their
intersections), so by the nerve lemma the nerve has the homology of the
union.  Pairwise incidence is decided exactly from center distances;
higher tuples by cyclic projection onto the balls with a certified
margin: a tuple that can be neither certified feasible nor certified
infeasible raises instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import hyperbolic as hyp
from .exact import AbelianGroupStructure
from .homology import all_homology
from .simplicial import SimplicialComplex, SimplicialPair, build_complex

FEASIBLE_TOL = 1e-12
INFEASIBLE_MARGIN = 1e-7
STALL_TOL = 1e-14
MAX_SWEEPS = 50_000


class IndeterminateIntersectionError(RuntimeError):
    """A tuple of balls whose common intersection cannot be certified."""

    def __init__(self, indices: tuple[int, ...]):
        self.indices = indices
        super().__init__(f"cannot certify intersection of balls {indices}")


class EuclideanSpace:
    """Flat R^d with the usual metric."""

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self.kind = "E"

    def check_point(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ValueError(f"point must have {self.dimension} coordinates")
        return x

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(np.linalg.norm(x - y))

    def project_to_ball(self, x: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
        d = self.distance(x, center)
        if d <= radius:
            return x
        return center + (x - center) * (radius / d)

    def seed_point(self, centers: Sequence[np.ndarray]) -> np.ndarray:
        return np.mean(np.stack(centers), axis=0)


class HyperbolicSpace:
    """Hyperbolic d-space in the hyperboloid model."""

    def __init__(self, dimension: int):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self.kind = "H"

    def check_point(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension + 1,):
            raise ValueError(f"hyperboloid point must have {self.dimension + 1} coordinates")
        return hyp.make_point(x)

    def distance(self, x: np.ndarray, y: np.ndarray) -> float:
        return hyp.distance(x, y)

    def project_to_ball(self, x: np.ndarray, center: np.ndarray, radius: float) -> np.ndarray:
        d = self.distance(x, center)
        if d <= radius:
            return x
        u = (x - math.cosh(d) * center) / math.sinh(d)
        return hyp.make_point(hyp.exp_map(center, u, radius))

    def seed_point(self, centers: Sequence[np.ndarray]) -> np.ndarray:
        return hyp.make_point(np.mean(np.stack(centers), axis=0))


@dataclass(frozen=True)
class BallCover:
    """Finite family of closed balls; the index set is the list position."""

    space: EuclideanSpace | HyperbolicSpace
    elements: tuple[tuple[np.ndarray, float], ...]

    @classmethod
    def of(cls, space, balls: Sequence[tuple[Sequence[float], float]]) -> "BallCover":
        elems = []
        for center, radius in balls:
            if radius <= 0:
                raise ValueError("ball radii must be positive")
            elems.append((space.check_point(np.asarray(center, dtype=float)), float(radius)))
        return cls(space=space, elements=tuple(elems))

    def __len__(self) -> int:
        return len(self.elements)


def balls_intersect(space, a: tuple[np.ndarray, float], b: tuple[np.ndarray, float]) -> bool:
    return space.distance(a[0], b[0]) <= a[1] + b[1]


def common_point_exists(space, balls: Sequence[tuple[np.ndarray, float]],
                        indices: tuple[int, ...]) -> bool:
    """Certified feasibility of a common point, by cyclic projections.

    Feasible: some iterate violates every ball constraint by at most
    FEASIBLE_TOL.  Infeasible: the sweep map reaches a numerical fixed
    point whose worst violation still exceeds INFEASIBLE_MARGIN.  Anything
    in between raises.
    """
    point = space.seed_point([c for c, _ in balls])
    prev = None
    for _ in range(MAX_SWEEPS):
        for center, radius in balls:
            point = space.project_to_ball(point, center, radius)
        violation = max(space.distance(point, c) - r for c, r in balls)
        if violation <= FEASIBLE_TOL:
            return True
        if prev is not None and space.distance(point, prev) < STALL_TOL:
            if violation > INFEASIBLE_MARGIN:
                return False
            raise IndeterminateIntersectionError(indices)
        prev = point
    raise IndeterminateIntersectionError(indices)


def nerve(cover: BallCover, max_dim: int | None = None) -> SimplicialComplex:
    """Nerve complex of the cover, up to the dimension cap.

    A tuple of indices spans a simplex exactly when the closed balls have
    a common point.  The default cap is the space dimension + 1; homology
    below the cap is unaffected by it.
    """
    if max_dim is None:
        max_dim = cover.space.dimension + 1
    if max_dim < 1:
        raise ValueError("dimension cap must be at least 1")
    n = len(cover)
    space = cover.space
    simplices: set[tuple[int, ...]] = {(i,) for i in range(n)}

    adjacency: dict[int, set[int]] = {i: set() for i in range(n)}
    for i, j in combinations(range(n), 2):
        if balls_intersect(space, cover.elements[i], cover.elements[j]):
            simplices.add((i, j))
            adjacency[i].add(j)
            adjacency[j].add(i)

    frontier = sorted(s for s in simplices if len(s) == 2)
    for k in range(2, max_dim + 1):
        next_frontier = []
        for s in frontier:
            common = set.intersection(*(adjacency[v] for v in s))
            for w in sorted(common):
                if w > s[-1]:
                    candidate = s + (w,)
                    if candidate in simplices:
                        continue
                    balls = [cover.elements[i] for i in candidate]
                    if common_point_exists(space, balls, candidate):
                        simplices.add(candidate)
                        next_frontier.append(candidate)
        frontier = next_frontier
        if not frontier:
            break
    return build_complex(simplices, vertex_count=n)


@dataclass(frozen=True)
class NervePair:
    """Nerve of a cover with the embedded nerve of a shrunken subfamily."""

    nerve: SimplicialComplex
    sub_nerve: SimplicialComplex

    def __post_init__(self):
        if not self.sub_nerve.simplices <= self.nerve.simplices:
            raise ValueError("sub-nerve is not a subcomplex of the nerve")

    def as_pair(self) -> SimplicialPair:
        return SimplicialPair(total=self.nerve, sub=self.sub_nerve)


def relative_nerve(cover: BallCover, subfamily: Sequence[int],
                   shrink: Sequence[float], max_dim: int | None = None) -> NervePair:
    """Nerve of the cover plus the nerve of the shrunken subfamily.

    The subfamily keeps its original indices, so its nerve is a genuine
    subcomplex of the full nerve (shrunken balls that meet force the
    originals to meet).
    """
    indices = list(subfamily)
    if len(shrink) != len(indices):
        raise ValueError("one shrink radius per subfamily index required")
    for j, r in zip(indices, shrink):
        if not 0 < r <= cover.elements[j][1]:
            raise ValueError(f"shrink radius for index {j} must be in (0, original radius]")

    total = nerve(cover, max_dim=max_dim)
    if not indices:
        sub = SimplicialComplex(vertex_count=len(cover), simplices=frozenset())
        return NervePair(nerve=total, sub_nerve=sub)

    sub_cover = BallCover(
        space=cover.space,
        elements=tuple((cover.elements[j][0], float(r)) for j, r in zip(indices, shrink)),
    )
    local = nerve(sub_cover, max_dim=max_dim)
    relabeled = {tuple(sorted(indices[v] for v in s)) for s in local.simplices}
    sub = SimplicialComplex(vertex_count=len(cover), simplices=frozenset(relabeled))
    return NervePair(nerve=total, sub_nerve=sub)


@dataclass(frozen=True)
class NerveLemmaReport:
    computed: tuple[AbelianGroupStructure, ...]
    reference: tuple[AbelianGroupStructure, ...]
    mismatches: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def nerve_lemma_check(cover: BallCover, reference: Sequence[AbelianGroupStructure],
                      max_dim: int | None = None) -> NerveLemmaReport:
    """Compare nerve homology against known homology of the cover's union.

    Degrees checked run over the reference list, which must stay below
    the dimension cap (the cap skeleton distorts homology at the cap
    itself).
    """
    cap = cover.space.dimension + 1 if max_dim is None else max_dim
    if len(reference) > cap:
        raise ValueError("reference list reaches the dimension cap; raise max_dim")
    complex_ = nerve(cover, max_dim=cap)
    computed = tuple(all_homology(complex_, up_to=len(reference) - 1))
    mismatches = tuple(k for k, (got, want) in enumerate(zip(computed, reference)) if got != want)
    return NerveLemmaReport(computed=computed, reference=tuple(reference), mismatches=mismatches)


# --- cover file format -------------------------------------------------------
#
#   space E 2        (or: space H 3)
#   ball x1 ... xd r    Euclidean coordinates, or d+1 hyperboloid coordinates


def read_cover(text: str) -> BallCover:
    space = None
    balls: list[tuple[list[float], float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "space":
            if len(parts) != 3 or parts[1] not in ("E", "H"):
                raise ValueError(f"line {lineno}: expected 'space E <d>' or 'space H <d>'")
            d = int(parts[2])
            space = EuclideanSpace(d) if parts[1] == "E" else HyperbolicSpace(d)
        elif parts[0] == "ball":
            if space is None:
                raise ValueError(f"line {lineno}: 'space' line must come first")
            try:
                nums = [float(p) for p in parts[1:]]
            except ValueError:
                raise ValueError(f"line {lineno}: non-numeric ball data") from None
            want = space.dimension + (1 if space.kind == "H" else 0)
            if len(nums) != want + 1:
                raise ValueError(f"line {lineno}: expected {want} coordinates plus a radius")
            balls.append((nums[:-1], nums[-1]))
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if space is None:
        raise ValueError("cover file has no 'space' line")
    return BallCover.of(space, balls)


def write_cover(cover: BallCover) -> str:
    lines = [f"space {cover.space.kind} {cover.space.dimension}"]
    for center, radius in cover.elements:
        coords = " ".join(repr(float(c)) for c in center)
        lines.append(f"ball {coords} {radius!r}")
    return "\n".join(lines) + "\n"


def circle_cover(count: int = 8, radius: float = 0.9) -> BallCover:
    """Balls centered at the count-th roots of unity on the unit circle."""
    space = EuclideanSpace(2)
    balls = []
    for k in range(count):
        angle = 2 * math.pi * k / count
        balls.append(((math.cos(angle), math.sin(angle)), radius))
    return BallCover.of(space, balls)


def annulus_cover(count: int = 8, center_radius: float = 1.0,
                  ball_radius: float = 0.9, inner_radius: float = 0.45) -> tuple[BallCover, list[int], list[float]]:
    """Cover of an annulus with a shrunken subfamily hugging the inner circle.

    Returns the full cover, the subfamily indices, and the shrink radii;
    feed these to relative_nerve.
    """
    cover = circle_cover(count, ball_radius)
    return cover, list(range(count)), [inner_radius] * count
