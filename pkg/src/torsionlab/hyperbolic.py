"""Hyperboloid-model hyperbolic geometry and displacement-function checks.

Points live on the upper sheet of <x, x> = -1 for the Lorentz form
diag(-1, 1, ..., 1) on R^(d+1); isometries are matrices preserving that
form and the upper sheet.  Everything is constant curvature -1: pinched
curvature cannot be realized numerically without choosing a metric, and
hyperbolic space is the extremal witness for all inequalities verified
here.

Displacement sub-level sets are implemented in closed form for the two
kinds an isometry constructor can produce: tubes around the axis of a
rotation-free loxodromic, and horoballs for a parabolic translation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

LORENTZ_FORM_TOL = 1e-9
POINT_TOL = 1e-10
COMMUTE_TOL = 1e-9
FD_STEP = 1e-5


class GeometryError(ValueError):
    """Invalid point, matrix, or configuration in the hyperboloid model."""


class SamplingError(RuntimeError):
    """The requested sample region is (numerically) unreachable."""


def lorentz_form_matrix(d: int) -> np.ndarray:
    j = np.eye(d + 1)
    j[0, 0] = -1.0
    return j


def lorentz_inner(x: np.ndarray, y: np.ndarray) -> float:
    return float(-x[0] * y[0] + np.dot(x[1:], y[1:]))


def make_point(coords: Sequence[float]) -> np.ndarray:
    """Normalize coordinates onto the upper hyperboloid sheet."""
    x = np.asarray(coords, dtype=float)
    if x.ndim != 1 or x.shape[0] < 2:
        raise GeometryError("a point needs at least 2 coordinates")
    q = lorentz_inner(x, x)
    if q >= 0:
        raise GeometryError(f"coordinates are not timelike (form value {q})")
    x = x / math.sqrt(-q)
    if x[0] < 0:
        x = -x
    return x


def base_point(d: int) -> np.ndarray:
    x = np.zeros(d + 1)
    x[0] = 1.0
    return x


def is_point(x: np.ndarray) -> bool:
    return abs(lorentz_inner(x, x) + 1.0) <= POINT_TOL and x[0] > 0


def distance(x: np.ndarray, y: np.ndarray) -> float:
    """Hyperbolic distance arccosh(-<x, y>), clamped below at 1.

    Evaluated through sinh(d/2)^2 = <x - y, x - y>/4, which is the same
    function of the clamped inner product but free of cancellation when
    the points nearly coincide (d(x, x) is exactly 0).
    """
    delta = x - y
    s = max(0.0, lorentz_inner(delta, delta))
    return 2.0 * math.asinh(0.5 * math.sqrt(s))


def tangent_projection(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Component of v tangent to the hyperboloid at x."""
    return v + lorentz_inner(x, v) * x


def tangent_norm(v: np.ndarray) -> float:
    return math.sqrt(max(0.0, lorentz_inner(v, v)))


def exp_map(x: np.ndarray, v: np.ndarray, t: float) -> np.ndarray:
    """Geodesic from x with unit tangent v, evaluated at arclength t."""
    return math.cosh(t) * x + math.sinh(t) * v


def geodesic_through(x: np.ndarray, y: np.ndarray) -> Callable[[float], np.ndarray]:
    """Unit-speed geodesic c with c(0) = x and c(d(x,y)) = y."""
    dxy = distance(x, y)
    if dxy == 0:
        raise GeometryError("geodesic requires distinct points")
    v = (y - math.cosh(dxy) * x) / math.sinh(dxy)
    return lambda t: exp_map(x, v, t)


def tangent_basis(x: np.ndarray) -> list[np.ndarray]:
    """Orthonormal basis of the tangent space at x (Lorentz Gram-Schmidt)."""
    d = x.shape[0] - 1
    basis: list[np.ndarray] = []
    for i in range(d + 1):
        v = np.zeros(d + 1)
        v[i] = 1.0
        v = tangent_projection(x, v)
        for b in basis:
            v = v - lorentz_inner(v, b) * b
        n = tangent_norm(v)
        if n > 1e-8:
            basis.append(v / n)
        if len(basis) == d:
            break
    if len(basis) != d:
        raise GeometryError("failed to build a tangent basis")
    return basis


def _lorentz_residual(matrix: np.ndarray) -> float:
    d = matrix.shape[0] - 1
    j = lorentz_form_matrix(d)
    return float(np.max(np.abs(matrix.T @ j @ matrix - j)))


def _lorentz_orthonormalize(matrix: np.ndarray) -> np.ndarray:
    """Gram-Schmidt the columns back onto O+(d,1); column 0 stays timelike."""
    d = matrix.shape[0] - 1
    cols = [matrix[:, i].copy() for i in range(d + 1)]
    t = cols[0]
    t = t / math.sqrt(-lorentz_inner(t, t))
    if t[0] < 0:
        t = -t
    out = [t]
    for i in range(1, d + 1):
        v = cols[i]
        v = v + lorentz_inner(v, out[0]) * out[0]
        for b in out[1:]:
            v = v - lorentz_inner(v, b) * b
        out.append(v / tangent_norm(v))
    return np.column_stack(out)


@dataclass(frozen=True)
class LorentzIsometry:
    """Matrix in O+(d,1), optionally tagged with how it was constructed.

    kind is one of "identity", "loxodromic", "parabolic" or None for
    matrices of unknown provenance; params carries the constructor data
    needed for closed-form sub-level geometry.
    """

    matrix: np.ndarray
    kind: str | None = None
    params: dict | None = None

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise GeometryError("isometry matrix must be square")
        if _lorentz_residual(m) > LORENTZ_FORM_TOL:
            raise GeometryError("matrix does not preserve the Lorentz form")
        if m[0, 0] <= 0:
            raise GeometryError("matrix does not preserve the upper sheet")
        object.__setattr__(self, "matrix", m)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0] - 1

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ x

    def inverse(self) -> "LorentzIsometry":
        d = self.dimension
        j = lorentz_form_matrix(d)
        inv = j @ self.matrix.T @ j
        return LorentzIsometry(_polish(inv))

    def __matmul__(self, other: "LorentzIsometry") -> "LorentzIsometry":
        return LorentzIsometry(_polish(self.matrix @ other.matrix))

    def power(self, k: int) -> "LorentzIsometry":
        if k == 0:
            return identity(self.dimension)
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out @ base
        return out

    def commutes_with(self, other: "LorentzIsometry", tol: float = COMMUTE_TOL) -> bool:
        ab = self.matrix @ other.matrix
        ba = other.matrix @ self.matrix
        return float(np.max(np.abs(ab - ba))) <= tol


def _polish(matrix: np.ndarray) -> np.ndarray:
    if _lorentz_residual(matrix) > 1e-12:
        return _lorentz_orthonormalize(matrix)
    return matrix


def identity(d: int) -> LorentzIsometry:
    return LorentzIsometry(np.eye(d + 1), kind="identity", params={})


def displacement(g: LorentzIsometry, x: np.ndarray) -> float:
    """d(x, g x), the displacement of g at x."""
    return distance(x, g.apply(x))


# --- constructors ------------------------------------------------------------

def _frame_from_axis(xi_minus: np.ndarray, xi_plus: np.ndarray, d: int) -> np.ndarray:
    """Lorentz frame whose first two columns span the given axis.

    Column 0 is the midpoint-like point p, column 1 the unit tangent u
    with the axis running from xi_minus to xi_plus.
    """
    prod = lorentz_inner(xi_minus, xi_plus)
    if prod >= -1e-12:
        raise GeometryError("axis endpoints must be distinct future null directions")
    scale = math.sqrt(-2.0 * prod)
    p = (xi_minus + xi_plus) / scale
    u = (xi_plus - xi_minus) / scale
    cols = [p, u]
    for i in range(d + 1):
        v = np.zeros(d + 1)
        v[i] = 1.0
        v = v + lorentz_inner(v, p) * p - lorentz_inner(v, u) * u
        for b in cols[2:]:
            v = v - lorentz_inner(v, b) * b
        n = tangent_norm(v)
        if n > 1e-8:
            cols.append(v / n)
        if len(cols) == d + 1:
            break
    if len(cols) != d + 1:
        raise GeometryError("failed to complete an axis frame")
    return np.column_stack(cols)


def _check_null_future(xi: Sequence[float]) -> np.ndarray:
    v = np.asarray(xi, dtype=float)
    if abs(lorentz_inner(v, v)) > 1e-9 * max(1.0, float(np.dot(v, v))):
        raise GeometryError("ideal points must be null vectors")
    if v[0] <= 0:
        raise GeometryError("ideal points must be future pointing")
    return v


def loxodromic(xi_minus: Sequence[float], xi_plus: Sequence[float],
               length: float) -> LorentzIsometry:
    """Rotation-free translation of the given length along an axis.

    The axis is the geodesic with the two ideal endpoints; translation
    moves points from xi_minus towards xi_plus.
    """
    if length <= 0:
        raise GeometryError("translation length must be positive")
    a = _check_null_future(xi_minus)
    b = _check_null_future(xi_plus)
    d = a.shape[0] - 1
    frame = _frame_from_axis(a, b, d)
    boost = np.eye(d + 1)
    boost[0, 0] = boost[1, 1] = math.cosh(length)
    boost[0, 1] = boost[1, 0] = math.sinh(length)
    j = lorentz_form_matrix(d)
    matrix = frame @ boost @ (j @ frame.T @ j)
    return LorentzIsometry(
        _polish(matrix), kind="loxodromic",
        params={"length": float(length), "frame": frame},
    )


def standard_loxodromic(d: int, length: float) -> LorentzIsometry:
    """Translation along the first-coordinate axis through the base point."""
    minus = np.zeros(d + 1)
    minus[0], minus[1] = 1.0, -1.0
    plus = np.zeros(d + 1)
    plus[0], plus[1] = 1.0, 1.0
    return loxodromic(minus, plus, length)


def _standard_parabolic_matrix(d: int, v: np.ndarray) -> np.ndarray:
    """Parabolic fixing the null direction e0 + e1, translating by v.

    In light-cone coordinates u = x0 + x1, w = x0 - x1, y in R^(d-1) the
    map is (u, w, y) -> (u + 2 v.y + |v|^2 w, w, y + w v).
    """
    m = np.zeros((d + 1, d + 1))
    vsq = float(np.dot(v, v))
    # action on basis vectors, read back from the light-cone formulas
    for col in range(d + 1):
        e = np.zeros(d + 1)
        e[col] = 1.0
        u, w, y = e[0] + e[1], e[0] - e[1], e[2:]
        u2 = u + 2 * float(np.dot(v, y)) + vsq * w
        y2 = y + w * v
        m[0, col] = (u2 + w) / 2
        m[1, col] = (u2 - w) / 2
        m[2:, col] = y2
    return m


def parabolic(fixed: Sequence[float], v: Sequence[float]) -> LorentzIsometry:
    """Parabolic translation fixing the given ideal point.

    v is the horospherical translation vector expressed in the d-1
    Euclidean directions transverse to the fixed point; parabolics with
    the same fixed point commute.
    """
    n = _check_null_future(fixed)
    d = n.shape[0] - 1
    vec = np.asarray(v, dtype=float)
    if vec.shape != (d - 1,):
        raise GeometryError(f"translation vector must have {d - 1} components")
    if np.allclose(vec, 0.0):
        raise GeometryError("translation vector must be nonzero")
    # frame sending e0 + e1 to a multiple of the fixed vector
    mirror = n.copy()
    mirror[1:] = -mirror[1:]
    frame = _frame_from_axis(mirror, n, d)
    j = lorentz_form_matrix(d)
    matrix = frame @ _standard_parabolic_matrix(d, vec) @ (j @ frame.T @ j)
    return LorentzIsometry(
        _polish(matrix), kind="parabolic",
        params={"fixed": n, "v": vec, "frame": frame},
    )


# --- classification and sub-level geometry -----------------------------------

def translation_length(g: LorentzIsometry) -> float:
    """Infimum of the displacement: log of the spectral radius."""
    eigvals = np.linalg.eigvals(g.matrix)
    return float(math.log(max(1.0, float(np.max(np.abs(eigvals))))))


def _classify(g: LorentzIsometry) -> tuple[str, dict]:
    """Recover (kind, params); needs metadata for parabolics.

    Loxodromic data is recovered reliably from the eigen-decomposition
    (the translation eigenvalues are well separated).  Parabolic Jordan
    blocks are numerically fragile, so parabolic sub-level geometry is
    only available for matrices built by the parabolic constructor.
    """
    if g.kind == "parabolic":
        return "parabolic", dict(g.params)
    if float(np.max(np.abs(g.matrix - np.eye(g.dimension + 1)))) < 1e-12:
        return "identity", {}
    length = translation_length(g)
    # parabolic Jordan blocks smear eigenvalues by ~eps^(1/3), so only a
    # spectral radius clearly above that noise floor means loxodromic
    if length > 1e-4:
        eigvals, eigvecs = np.linalg.eig(g.matrix)
        idx_plus = int(np.argmax(eigvals.real))
        idx_minus = int(np.argmin(np.abs(eigvals - math.exp(-length))))
        plus = np.real(eigvecs[:, idx_plus])
        minus = np.real(eigvecs[:, idx_minus])
        if plus[0] < 0:
            plus = -plus
        if minus[0] < 0:
            minus = -minus
        d = g.dimension
        frame = _frame_from_axis(minus, plus, d)
        # reject rotating loxodromics: the transverse block must be trivial
        j = lorentz_form_matrix(d)
        standard = (j @ frame.T @ j) @ g.matrix @ frame
        if float(np.max(np.abs(standard[2:, 2:] - np.eye(d - 1)))) > 1e-7:
            raise GeometryError("sub-level geometry needs a rotation-free loxodromic")
        return "loxodromic", {"length": length, "frame": frame}
    if g.kind == "identity":
        return "identity", {}
    raise GeometryError(
        "cannot classify this matrix; build parabolic elements with the parabolic() constructor")


@dataclass(frozen=True)
class SublevelSet:
    """The region where the displacement of gamma stays below epsilon.

    Convex; realized as a tube around the loxodromic axis or as a
    horoball at the parabolic fixed point.  Distances to the set are
    closed-form in both cases.
    """

    gamma: LorentzIsometry
    epsilon: float
    geometry: str
    data: dict

    @classmethod
    def of(cls, g: LorentzIsometry, epsilon: float) -> "SublevelSet":
        if epsilon <= 0:
            raise GeometryError("epsilon must be positive")
        kind, params = _classify(g)
        if kind == "identity":
            raise GeometryError("sub-level set of the identity is the whole space")
        if kind == "loxodromic":
            length = params["length"]
            if epsilon <= length:
                raise GeometryError(
                    f"sub-level set is empty: epsilon {epsilon} <= translation length {length}")
            radius = math.acosh(math.sinh(epsilon / 2) / math.sinh(length / 2))
            return cls(g, epsilon, "tube", {"frame": params["frame"], "radius": radius})
        # parabolic horoball: cosh(displacement) = 1 + c * w^2 with
        # w(x) = -<x, n>; calibrate c at a probe point
        n = params["fixed"]
        d = g.dimension
        probe = base_point(d)
        w0 = -lorentz_inner(probe, n)
        disp = displacement(g, probe)
        cal = (math.cosh(disp) - 1.0) / (w0 * w0)
        w_eps = math.sqrt((math.cosh(epsilon) - 1.0) / cal)
        return cls(g, epsilon, "horoball", {"fixed": n, "w_eps": w_eps})

    def axis_distance(self, x: np.ndarray) -> float:
        frame = self.data["frame"]
        a = -lorentz_inner(x, frame[:, 0])
        b = lorentz_inner(x, frame[:, 1])
        return math.acosh(max(1.0, math.sqrt(max(1.0, a * a - b * b))))

    def distance_from(self, x: np.ndarray) -> float:
        """Distance from x to the set, 0 inside."""
        if self.geometry == "tube":
            return max(0.0, self.axis_distance(x) - self.data["radius"])
        w = -lorentz_inner(x, self.data["fixed"])
        if w <= self.data["w_eps"]:
            return 0.0
        return math.log(w / self.data["w_eps"])

    def contains(self, x: np.ndarray) -> bool:
        return self.distance_from(x) == 0.0


def fd_gradient(f: Callable[[np.ndarray], float], x: np.ndarray,
                step: float = FD_STEP) -> np.ndarray:
    """Riemannian gradient estimate by central differences on the hyperboloid."""
    grad = np.zeros_like(x)
    for v in tangent_basis(x):
        plus = f(make_point(exp_map(x, v, step)))
        minus = f(make_point(exp_map(x, v, -step)))
        grad = grad + ((plus - minus) / (2 * step)) * v
    return grad


@dataclass(frozen=True)
class ObtuseAngleReport:
    samples: int
    min_inner_product: float
    passed: bool


def obtuse_angle_check(a: LorentzIsometry, b: LorentzIsometry,
                       eps_a: float, eps_b: float,
                       samples: int = 200, seed: int = 0,
                       tolerance: float = 1e-6) -> ObtuseAngleReport:
    """Gradients of the distances to two commuting sub-level sets never
    point against each other.

    Sample points are drawn outside both sets; at each the two gradient
    fields are estimated by central differences and their inner product
    recorded.  Passes when the minimum stays above -tolerance.
    """
    if not a.commutes_with(b):
        raise GeometryError("isometries do not commute within tolerance")
    set_a = SublevelSet.of(a, eps_a)
    set_b = SublevelSet.of(b, eps_b)
    d = a.dimension
    rng = np.random.default_rng(seed)

    clearance = 10 * FD_STEP
    base = base_point(d)
    collected = 0
    min_ip = math.inf
    attempts = 0
    max_attempts = 200 * samples
    while collected < samples:
        if attempts >= max_attempts:
            raise SamplingError(
                f"could only place {collected}/{samples} samples outside both sub-level sets")
        attempts += 1
        direction = rng.standard_normal(d)
        direction /= np.linalg.norm(direction)
        tangent = np.zeros(d + 1)
        tangent[1:] = direction
        radius = rng.uniform(0.05, 3.0)
        x = make_point(exp_map(base, tangent, radius))
        if set_a.distance_from(x) < clearance or set_b.distance_from(x) < clearance:
            continue
        grad_a = fd_gradient(set_a.distance_from, x)
        grad_b = fd_gradient(set_b.distance_from, x)
        ip = lorentz_inner(grad_a, grad_b)
        min_ip = min(min_ip, ip)
        collected += 1
    return ObtuseAngleReport(samples=samples, min_inner_product=min_ip,
                             passed=min_ip >= -tolerance)


@dataclass(frozen=True)
class OrbitCountReport:
    count: int
    bound: float
    max_power: int
    passed: bool


def orbit_count_check(g: LorentzIsometry, x: np.ndarray, R: float,
                      eps: float | None = None) -> OrbitCountReport:
    """Count the powers g^k (k != 0) displacing x by at most R.

    The displacement of g^k grows monotonically in |k| for a loxodromic,
    so the count is 2 * max{k : d(x, g^k x) <= R}, found by doubling plus
    bisection on the matrix powers.  The count must not exceed the volume
    ratio N(d, eps, R) for any eps <= translation length.
    """
    from .constants import volume_ratio_bound

    length = translation_length(g)
    if length <= 0:
        raise GeometryError("orbit counting requires a loxodromic isometry")
    if eps is None:
        eps = length
    if not 0 < eps <= length:
        raise GeometryError("requires 0 < eps <= translation length")

    def disp(k: int) -> float:
        return displacement(g.power(k), x)

    if disp(1) > R:
        k_max = 0
    else:
        hi = 1
        while disp(2 * hi) <= R and 2 * hi < 10 ** 6:
            hi *= 2
        lo = hi
        hi = 2 * hi
        # invariant: disp(lo) <= R < disp(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if disp(mid) <= R:
                lo = mid
            else:
                hi = mid
        k_max = lo
    count = 2 * k_max
    bound = volume_ratio_bound(g.dimension, eps, R).value
    return OrbitCountReport(count=count, bound=bound, max_power=k_max,
                            passed=count <= bound)


# --- isometry file format ----------------------------------------------------
#
#   isom d=<n>            followed by d+1 whitespace-separated rows
#   loxo l=<len> axis=<x0,..,xd;y0,..,yd>
#   para fix=<x0,..,xd> v=<v1,..,v(d-1)>


def _parse_vector(text: str) -> list[float]:
    return [float(p) for p in text.split(",") if p]


def read_isometries(text: str) -> list[LorentzIsometry]:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)
             if ln.strip() and not ln.strip().startswith("#")]
    out: list[LorentzIsometry] = []
    i = 0
    while i < len(lines):
        lineno, line = lines[i]
        parts = line.split()
        try:
            if parts[0] == "isom":
                d = int(parts[1].split("=")[1])
                rows = []
                for k in range(d + 1):
                    rows.append([float(p) for p in lines[i + 1 + k][1].split()])
                out.append(LorentzIsometry(np.array(rows)))
                i += d + 2
            elif parts[0] == "loxo":
                fields = dict(p.split("=", 1) for p in parts[1:])
                length = float(fields.get("l", fields.get("ℓ", "")))
                minus_txt, plus_txt = fields["axis"].split(";")
                out.append(loxodromic(_parse_vector(minus_txt), _parse_vector(plus_txt), length))
                i += 1
            elif parts[0] == "para":
                fields = dict(p.split("=", 1) for p in parts[1:])
                out.append(parabolic(_parse_vector(fields["fix"]), _parse_vector(fields["v"])))
                i += 1
            else:
                raise GeometryError(f"line {lineno}: unknown directive {parts[0]!r}")
        except (IndexError, KeyError, ValueError) as exc:
            raise GeometryError(f"line {lineno}: malformed isometry entry ({exc})") from None
    return out
