"""Exact integer linear algebra: Smith normal form, cokernels, ranks.

Everything here runs on arbitrary-precision Python integers.  Intermediate
entries of a Smith reduction can blow up far beyond 64 bits, so no numpy
integer dtypes are used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class ExactArithmeticError(Exception):
    """Internal inconsistency detected by a cross-check oracle."""


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, stored row-major as nested tuples.

    Immutable; all operations return new matrices.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix entries")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntegerMatrix":
        n = len(diag)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(diag):
            data[i][i] = int(v)
        return cls.from_rows(data, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             tuple(self.column(j) for j in range(self.cols)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose().entries
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
            for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, data)

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def determinant(mat: IntegerMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if mat.rows != mat.cols:
        raise ValueError("determinant of a non-square matrix")
    n = mat.rows
    if n == 0:
        return 1
    a = mat.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class AbelianGroupStructure:
    """A finitely generated abelian group: Z^betti plus a divisibility chain.

    invariant_factors is the chain (d_1 | d_2 | ... | d_k), every d_i > 1.
    """

    betti: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.invariant_factors:
            if d <= 1:
                raise ValueError("invariant factors must exceed 1")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def to_json(self, degree: int | None = None) -> dict:
        doc: dict = {}
        if degree is not None:
            doc["degree"] = degree
        doc["betti"] = self.betti
        doc["torsion"] = list(self.invariant_factors)
        return doc


@dataclass(frozen=True)
class SNFResult:
    """Smith decomposition U @ A @ V == S with U, V unimodular.

    The diagonal of S is nonnegative and forms a divisibility chain
    s_1 | s_2 | ... | s_rank, zeros afterwards.
    """

    S: IntegerMatrix
    U: IntegerMatrix
    V: IntegerMatrix
    rank: int

    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.S.diagonal_entries() if d > 1)


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    if i != j:
        m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    if i != j:
        for row in m:
            row[i], row[j] = row[j], row[i]


def _add_row(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    if factor:
        row_s = m[src]
        row_d = m[dst]
        for k, v in enumerate(row_s):
            if v:
                row_d[k] += factor * v


def _add_col(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    if factor:
        for row in m:
            if row[src]:
                row[dst] += factor * row[src]


def _negate_row(m: list[list[int]], i: int) -> None:
    m[i] = [-v for v in m[i]]


def smith_normal_form(mat: IntegerMatrix) -> SNFResult:
    """Exact Smith normal form with unimodular transforms.

    Pivot choice is the smallest nonzero magnitude in the working
    submatrix, which keeps coefficient growth tolerable; correctness does
    not depend on the choice.  Deterministic for a given input.
    """
    m, n = mat.rows, mat.cols
    a = mat.to_lists()
    u = IntegerMatrix.identity(m).to_lists()
    v = IntegerMatrix.identity(n).to_lists()

    t = 0
    while t < m and t < n:
        # locate smallest-magnitude nonzero pivot in a[t:][t:]
        pivot = None
        best = 0
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                w = row[j]
                if w and (pivot is None or abs(w) < best):
                    pivot = (i, j)
                    best = abs(w)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        _swap_rows(a, t, pivot[0])
        _swap_rows(u, t, pivot[0])
        _swap_cols(a, t, pivot[1])
        _swap_cols(v, t, pivot[1])

        while True:
            if a[t][t] < 0:
                _negate_row(a, t)
                _negate_row(u, t)
            p = a[t][t]
            dirty = False
            for i in range(m):
                if i != t and a[i][t]:
                    q = a[i][t] // p
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                    if a[i][t]:
                        # remainder is a strictly smaller pivot candidate
                        _swap_rows(a, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(n):
                if j != t and a[t][j]:
                    q = a[t][j] // p
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                    if a[t][j]:
                        _swap_cols(a, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # row and column are clear; force the divisibility chain
            p = a[t][t]
            offender = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
        t += 1

    rank = sum(1 for i in range(min(m, n)) if a[i][i] != 0)
    return SNFResult(
        S=IntegerMatrix.from_rows(a, n),
        U=IntegerMatrix.from_rows(u, m),
        V=IntegerMatrix.from_rows(v, n),
        rank=rank,
    )


def cokernel(mat: IntegerMatrix) -> AbelianGroupStructure:
    """Structure of Z^rows / (column span of mat).

    Columns are the images of the generators of the source module.
    """
    snf = smith_normal_form(mat)
    return AbelianGroupStructure(
        betti=mat.rows - snf.rank,
        invariant_factors=snf.invariant_factors(),
    )


def rational_rank(mat: IntegerMatrix) -> int:
    """Rank over Q, by plain fraction Gaussian elimination.

    Deliberately independent of smith_normal_form so the two can be used
    to cross-check each other.
    """
    rows = [[Fraction(x) for x in row] for row in mat.entries]
    rank = 0
    col = 0
    n = mat.cols
    while rank < len(rows) and col < n:
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def rank_mod_p(mat: IntegerMatrix, p: int) -> int:
    """Rank of the matrix over the prime field F_p."""
    if p < 2:
        raise ValueError("modulus must be a prime >= 2")
    rows = [[x % p for x in row] for row in mat.entries]
    rank = 0
    col = 0
    n = mat.cols
    while rank < len(rows) and col < n:
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def independent_columns(mat: IntegerMatrix, order: Sequence[int] | None = None) -> list[int]:
    """Greedy maximal set of Q-linearly-independent columns.

    Columns are examined in the given order (default: left to right); the
    selected set spans the column space over Q.
    """
    if order is None:
        order = range(mat.cols)
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen: list[int] = []
    for j in order:
        vec = [Fraction(row[j]) for row in mat.entries]
        for b, piv in zip(basis, pivots):
            if vec[piv] != 0:
                f = vec[piv] / b[piv]
                vec = [x - f * y for x, y in zip(vec, b)]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is not None:
            basis.append(vec)
            pivots.append(piv)
            chosen.append(j)
    return sorted(chosen)
