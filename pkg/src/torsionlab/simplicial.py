"""Finite simplicial complexes, pairs, boundary matrices and generators.

Simplices are tuples of strictly increasing nonnegative vertex ids.  A
complex stores *all* of its simplices explicitly (not only maximal ones):
at desk scale this is affordable and makes boundary-matrix assembly a
straight read-off.  Bases of chain groups are always the lexicographically
sorted simplex lists, so every matrix is bit-reproducible across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .exact import IntegerMatrix

Simplex = tuple[int, ...]


class MalformedComplexError(ValueError):
    """Raised on invalid simplex input or a broken file."""


def as_simplex(vertices: Sequence[int]) -> Simplex:
    """Canonicalize a vertex sequence into a sorted simplex tuple."""
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise MalformedComplexError("empty simplex")
    if vs[0] < 0:
        raise MalformedComplexError(f"negative vertex id in {vertices!r}")
    if len(set(vs)) != len(vs):
        raise MalformedComplexError(f"repeated vertex in simplex {vertices!r}")
    return vs


def faces(simplex: Simplex) -> Iterable[Simplex]:
    """All proper nonempty faces."""
    for k in range(1, len(simplex)):
        yield from combinations(simplex, k)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed set of simplices over vertices 0..vertex_count-1."""

    vertex_count: int
    simplices: frozenset[Simplex]

    def __post_init__(self):
        for s in self.simplices:
            if s[-1] >= self.vertex_count:
                raise MalformedComplexError(
                    f"vertex {s[-1]} outside declared range {self.vertex_count}")
            for f in faces(s):
                if f not in self.simplices:
                    raise MalformedComplexError(f"missing face {f} of {s}")

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def used_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(s[0] for s in self.simplices if len(s) == 1))

    def simplices_of_dim(self, k: int) -> list[Simplex]:
        """k-simplices in the canonical (lexicographic) order."""
        return sorted(s for s in self.simplices if len(s) == k + 1)

    def f_vector(self) -> tuple[int, ...]:
        if not self.simplices:
            return ()
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    def maximal_simplices(self) -> list[Simplex]:
        out = []
        for s in self.simplices:
            sset = set(s)
            if not any(sset < set(t) for t in self.simplices if len(t) == len(s) + 1):
                out.append(s)
        return sorted(out)

    def contains(self, vertices: Sequence[int]) -> bool:
        return as_simplex(vertices) in self.simplices

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)


@dataclass(frozen=True)
class SimplicialPair:
    """A complex together with a subcomplex, sharing vertex ids."""

    total: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if not self.sub.simplices <= self.total.simplices:
            raise MalformedComplexError("subcomplex is not contained in the total complex")


@dataclass(frozen=True)
class ComplexityProfile:
    """Size data (V, D) of a complex plus its per-dimension simplex counts.

    D is the 1-skeleton degree: the number of edges at a vertex.  With that
    reading a complex with profile (D, V) has at most D^p * V p-simplices,
    which is validated here.
    """

    V: int
    D: int
    p_simplex_counts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for p, count in enumerate(self.p_simplex_counts):
            if p >= 1 and count > (self.D ** p) * self.V:
                raise MalformedComplexError(
                    f"{count} simplices of dimension {p} exceed D^p*V = {(self.D ** p) * self.V}")


def build_complex(maximal_simplices: Iterable[Sequence[int]],
                  vertex_count: int | None = None) -> SimplicialComplex:
    """Downward closure of the given simplices.

    Input sequences need not be sorted, but repeated vertices inside one
    simplex are rejected.
    """
    closed: set[Simplex] = set()
    max_vertex = -1
    for raw in maximal_simplices:
        s = as_simplex(raw)
        max_vertex = max(max_vertex, s[-1])
        closed.add(s)
        closed.update(faces(s))
    n = max_vertex + 1 if vertex_count is None else vertex_count
    return SimplicialComplex(vertex_count=n, simplices=frozenset(closed))


def empty_complex(vertex_count: int = 0) -> SimplicialComplex:
    return SimplicialComplex(vertex_count=vertex_count, simplices=frozenset())


def complexity_profile(complex_: SimplicialComplex) -> ComplexityProfile:
    """V = vertices actually used, D = max number of edges at a vertex."""
    degree: dict[int, int] = {v: 0 for v in complex_.used_vertices()}
    for s in complex_.simplices:
        if len(s) == 2:
            degree[s[0]] += 1
            degree[s[1]] += 1
    return ComplexityProfile(
        V=len(degree),
        D=max(degree.values(), default=0),
        p_simplex_counts=complex_.f_vector(),
    )


def boundary_matrix(complex_: SimplicialComplex, k: int) -> IntegerMatrix:
    """Matrix of the boundary map from k-chains to (k-1)-chains.

    Signs alternate over the sorted vertex order; every column of a
    nonempty matrix has exactly k+1 entries equal to +-1.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    k_simplices = complex_.simplices_of_dim(k)
    if k == 0:
        return IntegerMatrix.zeros(0, len(k_simplices))
    lower = complex_.simplices_of_dim(k - 1)
    index = {s: i for i, s in enumerate(lower)}
    data = [[0] * len(k_simplices) for _ in lower]
    for j, s in enumerate(k_simplices):
        for drop in range(len(s)):
            face = s[:drop] + s[drop + 1:]
            data[index[face]][j] = (-1) ** drop
    return IntegerMatrix.from_rows(data, len(k_simplices))


def relative_boundary_matrix(pair: SimplicialPair, k: int) -> IntegerMatrix:
    """Boundary of the quotient chain complex of the pair.

    Basis: k-simplices of the total complex that are not in the
    subcomplex; boundary faces falling into the subcomplex are dropped.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    sub = pair.sub.simplices
    k_simplices = [s for s in pair.total.simplices_of_dim(k) if s not in sub]
    if k == 0:
        return IntegerMatrix.zeros(0, len(k_simplices))
    lower = [s for s in pair.total.simplices_of_dim(k - 1) if s not in sub]
    index = {s: i for i, s in enumerate(lower)}
    data = [[0] * len(k_simplices) for _ in lower]
    for j, s in enumerate(k_simplices):
        for drop in range(len(s)):
            face = s[:drop] + s[drop + 1:]
            if face in index:
                data[index[face]][j] = (-1) ** drop
    return IntegerMatrix.from_rows(data, len(k_simplices))


def random_dv_complex(max_degree: int, max_vertices: int, dim: int, seed: int) -> SimplicialComplex:
    """Random complex whose profile respects the (D, V) budget.

    A random graph is grown greedily under the vertex-degree cap, then a
    random subset of its cliques is filled in up to the requested
    dimension.  Filling cliques never changes 1-skeleton degrees, so the
    budget survives by construction.  Deterministic in the seed.
    """
    if max_degree < 1 or max_vertices < 1:
        raise ValueError("degree and vertex budgets must be positive")
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    degree = [0] * n
    edges: set[Simplex] = set()
    candidates = list(combinations(range(n), 2))
    rng.shuffle(candidates)
    for u, v in candidates:
        if degree[u] < max_degree and degree[v] < max_degree and rng.random() < 0.7:
            edges.add((u, v))
            degree[u] += 1
            degree[v] += 1

    adjacency: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    simplices: set[Simplex] = {(v,) for v in range(n)} | edges
    frontier = sorted(edges)
    for p in range(2, dim + 1):
        next_frontier = []
        for s in frontier:
            common = set.intersection(*(adjacency[v] for v in s)) if s else set()
            for w in sorted(common):
                if w > s[-1]:
                    candidate = s + (w,)
                    if candidate not in simplices and rng.random() < 0.5:
                        simplices.add(candidate)
                        next_frontier.append(candidate)
        frontier = next_frontier
        if not frontier:
            break
    return build_complex(simplices, vertex_count=n)


def random_subcomplex(complex_: SimplicialComplex, seed: int) -> SimplicialComplex:
    """Full subcomplex induced on a random vertex subset."""
    rng = random.Random(seed)
    used = complex_.used_vertices()
    keep = {v for v in used if rng.random() < 0.5}
    simplices = {s for s in complex_.simplices if set(s) <= keep}
    return SimplicialComplex(vertex_count=complex_.vertex_count, simplices=frozenset(simplices))


# --- line-based file format ------------------------------------------------
#
#   complex V=<n>
#   s v0 v1 ... vk        (one line per maximal simplex, ascending ids)
#   # comment lines are ignored
#
# Pair files hold two complex blocks separated by a line `pair-sub`.


def write_complex(complex_: SimplicialComplex) -> str:
    lines = [f"complex V={complex_.vertex_count}"]
    for s in complex_.maximal_simplices():
        lines.append("s " + " ".join(str(v) for v in s))
    return "\n".join(lines) + "\n"


def write_pair(pair: SimplicialPair) -> str:
    return write_complex(pair.total) + "pair-sub\n" + write_complex(pair.sub)


def _parse_block(lines: list[tuple[int, str]]) -> SimplicialComplex:
    if not lines:
        raise MalformedComplexError("empty complex block")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "complex" or not parts[1].startswith("V="):
        raise MalformedComplexError(f"line {lineno}: expected 'complex V=<n>', got {header!r}")
    try:
        n = int(parts[1][2:])
    except ValueError:
        raise MalformedComplexError(f"line {lineno}: bad vertex count in {header!r}") from None
    simplices = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if parts[0] != "s":
            raise MalformedComplexError(f"line {lineno}: expected simplex line, got {line!r}")
        try:
            vs = [int(p) for p in parts[1:]]
        except ValueError:
            raise MalformedComplexError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not vs:
            raise MalformedComplexError(f"line {lineno}: simplex line with no vertices")
        try:
            simplices.append(as_simplex(vs))
        except MalformedComplexError as exc:
            raise MalformedComplexError(f"line {lineno}: {exc}") from None
    try:
        return build_complex(simplices, vertex_count=n)
    except MalformedComplexError as exc:
        raise MalformedComplexError(str(exc)) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append((i, stripped))
    return out


def read_complex(text: str) -> SimplicialComplex:
    lines = _content_lines(text)
    if any(line == "pair-sub" for _, line in lines):
        raise MalformedComplexError("file contains a pair, not a single complex")
    return _parse_block(lines)


def read_pair(text: str) -> SimplicialPair:
    lines = _content_lines(text)
    split_at = [i for i, (_, line) in enumerate(lines) if line == "pair-sub"]
    if len(split_at) != 1:
        raise MalformedComplexError("pair file must contain exactly one 'pair-sub' separator")
    total = _parse_block(lines[:split_at[0]])
    sub = _parse_block(lines[split_at[0] + 1:])
    if sub.vertex_count < total.vertex_count:
        sub = SimplicialComplex(vertex_count=total.vertex_count, simplices=sub.simplices)
    return SimplicialPair(total=total, sub=sub)


def read_complex_or_pair(text: str) -> SimplicialComplex | SimplicialPair:
    lines = _content_lines(text)
    if any(line == "pair-sub" for _, line in lines):
        return read_pair(text)
    return read_complex(text)
