"""Integer simplicial homology with full torsion, plus cross-check oracles.

Homology in degree k is ker(d_k)/im(d_{k+1}).  Since im(d_{k+1}) lies in
ker(d_k) and chain groups are free, the Betti number is
n_k - rank(d_k) - rank(d_{k+1}) and the torsion is read off the invariant
factors of d_{k+1}.  The convention is unreduced homology: H_0 of a
connected complex is Z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import (
    AbelianGroupStructure,
    ExactArithmeticError,
    IntegerMatrix,
    rank_mod_p,
    rational_rank,
    smith_normal_form,
)
from .simplicial import (
    SimplicialComplex,
    SimplicialPair,
    boundary_matrix,
    relative_boundary_matrix,
)

ORACLE_PRIMES = (2, 3, 5, 7, 11, 13)


def _homology_from_boundaries(d_k: IntegerMatrix, d_k1: IntegerMatrix) -> AbelianGroupStructure:
    snf_out = smith_normal_form(d_k)
    snf_in = smith_normal_form(d_k1)
    betti = d_k.cols - snf_out.rank - snf_in.rank
    if betti < 0:
        raise ExactArithmeticError("negative Betti number: boundary maps are inconsistent")
    return AbelianGroupStructure(betti=betti, invariant_factors=snf_in.invariant_factors())


def homology(complex_: SimplicialComplex, k: int) -> AbelianGroupStructure:
    """H_k of the complex with integer coefficients."""
    d_k = boundary_matrix(complex_, k)
    d_k1 = boundary_matrix(complex_, k + 1)
    return _homology_from_boundaries(d_k, d_k1)


def relative_homology(pair: SimplicialPair, k: int) -> AbelianGroupStructure:
    """H_k of the quotient chain complex of the pair."""
    d_k = relative_boundary_matrix(pair, k)
    d_k1 = relative_boundary_matrix(pair, k + 1)
    return _homology_from_boundaries(d_k, d_k1)


def all_homology(complex_: SimplicialComplex, up_to: int | None = None) -> list[AbelianGroupStructure]:
    """H_0 .. H_up_to as a list (default: up to the complex dimension)."""
    top = complex_.dimension if up_to is None else up_to
    return [homology(complex_, k) for k in range(max(top, 0) + 1)]


def all_relative_homology(pair: SimplicialPair, up_to: int | None = None) -> list[AbelianGroupStructure]:
    top = pair.total.dimension if up_to is None else up_to
    return [relative_homology(pair, k) for k in range(max(top, 0) + 1)]


def betti_euler_characteristic(complex_: SimplicialComplex) -> int:
    return sum((-1) ** k * g.betti for k, g in enumerate(all_homology(complex_)))


@dataclass(frozen=True)
class OracleReport:
    """Agreement record between the SNF pipeline and the modular oracle."""

    degree: int
    betti_snf: int
    betti_rational: int
    torsion_primes_snf: tuple[int, ...]
    torsion_primes_modular: tuple[int, ...]
    agrees: bool


def homology_oracle_crosscheck(complex_: SimplicialComplex, k: int) -> OracleReport:
    """Recompute H_k by independent means and compare.

    Betti number: rational-rank row reduction (no SNF involved).
    Torsion primes: p divides the torsion of H_k exactly when the rank of
    d_{k+1} drops modulo p; checked for the fixed prime list.  Disagreement
    raises, since it means one of the two pipelines is wrong.
    """
    if len(complex_.simplices) > 500:
        raise ValueError("oracle cross-check is restricted to small complexes (<= 500 simplices)")
    d_k = boundary_matrix(complex_, k)
    d_k1 = boundary_matrix(complex_, k + 1)

    group = _homology_from_boundaries(d_k, d_k1)
    betti_rational = d_k.cols - rational_rank(d_k) - rational_rank(d_k1)

    rk_q = rational_rank(d_k1)
    modular = tuple(p for p in ORACLE_PRIMES if rank_mod_p(d_k1, p) < rk_q)
    snf_primes = tuple(p for p in ORACLE_PRIMES if group.torsion_order % p == 0)

    report = OracleReport(
        degree=k,
        betti_snf=group.betti,
        betti_rational=betti_rational,
        torsion_primes_snf=snf_primes,
        torsion_primes_modular=modular,
        agrees=(group.betti == betti_rational and snf_primes == modular),
    )
    if not report.agrees:
        raise ExactArithmeticError(f"homology oracle disagreement: {report}")
    return report
