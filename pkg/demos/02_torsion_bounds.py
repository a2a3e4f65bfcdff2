"""Verifying the two torsion bounds on random instances.

First bound: the torsion of the cokernel of an integer matrix is at most
the product of the Euclidean norms of any column subset spanning the
image.  Second bound: a complex with at most V vertices and vertex degree
at most D has log |torsion H_p| <= D^p * V * log(p+1).

Both checks are decided in exact integer arithmetic.
"""

from torsionlab.bounds import batch_verify_dv, batch_verify_soule, dv_torsion_check, soule_bound
from torsionlab.complexes import projective_plane_6
from torsionlab.exact import IntegerMatrix
from torsionlab.simplicial import SimplicialPair, empty_complex

# a single instance, spelled out
mat = IntegerMatrix.from_rows([[2, 1, 0], [0, 3, 1], [0, 0, 4]], 3)
rep = soule_bound(mat)
print(f"columns {rep.chosen_columns}: torsion {rep.exact_torsion} <= bound {rep.bound:.3f}"
      f"  -> holds: {rep.holds}")

# equality is attained on positive diagonal matrices
rep = soule_bound(IntegerMatrix.diagonal([2, 3, 7]))
print(f"diag(2,3,7): torsion {rep.exact_torsion} == bound {rep.bound:.0f}")

# batch over 500 random matrices
summary = batch_verify_soule(500, seed=7)
print(f"soule batch: {summary.count} instances, {len(summary.failures)} failures, "
      f"max log-ratio {summary.max_ratio:.3f}")

print()

# the (D, V) bound on a known torsion complex
rp2 = projective_plane_6()
pair = SimplicialPair(total=rp2, sub=empty_complex(rp2.vertex_count))
rep = dv_torsion_check(pair, 1)
print(f"RP^2: log|tors H_1| = {rep.log_torsion:.4f} <= D^p*V*log(p+1) = {rep.log_bound:.4f}")

# and on a random batch of (D<=6, V<=30, dim<=3) complexes with subcomplexes
summary = batch_verify_dv(50, seed=3, with_subcomplexes=True)
print(f"dv batch: {len(summary.records)} checks, {len(summary.failures)} failures, "
      f"max ratio {summary.max_ratio:.4f}")
