"""Standard small complexes: spheres, torus, projective plane, Klein bottle.

These are the classical minimal (or near-minimal) triangulations used as
known-answer fixtures throughout the test suite and the demos.
"""

from __future__ import annotations

from .simplicial import SimplicialComplex, SimplicialPair, build_complex


def hollow_triangle() -> SimplicialComplex:
    """Boundary of a triangle: a circle."""
    return build_complex([[0, 1], [1, 2], [0, 2]])


def full_triangle() -> SimplicialComplex:
    """Solid 2-simplex: a disk."""
    return build_complex([[0, 1, 2]])


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron: a 2-sphere.

    Vertex 0 on top, 5 at the bottom, 1-4 around the equator.
    """
    return build_complex([
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 1, 4],
        [5, 1, 2], [5, 2, 3], [5, 3, 4], [5, 1, 4],
    ])


def torus_7() -> SimplicialComplex:
    """Moebius-Kantor 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tris = []
    for i in range(7):
        tris.append([i, (i + 1) % 7, (i + 3) % 7])
        tris.append([i, (i + 2) % 7, (i + 3) % 7])
    return build_complex(tris)


def projective_plane_6() -> SimplicialComplex:
    """6-vertex RP^2 (antipodal quotient of the icosahedron)."""
    tris = [
        [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
        [2, 3, 6], [2, 3, 5], [2, 4, 5], [3, 4, 6], [4, 5, 6],
    ]
    return build_complex([[v - 1 for v in t] for t in tris])


def klein_bottle_9() -> SimplicialComplex:
    """9-vertex Klein bottle from a 3x3 grid with one flipped gluing.

    Columns wrap with a row flip (the orientation-reversing direction),
    rows wrap straight.  Vertex (i, j) is numbered 3*i + j.
    """
    def vid(i: int, j: int) -> int:
        if j >= 3:
            i, j = (-i) % 3, j - 3
        return 3 * (i % 3) + j

    tris = []
    for i in range(3):
        for j in range(3):
            tris.append([vid(i, j), vid(i + 1, j), vid(i, j + 1)])
            tris.append([vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)])
    return build_complex(tris)


def annulus() -> SimplicialComplex:
    """Triangulated annulus; inner circle 0-1-2, outer circle 3-4-5."""
    return build_complex([
        [0, 1, 4], [0, 3, 4], [1, 2, 5], [1, 4, 5], [0, 2, 3], [2, 3, 5],
    ])


def annulus_inner_circle_pair() -> SimplicialPair:
    """(annulus, inner boundary circle) as a simplicial pair."""
    total = annulus()
    sub = build_complex([[0, 1], [1, 2], [0, 2]], vertex_count=total.vertex_count)
    return SimplicialPair(total=total, sub=sub)


def disk_boundary_pair() -> SimplicialPair:
    """(solid triangle, its boundary circle)."""
    total = full_triangle()
    sub = build_complex([[0, 1], [1, 2], [0, 2]], vertex_count=total.vertex_count)
    return SimplicialPair(total=total, sub=sub)


FIXTURES = {
    "circle": hollow_triangle,
    "disk": full_triangle,
    "sphere": octahedron,
    "torus": torus_7,
    "rp2": projective_plane_6,
    "klein": klein_bottle_9,
    "annulus": annulus,
}
