"""The fundamental module of a network and its relatives.

For a network (G, L) over Z the fundamental module is the cokernel of
L restricted to interior-vertex chains,

    Upsilon(G, L) = ZV / L(ZV°),

whose torsion generalizes the critical (sandpile) group.  The reduced
variant quotients ker(sum of coordinates) instead and is defined for
normalized networks (d = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import (
    ExactMatrix,
    ModuleDecomposition,
    charpoly,
    cokernel,
    determinant,
    poly_divides,
    rank_over_Q,
)
from .network import (
    Network,
    U0_QmodZ,
    interior_block,
    is_nondegenerate,
    laplacian_matrix,
)
from .partial_graph import validate_morphism


@dataclass(frozen=True)
class UpsilonReport:
    decomposition: ModuleDecomposition
    presentation: ExactMatrix  # the V x V° Laplacian block
    nondegenerate: bool

    @property
    def torsion(self):
        return self.decomposition.invariant_factors


def upsilon(N):
    """Decomposition of Upsilon(G, L) for an integer-weight network."""
    if not N.is_integral():
        raise ValueError("integer weights required")
    block = interior_block(N).to_integer()
    decomposition = cokernel(block)
    nondeg = is_nondegenerate(N)
    if nondeg and decomposition.free_rank != len(N.graph.boundary):
        raise AssertionError(
            "non-degenerate network must have free rank |boundary|"
        )
    return UpsilonReport(decomposition, block, nondeg)


def upsilon_reduced(N):
    """Decomposition of the reduced module ker(eps) / L(ZV°) for a
    normalized network, in the chain basis {x_i - x_0} with x_0 the
    lowest vertex id."""
    if not N.is_integral():
        raise ValueError("integer weights required")
    if not N.is_normalized():
        raise ValueError("normalized network (d = 0) required")
    G = N.graph
    if not G.vertices:
        return ModuleDecomposition(0, ())
    block = interior_block(N).to_integer()
    # with d = 0 every column sums to zero, so a column lies in ker(eps)
    # and its coordinates off x_0 are its coefficients in the basis
    # {x_i - x_0}: drop the x_0 row.
    x0 = G.vertices[0]
    rows = [i for i, v in enumerate(G.vertices) if v != x0]
    reduced = block.submatrix(rows, range(block.cols))
    return cokernel(reduced)


def critical_group(G):
    """Critical group of a connected graph without boundary: the torsion
    of Upsilon for the standard Laplacian.  Cross-checked against the
    variant with a single boundary vertex."""
    if G.boundary:
        raise ValueError("critical group is defined for boundaryless graphs")
    if not G.is_connected():
        raise ValueError("connected graph required")
    N = Network.standard(G)
    report = upsilon(N)
    torsion = report.decomposition.invariant_factors
    if G.vertices:
        one_bd = G.with_boundary({G.vertices[0]})
        alt = upsilon(Network.standard(one_bd))
        if alt.decomposition.invariant_factors != torsion:
            raise AssertionError(
                "one-boundary-vertex variant disagrees with torsion"
            )
    return ModuleDecomposition(0, torsion)


def torsion_crosscheck(N):
    """Compare three computations of the torsion: the cokernel of the
    interior block, the cokernel of its transpose, and U0 over Q/Z.
    Returns True when all agree (requires non-degeneracy)."""
    if not is_nondegenerate(N):
        raise ValueError("non-degenerate network required")
    block = interior_block(N).to_integer()
    a = cokernel(block).invariant_factors
    b = cokernel(block.transpose()).invariant_factors
    c = U0_QmodZ(N).invariant_factors
    return a == b == c


def spanning_tree_count(G):
    """Number of spanning trees via the matrix-tree theorem (delete one
    row and column of the standard Laplacian)."""
    if G.boundary:
        raise ValueError("boundaryless graph required")
    if not G.is_connected():
        raise ValueError("connected graph required")
    if len(G.vertices) <= 1:
        return 1
    N = Network.standard(G)
    full = laplacian_matrix(N)
    keep = list(range(1, len(G.vertices)))
    return int(determinant(full.submatrix(keep, keep)))


def laplacian_charpoly(N):
    """Monic characteristic polynomial det(zI - L), highest degree first."""
    full = laplacian_matrix(N)
    return charpoly(full.to_integer())


def eigen_multiplicity(N, lam):
    """Multiplicity of lam as an eigenvalue of the full Laplacian over Q
    (nullity of lam*I - L)."""
    full = laplacian_matrix(N)
    n = full.rows
    shifted = ExactMatrix(
        [
            [
                (Fraction(lam) if i == j else Fraction(0)) - Fraction(full[i, j])
                for j in range(n)
            ]
            for i in range(n)
        ]
    )
    return n - rank_over_Q(shifted)


def charpoly_divisibility_check(f, N1, N2):
    """For a degree-n harmonic morphism of boundaryless networks, check
    the divisibility det(zI - L2) | det(nzI - L1) exactly."""
    degrees = validate_morphism(f)
    interior_degrees = {degrees[x] for x in f.source.interior}
    if f.source.boundary or f.target.boundary:
        raise ValueError("boundaryless graphs required")
    if len(interior_degrees) != 1:
        raise ValueError("morphism degree is not constant")
    n = interior_degrees.pop()
    p1 = laplacian_charpoly(N1)
    p2 = laplacian_charpoly(N2)
    # det(nzI - L1) = sum_j a_j n^j z^j where p1(w) = sum_j a_j w^j
    deg1 = len(p1) - 1
    scaled = [c * n ** (deg1 - i) for i, c in enumerate(p1)]
    return poly_divides(p2, scaled)
