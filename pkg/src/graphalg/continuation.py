"""Harmonic continuation along standard-form filtrations.

Boundary data of a harmonic function u on a stage with boundary labels
l_1, ..., l_m is the column (u(l_1), ..., u(l_m), Lu(l_1), ..., Lu(l_m)).
Each layerable extension acts on boundary data by an exact symplectic
2m x 2m matrix; composing them continues u across the whole filtration.

The same machinery computes, for S a set of interior vertices making
G_{S->boundary} layerable, a matrix A with U0(G, L, M) isomorphic to
ker(A acting on M^{|S|}): run the continuation over the complementary
filtration starting from the isolated stage S + boundary, feed in
arbitrary values on S and zeros on the boundary, and require the final
Lu-block to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import (
    ExactMatrix,
    kernel_QmodZ_torsion,
    kernel_mod_n,
)
from .layering import (
    EDGE_DEL,
    SPIKE,
    interiorize,
    is_layerable,
    reduce_to_flower,
    strip_spike_edge,
)
from .network import (
    Network,
    U0_QmodZ,
    VertexFunction,
    is_harmonic,
)


@dataclass(frozen=True)
class BoundaryTransform:
    matrix: ExactMatrix
    kind: tuple

    @property
    def m(self):
        return self.matrix.rows // 2


def symplectic_form(m):
    """J = [[0, -I], [I, 0]] of size 2m."""
    grid = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        grid[i][m + i] = -1
        grid[m + i][i] = 1
    return ExactMatrix(grid)


def is_symplectic(T):
    m2 = T.rows
    if m2 % 2 or T.cols != m2:
        return False
    J = symplectic_form(m2 // 2)
    return T.transpose() * J * T == J


def initial_transform(d_values):
    """T0 = [[I, 0], [D, I]] for the isolated-vertex stage, D the
    diagonal of the vertex offsets in label order."""
    m = len(d_values)
    grid = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        grid[i][i] = 1
        grid[m + i][m + i] = 1
        grid[m + i][i] = d_values[i]
    return BoundaryTransform(ExactMatrix(grid), ("initial", tuple(d_values)))


def spike_transform(m, j, w, d=0):
    """Transform for adjoining a boundary spike at label index j
    (1-based) with edge weight w and new-vertex offset d:
    [[I, w^-1 E_jj], [d E_jj, I + d w^-1 E_jj]]."""
    if not 1 <= j <= m:
        raise ValueError("index out of range")
    if w == 0:
        raise ValueError("spike weight must be nonzero")
    winv = Fraction(1, 1) / Fraction(w)
    grid = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for i in range(2 * m):
        grid[i][i] = Fraction(1)
    k = j - 1
    grid[k][m + k] = winv
    grid[m + k][k] = Fraction(d)
    grid[m + k][m + k] = 1 + Fraction(d) * winv
    return BoundaryTransform(ExactMatrix(grid), ("spike", j, w, d))


def edge_transform(m, i, j, w):
    """Transform for adjoining a boundary edge between label indices i
    and j (1-based): [[I, 0], [w(E_ii + E_jj - E_ij - E_ji), I]]."""
    if not (1 <= i <= m and 1 <= j <= m) or i == j:
        raise ValueError("indices out of range or equal")
    if w == 0:
        raise ValueError("edge weight must be nonzero")
    grid = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for k in range(2 * m):
        grid[k][k] = Fraction(1)
    a, b = i - 1, j - 1
    grid[m + a][a] += Fraction(w)
    grid[m + b][b] += Fraction(w)
    grid[m + a][b] -= Fraction(w)
    grid[m + b][a] -= Fraction(w)
    return BoundaryTransform(ExactMatrix(grid), ("edge", i, j, w))


@dataclass(frozen=True)
class ContinuationPlan:
    """Transforms in application order, with the vertex recorded at each
    step: ``records[k]`` is the (vertex, label index) whose value first
    appears after ``transforms[k]`` is applied (None for edge steps).
    ``initial_labels`` lists the vertices of the smallest stage in label
    order."""

    network: Network
    initial_labels: tuple
    transforms: tuple
    records: tuple

    @property
    def m(self):
        return len(self.initial_labels)

    def total_matrix(self):
        M = ExactMatrix.identity(2 * self.m)
        for T in self.transforms:
            M = T.matrix * M
        return M


def _build_plan(N, initial_labels, steps):
    """Shared plan builder.  ``steps`` is a list of ("spike", anchor,
    new_vertex, edge) / ("edge", v1, v2, edge) in application order;
    label indices are tracked as the anchors turn interior."""
    dmap = N.dmap
    wmap = N.wmap
    label = list(initial_labels)
    m = len(label)
    transforms = [initial_transform([dmap[v] for v in label])]
    records = [None]
    for step in steps:
        if step[0] == "spike":
            _, anchor, new_vertex, eid = step
            j = label.index(anchor) + 1
            transforms.append(
                spike_transform(m, j, wmap[eid], dmap[new_vertex])
            )
            label[j - 1] = new_vertex
            records.append((new_vertex, j))
        else:
            _, v1, v2, eid = step
            i = label.index(v1) + 1
            j = label.index(v2) + 1
            transforms.append(edge_transform(m, i, j, wmap[eid]))
            records.append(None)
    return ContinuationPlan(
        N, tuple(initial_labels), tuple(transforms), tuple(records)
    )


def continuation_plan(N):
    """Plan for continuing harmonic functions on a layerable network
    from the isolated stage of its standard-form filtration."""
    G = N.graph
    remnant, strip_ops = strip_spike_edge(G)
    if remnant.edges or set(remnant.vertices) - remnant.boundary:
        raise ValueError("network graph is not layerable")
    steps = []
    for op in reversed(strip_ops):
        # undoing the strip re-adjoins what it removed
        if op.kind == SPIKE:
            steps.append(("spike", op.interior_vertex, op.vertex, op.edge))
        elif op.kind == EDGE_DEL:
            t, h = G.edge_dict[op.edge]
            steps.append(("edge", t, h, op.edge))
    return _build_plan(N, tuple(sorted(remnant.vertices)), steps)


def complementary_plan(N, S):
    """Plan for the complementary filtration of G_{S->boundary}: the
    continuation starts from the isolated stage S + boundary (S labelled
    first) and the strip moves of G_{S->boundary} are replayed in
    discovery order with the spike roles swapped."""
    G = N.graph
    S = sorted(S)
    Gp = interiorize(G, S)
    remnant, strip_ops = strip_spike_edge(Gp)
    if remnant.edges or set(remnant.vertices) - remnant.boundary:
        raise ValueError("G_{S->boundary} is not layerable")
    steps = []
    for op in strip_ops:
        if op.kind == SPIKE:
            # the stripped boundary endpoint turns interior on the
            # complementary side; the stripped interior endpoint is the
            # new boundary vertex
            steps.append(("spike", op.vertex, op.interior_vertex, op.edge))
        elif op.kind == EDGE_DEL:
            t, h = G.edge_dict[op.edge]
            steps.append(("edge", t, h, op.edge))
    initial = tuple(S) + tuple(sorted(G.boundary))
    return _build_plan(N, initial, steps)


def continue_harmonic(plan, phi):
    """Continue boundary data phi (values on ``plan.initial_labels`` in
    label order, over Q or Z/n) to a harmonic function on the full
    network.  Verified with is_harmonic before returning."""
    m = plan.m
    if len(phi) != m:
        raise ValueError("need one value per initial label")
    data = list(phi) + [0 * v for v in phi]
    values = {}
    for T, record in zip(plan.transforms, plan.records):
        data = T.matrix.apply(data)
        if record is not None:
            vertex, j = record
            values[vertex] = data[j - 1]
    for v, val in zip(plan.initial_labels, phi):
        values.setdefault(v, val)
    # initial-label vertices may have been overwritten in `values` only
    # if they reappeared as spike records, which cannot happen
    u = VertexFunction(values)
    if not is_harmonic(plan.network, u):
        raise AssertionError("continuation failed harmonicity check")
    return u


def u0_matrix_A(N, S):
    """The matrix A of the explicit-kernel theorem: with s = |S| and
    m = s + |boundary|, A is the bottom m x s corner of the total
    boundary-data transform of the complementary filtration, and
    U0(G, L, M) = ker(A acting on M^s)."""
    S = sorted(S)
    plan = complementary_plan(N, S)
    M = plan.total_matrix()
    m = plan.m
    s = len(S)
    rows = range(m, 2 * m)
    cols = range(s)
    return M.submatrix(rows, cols)


def u0_via_continuation(N, S):
    """Torsion decomposition of ker A over Q/Z; cross-oracle for
    U0_QmodZ."""
    A = u0_matrix_A(N, S)
    if not A.is_integer():
        raise ValueError("A is not integral; use unit integer weights")
    return kernel_QmodZ_torsion(A.to_integer())


def u0_mod_n_via_continuation(N, S, n):
    A = u0_matrix_A(N, S)
    if not A.is_integer():
        raise ValueError("A is not integral; use unit integer weights")
    return kernel_mod_n(A.to_integer(), n)


def find_layering_set(G):
    """Greedy heuristic: repeatedly strip; when stuck, promote one
    interior vertex of the flower (preferring one adjacent to the
    boundary) and try again.  Returns S with G_{S->boundary} layerable."""
    S = []
    H = G
    while True:
        flower, _ = reduce_to_flower(H)
        if flower.is_empty():
            return sorted(S)
        candidates = [
            x
            for x in flower.interior
            if any(y in flower.boundary for y in flower.neighbors(x))
        ]
        pick = min(candidates) if candidates else min(flower.interior)
        S.append(pick)
        H = interiorize(H, {pick})


def invariant_factor_bound(G, S):
    """For a boundaryless graph: the critical group has at most
    |S| - 1 invariant factors, provided designating one vertex of S as
    boundary and the rest as S' leaves G_{S'->boundary} layerable."""
    if G.boundary:
        raise ValueError("boundaryless graph required")
    S = sorted(S)
    if not S:
        raise ValueError("S must be nonempty")
    x = S[0]
    Gp = G.with_boundary({x})
    if not is_layerable(interiorize(Gp, S[1:])):
        raise ValueError("G_{S->boundary} is not layerable")
    return len(S) - 1


def multiplicity_bound_check(N, S, lam):
    """Eigenvalue multiplicity is at most |S| when G_{S->boundary} is
    layerable."""
    from .fundamental import eigen_multiplicity

    G = N.graph
    if not is_layerable(interiorize(G, set(S) - set(G.boundary))):
        raise ValueError("G_{S->boundary} is not layerable")
    return eigen_multiplicity(N, lam) <= len(S)
