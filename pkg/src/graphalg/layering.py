"""Layer-stripping: the three boundary reduction moves, layerability,
flowers, standard-form filtrations, complete reducibility, and the
degenerate-weight constructions witnessing non-layerability.

The three moves are: delete an isolated boundary vertex; contract a
boundary spike (an edge whose boundary endpoint has no other edge and
whose other endpoint is interior); delete a boundary edge (both
endpoints boundary).  A graph with no applicable move is a flower; the
flower reached by greedy stripping is independent of the order of the
moves, and a graph is layerable (strippable to nothing) iff its flower
is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .network import Network, VertexFunction, in_U0
from .partial_graph import PartialGraph

ISOLATED = "isolated"
SPIKE = "spike"
EDGE_DEL = "edge"


@dataclass(frozen=True)
class LayerOp:
    kind: str
    vertex: int = -1  # isolated: the vertex; spike: boundary endpoint
    edge: int = -1  # spike / boundary edge
    interior_vertex: int = -1  # spike: the endpoint that becomes boundary

    def sort_key(self):
        order = {ISOLATED: 0, SPIKE: 1, EDGE_DEL: 2}
        return (order[self.kind], self.vertex, self.edge)


def find_strippable(G):
    """All applicable layer-stripping moves, deterministically ordered."""
    ops = []
    for v in sorted(G.boundary):
        if G.degree(v) == 0:
            ops.append(LayerOp(ISOLATED, vertex=v))
    for e, t, h in G.edges:
        t_bd, h_bd = t in G.boundary, h in G.boundary
        if t_bd and h_bd:
            ops.append(LayerOp(EDGE_DEL, edge=e))
        elif t_bd and G.degree(t) == 1:
            ops.append(LayerOp(SPIKE, vertex=t, edge=e, interior_vertex=h))
        elif h_bd and G.degree(h) == 1:
            ops.append(LayerOp(SPIKE, vertex=h, edge=e, interior_vertex=t))
    return sorted(ops, key=LayerOp.sort_key)


def is_flower(G):
    return not find_strippable(G)


def _check_applicable(G, op):
    for candidate in find_strippable(G):
        if candidate == op:
            return
    raise ValueError(f"operation {op} is not applicable")


def apply_op(G, op):
    """Apply a layer-stripping move to a graph."""
    _check_applicable(G, op)
    if op.kind == ISOLATED:
        return G.delete_vertex(op.vertex)
    if op.kind == EDGE_DEL:
        return G.delete_edge(op.edge)
    # spike: delete the boundary endpoint and the edge; the interior
    # endpoint becomes boundary
    G2 = G.delete_vertex(op.vertex)
    return G2.with_boundary(G2.boundary | {op.interior_vertex})


def apply_op_network(N, op):
    """Apply a layer-stripping move to a network (weights and offsets
    restricted).  Spike contraction requires a unit weight."""
    if op.kind == SPIKE:
        w = N.weight(op.edge)
        if isinstance(w, Fraction):
            if w == 0:
                raise ValueError("spike weight must be a unit")
        elif w not in (1, -1):
            raise ValueError("spike weight must be a unit (over Z: +1 or -1)")
    G2 = apply_op(N.graph, op)
    keep = set(G2.edge_ids)
    w2 = {e: w for e, w in N.weights if e in keep}
    d2 = {v: d for v, d in N.offsets if v in set(G2.vertices)}
    return Network(G2, w2, d2)


def reduce_to_flower(G, order_key=None):
    """Greedy stripping to the unique flower.  Returns (flower, trace)
    where trace is the list of (op, graph after the op).  ``order_key``
    can reorder the candidate moves (used to test confluence)."""
    trace = []
    H = G
    while True:
        ops = find_strippable(H)
        if not ops:
            return H, trace
        op = min(ops, key=order_key) if order_key else ops[0]
        H = apply_op(H, op)
        trace.append((op, H))


def is_layerable(G):
    flower, _ = reduce_to_flower(G)
    return flower.is_empty()


def interiorize(G, S):
    """Change the vertices in S from interior to boundary."""
    S = set(S)
    if not S <= set(G.interior):
        raise ValueError("S must be a set of interior vertices")
    return G.with_boundary(G.boundary | S)


def strip_spike_edge(G):
    """Strip only spikes and boundary edges (never isolated vertices),
    preserving the boundary count.  Returns (remnant, ops in the order
    they were applied)."""
    ops = []
    H = G
    while True:
        candidates = [op for op in find_strippable(H) if op.kind != ISOLATED]
        if not candidates:
            return H, ops
        op = candidates[0]
        H = apply_op(H, op)
        ops.append(op)


@dataclass(frozen=True)
class Filtration:
    """A standard-form layerable filtration, recorded from the smallest
    stage upward: ``stages[0]`` is the isolated-boundary-vertex stage,
    ``stages[-1]`` the full graph; ``ops[j]`` is the strip move undone
    by the extension ``stages[j] -> stages[j+1]``; ``labellings[j]``
    lists the boundary of ``stages[j]`` in consistent label order."""

    stages: tuple
    ops: tuple
    labellings: tuple


def standard_form_filtration(G):
    """Standard-form filtration of a layerable graph; raises ValueError
    if G is not layerable."""
    remnant, strip_ops = strip_spike_edge(G)
    if remnant.edges or set(remnant.vertices) - remnant.boundary:
        raise ValueError("graph is not layerable")
    # stages, read upward from the remnant
    stages = [G]
    H = G
    for op in strip_ops:
        H = apply_op(H, op)
        stages.append(H)
    stages.reverse()
    ext_ops = tuple(reversed(strip_ops))
    # consistent labellings: start from the remnant in sorted order; a
    # spike extension puts the new boundary vertex at the index of the
    # vertex it is attached to (which turns interior).
    label = list(sorted(remnant.vertices))
    labellings = [tuple(label)]
    for op in ext_ops:
        if op.kind == SPIKE:
            idx = label.index(op.interior_vertex)
            label[idx] = op.vertex
        labellings.append(tuple(label))
    return Filtration(tuple(stages), ext_ops, tuple(labellings))


# -- complete reducibility ---------------------------------------------


@dataclass(frozen=True)
class TraceNode:
    """One node of a reduction trace: the graph, the move taken, and the
    resulting child nodes.  Leaves carry no move; a leaf is either the
    empty graph or an irreducible graph."""

    graph: PartialGraph
    move: object
    children: tuple


@dataclass(frozen=True)
class ReductionTrace:
    root: TraceNode

    def leaves(self):
        out = []

        def walk(node):
            if not node.children:
                out.append(node.graph)
            for child in node.children:
                walk(child)

        walk(self.root)
        return out

    def irreducible_witnesses(self):
        return [g for g in self.leaves() if not g.is_empty()]


def find_wedge_split(G):
    """A boundary vertex whose removal disconnects the graph, together
    with the two induced wedge summands, or None."""
    if not G.is_connected() or len(G.vertices) < 3:
        return None
    for x in sorted(G.boundary):
        H = G.delete_vertex(x)
        comps = H.connected_components()
        if len(comps) < 2:
            continue
        side1 = set(comps[0]) | {x}
        side2 = (set(G.vertices) - set(comps[0]))
        e1 = [e for e, t, h in G.edges if t in side1 and h in side1]
        e2 = [e for e, t, h in G.edges if e not in set(e1)]
        G1 = G.induced(side1, e1, G.boundary & side1)
        G2 = G.induced(side2, e2, G.boundary & side2)
        return x, G1, G2
    return None


def is_irreducible(G):
    """Nonempty, no strippable move, connected, and not a boundary
    wedge-sum."""
    if G.is_empty():
        return False
    if find_strippable(G):
        return False
    if not G.is_connected():
        return False
    return find_wedge_split(G) is None


def is_completely_reducible(G):
    """Decide complete reducibility; returns (verdict, ReductionTrace).
    Greedy: strip while possible, then split disjoint unions, then split
    boundary wedge-sums; a stuck nonempty graph is irreducible."""

    def reduce(H):
        if H.is_empty():
            return TraceNode(H, None, ())
        ops = find_strippable(H)
        if ops:
            child = reduce(apply_op(H, ops[0]))
            return TraceNode(H, ops[0], (child,))
        comps = H.connected_components()
        if len(comps) > 1:
            children = []
            for comp in sorted(comps, key=min):
                edges = [e for e, t, h in H.edges if t in comp]
                children.append(
                    reduce(H.induced(comp, edges, H.boundary & comp))
                )
            return TraceNode(H, "split_disjoint", tuple(children))
        split = find_wedge_split(H)
        if split is not None:
            x, G1, G2 = split
            return TraceNode(H, ("split_wedge", x), (reduce(G1), reduce(G2)))
        return TraceNode(H, None, ())  # irreducible leaf

    root = reduce(G)
    trace = ReductionTrace(root)
    return (not trace.irreducible_witnesses(), trace)


# -- degenerate weight constructions -----------------------------------


def degenerate_weights_general(G):
    """Degenerate rational network (with offsets) on a nonempty flower,
    plus a verified nonzero witness in U0(G, L, Q).

    Weights at each boundary vertex sum to zero (possible because a
    flower has at least two edges at every non-isolated boundary vertex,
    with disjoint stars); offsets cancel the boundary contribution at
    each interior vertex; the witness is 0 on the boundary and 1 on the
    interior.
    """
    if G.is_empty() or not is_flower(G):
        raise ValueError("input must be a nonempty flower")
    w = {e: Fraction(1) for e in G.edge_ids}
    for x in sorted(G.boundary):
        star = G.star(x)
        # all edges at a boundary vertex of a flower lead to interior
        # vertices, so the stars of distinct boundary vertices are disjoint
        k = len(star)
        for oe in star[: k - 1]:
            w[oe[0]] = Fraction(1)
        w[star[-1][0]] = Fraction(-(k - 1))
    d = {}
    for x in G.interior:
        total = Fraction(0)
        for oe in G.star(x):
            if G.o_head(oe) in G.boundary:
                total += w[oe[0]]
        d[x] = -total
    N = Network(G, w, d)
    u = VertexFunction(
        {v: Fraction(0) if v in G.boundary else Fraction(1) for v in G.vertices}
    )
    if not in_U0(N, u):
        raise AssertionError("degenerate witness failed verification")
    return N, u


def _bridges(G):
    """Edge ids not lying on any cycle."""
    bridges = set()
    for e in G.edge_ids:
        if G.is_loop(e):
            continue
        H = G.delete_edge(e)
        t, h = G.edge_dict[e]
        comp = next(c for c in H.connected_components() if t in c)
        if h not in comp:
            bridges.add(e)
    return bridges


def _fundamental_cycles(G, cycle_edges):
    """Oriented cycles (lists of oriented edges) covering every edge of
    ``cycle_edges``: fundamental cycles of a spanning forest."""
    # build a spanning forest with parent pointers
    parent = {}
    parent_edge = {}
    visited = set()
    tree_edges = set()
    for root in G.vertices:
        if root in visited:
            continue
        visited.add(root)
        stack = [root]
        while stack:
            x = stack.pop()
            for oe in G.star(x):
                y = G.o_head(oe)
                if y not in visited:
                    visited.add(y)
                    parent[y] = x
                    parent_edge[y] = oe  # oriented x -> y
                    tree_edges.add(oe[0])
                    stack.append(y)

    def path_to_root(v):
        out = []
        while v in parent:
            out.append(parent_edge[v])
            v = parent[v]
        return out  # oriented edges pointing away from the root

    cycles = []
    covered = set()
    for e in sorted(cycle_edges):
        if e in tree_edges:
            continue
        t, h = G.edge_dict[e]
        pt, ph = path_to_root(t), path_to_root(h)
        # strip the common root-side part
        while pt and ph and pt[-1] == ph[-1]:
            pt.pop()
            ph.pop()
        # closed walk: t -> h by the chord, h -> junction up the tree
        # (parent edges reversed), junction -> t down the tree
        cycle = [(e, 1)] + [(eid, -s) for (eid, s) in ph] + list(reversed(pt))
        cycles.append(cycle)
        covered |= {eid for eid, _ in cycle}
    # tree edges on cycles are covered automatically because every
    # non-bridge tree edge lies in some fundamental cycle
    missing = set(cycle_edges) - covered
    if missing:
        raise AssertionError(f"cycle cover missed edges {missing}")
    return cycles


def degenerate_weights_normalized(G):
    """Degenerate normalized (d = 0) rational network on an irreducible
    graph, plus a verified witness in U0(G, L, Q) that is nonzero at
    every interior vertex."""
    if not is_irreducible(G):
        raise ValueError("input must be irreducible")
    S = set(G.edge_ids) - _bridges(G)
    # potential u: components of G minus the cycle edges
    stripped = G
    for e in sorted(S):
        stripped = stripped.delete_edge(e)
    comps = stripped.connected_components()
    u = {}
    counter = 1
    for comp in sorted(comps, key=min):
        if comp & G.boundary:
            val = Fraction(0)
        else:
            val = Fraction(counter)
            counter += 1
        for v in comp:
            u[v] = val
    cycles = _fundamental_cycles(G, S)

    def du(oe):
        return u[G.o_tail(oe)] - u[G.o_head(oe)]

    # per-cycle weights w_j(e) = 1/du(e) on the cycle, 0 elsewhere
    wj = []
    for cycle in cycles:
        weights = {}
        for oe in cycle:
            val = du(oe)
            if val == 0:
                raise AssertionError("cycle edge with zero potential drop")
            weights[oe[0]] = 1 / val
        wj.append(weights)
    # combine so that every cycle edge keeps a nonzero weight
    t = 1
    while True:
        alphas = [Fraction(t) ** j for j in range(len(cycles))]
        w = {e: Fraction(1) for e in G.edge_ids}
        for e in S:
            w[e] = sum(a * wmap.get(e, 0) for a, wmap in zip(alphas, wj))
        if all(w[e] != 0 for e in G.edge_ids):
            break
        t += 1
    N = Network(G, w)
    uf = VertexFunction(u)
    if not in_U0(N, uf):
        raise AssertionError("degenerate witness failed verification")
    for v in G.interior:
        if u[v] == 0:
            raise AssertionError("witness vanishes at an interior vertex")
    return N, uf
