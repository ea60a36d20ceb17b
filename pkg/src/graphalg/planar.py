"""Disk-embedded graphs with boundary, dual networks, and harmonic
conjugates.

An embedding is a rotation system: for each vertex, the counterclockwise
cyclic order of its outgoing oriented edges, together with the
counterclockwise order of the boundary vertices on the disk's circle.
The circle itself is modeled by virtual arcs between consecutive
boundary vertices; the arcs participate in face tracing but are never
dualized.  Faces are traced so that each face contains the oriented
edges having it on their right; the trace along the outside of the
circle is discarded.

The dual network places a vertex in every face, joins the two faces
adjacent to each edge by a dual edge with reciprocal weight, and marks a
dual vertex as boundary when its face has a side along the circle.  The
reduced fundamental modules of a network and its dual are isomorphic,
and harmonic functions on the two networks pair up through the discrete
Cauchy-Riemann equation w(e) du(e) = dv(e-dual).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_algebra import Mod
from .network import Network, VertexFunction, is_harmonic
from .partial_graph import PartialGraph, rev

ARC = "arc"


def _is_arc(dart):
    return dart[0] == ARC


@dataclass(frozen=True)
class EmbeddedPartialGraph:
    """A graph with boundary embedded in the closed disk.

    ``rotation`` maps each vertex to the counterclockwise cyclic order
    of its outgoing oriented edges.  At a boundary vertex the listed
    order is linear, starting from the circle direction toward the next
    boundary vertex counterclockwise.  ``boundary_order`` lists the
    boundary vertices counterclockwise around the circle (empty for a
    graph without boundary, which is treated as embedded in the
    sphere)."""

    graph: PartialGraph
    rotation: tuple
    boundary_order: tuple

    def __init__(self, graph, rotation, boundary_order):
        rot = dict(rotation)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(
            self,
            "rotation",
            tuple(sorted((v, tuple(ds)) for v, ds in rot.items())),
        )
        object.__setattr__(self, "boundary_order", tuple(boundary_order))

    @property
    def rmap(self):
        return dict(self.rotation)


def validate_embedding(EG):
    """Check rotation and boundary-order consistency and that the face
    structure has the Euler characteristic of a disk embedding."""
    G = EG.graph
    rmap = EG.rmap
    if set(rmap) != set(G.vertices):
        raise ValueError("rotation must cover every vertex exactly")
    for v, darts in rmap.items():
        if sorted(darts) != sorted(G.star(v)):
            raise ValueError(f"rotation at {v} does not list its star")
    if sorted(EG.boundary_order) != sorted(G.boundary):
        raise ValueError("boundary order must enumerate the boundary")
    if G.vertices and not G.is_connected():
        raise ValueError("embedded graph must be connected")
    faces = _trace_all_faces(EG)
    b = len(EG.boundary_order)
    euler = len(G.vertices) - (len(G.edges) + b) + len(faces)
    if euler != 2:
        raise ValueError("rotation system is not a disk embedding")
    return True


def _augmented_rotation(EG):
    """Rotations with the virtual circle arcs inserted.  Arc i runs
    counterclockwise from boundary vertex i to boundary vertex i+1 of
    ``boundary_order``; its darts are (ARC, i, +1) and (ARC, i, -1)."""
    rmap = {v: list(ds) for v, ds in EG.rotation}
    order = EG.boundary_order
    b = len(order)
    for i, v in enumerate(order):
        rmap[v] = (
            [(ARC, i, 1)] + rmap[v] + [(ARC, (i - 1) % b, -1)]
        )
    return rmap


def _aug_head(EG, dart):
    if _is_arc(dart):
        _, i, s = dart
        order = EG.boundary_order
        b = len(order)
        return order[(i + 1) % b] if s > 0 else order[i]
    return EG.graph.o_head(dart)


def _aug_rev(dart):
    if _is_arc(dart):
        _, i, s = dart
        return (ARC, i, -s)
    return rev(dart)


def _trace_all_faces(EG):
    """All faces of the augmented map, each as the cyclic dart sequence
    having the face on its right, including the outside-the-circle
    trace."""
    rmap = _augmented_rotation(EG)
    succ = {}
    for v, darts in rmap.items():
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]
    faces = []
    seen = set()
    for start in succ:
        if start in seen:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            seen.add(d)
            d = succ[_aug_rev(d)]
            if d == start:
                break
        faces.append(tuple(face))
    return faces


@dataclass(frozen=True)
class Face:
    """A face of the embedding: its clockwise dart walk (virtual arcs
    included) and whether it has a side along the circle."""

    darts: tuple

    @property
    def is_boundary(self):
        return any(_is_arc(d) for d in self.darts)

    @property
    def arc_indices(self):
        return tuple(d[1] for d in self.darts if _is_arc(d))


def _dart_key(d):
    return (1, d[1], d[2]) if _is_arc(d) else (0, d[0], d[1])


def trace_faces(EG):
    """The faces of the embedded graph (the outside of the circle is
    dropped), deterministically ordered."""
    validate_embedding(EG)
    faces = _trace_all_faces(EG)
    if EG.boundary_order:
        outer_dart = (ARC, 0, 1)
        faces = [f for f in faces if outer_dart not in f]
    return [Face(f) for f in sorted(faces, key=lambda f: min(map(_dart_key, f)))]


@dataclass(frozen=True)
class DualNetwork:
    """The dual of an embedded network.  Edge ids are shared: the dual
    of edge e carries the same id, is oriented from the face left of e
    to the face right of e, and has the reciprocal weight."""

    network: Network
    embedded: EmbeddedPartialGraph
    faces: tuple  # faces of the primal, indexed by dual vertex id
    primal: Network


def _rotate_to_arc_prefix(darts):
    """Cyclically rotate a boundary-face walk so its arc darts come
    first (the arcs of a boundary face of a connected graph are
    consecutive in the walk)."""
    n = len(darts)
    for i in range(n):
        if _is_arc(darts[i]) and not _is_arc(darts[(i - 1) % n]):
            return darts[i:] + darts[:i]
    raise ValueError("face has no non-arc dart")


def dual(N, EG):
    """Dual network of a connected embedded network with invertible
    weights."""
    if N.graph != EG.graph:
        raise ValueError("embedding does not belong to the network")
    if not EG.boundary_order:
        raise ValueError(
            "dual needs a boundary vertex; designate one (lowest id is"
            " customary) and re-embed"
        )
    for _, w in N.weights:
        if w == 0:
            raise ValueError("dual requires invertible weights")
    faces = trace_faces(EG)
    face_of = {}
    for i, f in enumerate(faces):
        for d in f.darts:
            face_of[d] = i
    # dual edge e: tail = face left of e = face containing (e, -1),
    # head = face right of e = face containing (e, +1)
    edges = {
        e: (face_of[(e, -1)], face_of[(e, 1)]) for e in EG.graph.edge_ids
    }
    boundary = {i for i, f in enumerate(faces) if f.is_boundary}
    Gd = PartialGraph(range(len(faces)), boundary, edges)
    # rotation at a face-vertex: the face walk is clockwise, so the
    # outgoing dual darts (one per crossed edge) are clockwise too;
    # reverse for counterclockwise.  For boundary faces, start the walk
    # at its arc run so the linear order begins at the circle.
    rotation = {}
    for i, f in enumerate(faces):
        walk = f.darts
        if f.is_boundary:
            walk = _rotate_to_arc_prefix(walk)
        out = [rev(d) for d in walk if not _is_arc(d)]
        rotation[i] = tuple(reversed(out))
    # boundary faces counterclockwise: by first arc of their arc run
    def arc_key(i):
        return min(faces[i].arc_indices)

    dual_order = tuple(sorted(boundary, key=arc_key))
    EGd = EmbeddedPartialGraph(Gd, rotation, dual_order)
    validate_embedding(EGd)
    weights = {e: _invert(w) for e, w in N.weights}
    Nd = Network(Gd, weights)
    return DualNetwork(Nd, EGd, tuple(faces), N)


def _invert(w):
    if isinstance(w, int):
        if w in (1, -1):
            return w
        return Fraction(1, w)
    return 1 / w


def double_dual_is_isomorphic(N, EG):
    """Check that dualizing twice returns the original network: derive
    the face-to-vertex correspondence from the shared edge ids and
    verify it is a weight- and boundary-preserving isomorphism."""
    D1 = dual(N, EG)
    D2 = dual(D1.network, D1.embedded)
    G = N.graph
    G2 = D2.network.graph
    if set(G2.edge_ids) != set(G.edge_ids):
        return False
    for orient in (False, True):
        vmap = {}
        ok = True
        for e in G.edge_ids:
            t, h = G.edge_dict[e]
            t2, h2 = G2.edge_dict[e]
            if orient:
                t2, h2 = h2, t2
            for a, b in ((t2, t), (h2, h)):
                if vmap.setdefault(a, b) != b:
                    ok = False
            if not ok:
                break
        if not ok or len(set(vmap.values())) != len(vmap):
            continue
        if len(vmap) != len(G2.vertices):
            continue
        if {vmap[v] for v in G2.boundary} != set(G.boundary):
            continue
        if all(
            D2.network.weight(e) == N.weight(e) for e in G.edge_ids
        ):
            return True
    return False


def verify_duality(N, EG):
    """The reduced fundamental modules of a normalized integral network
    and of its dual have equal invariant factors."""
    from .fundamental import upsilon_reduced

    if not N.is_normalized():
        raise ValueError("duality requires a normalized network (d = 0)")
    D = dual(N, EG)
    a = upsilon_reduced(_integralize(N))
    b = upsilon_reduced(_integralize(D.network))
    return a.invariant_factors == b.invariant_factors


def _integralize(N):
    weights = {}
    for e, w in N.weights:
        if isinstance(w, Fraction):
            if w.denominator != 1:
                raise ValueError("unit integer weights required")
            w = w.numerator
        weights[e] = w
    return Network(N.graph, weights)


def harmonic_conjugate(N, EG, u):
    """The harmonic conjugate of a harmonic function u: the function v
    on the dual network with w(e) du(e) = dv(e-dual), normalized to
    vanish at dual vertex 0.  Built by integrating over a spanning tree
    of the dual and checking every remaining edge; an inconsistency
    means u was not harmonic."""
    D = dual(N, EG)
    G = N.graph
    Gd = D.network.graph
    uv = u.vmap if isinstance(u, VertexFunction) else dict(u)

    def flux(e):
        t, h = G.edge_dict[e]
        return N.weight(e) * (uv[h] - uv[t])

    v = {0: _zero_like(next(iter(uv.values())))}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for oe in Gd.star(x):
            y = Gd.o_head(oe)
            if y in v:
                continue
            e, s = oe
            # dv across the dual edge, oriented tail -> head
            dv = flux(e)
            v[y] = v[x] + dv if s > 0 else v[x] - dv
            frontier.append(y)
    if len(v) != len(Gd.vertices):
        raise AssertionError("dual graph is disconnected")
    for e, t, h in Gd.edges:
        if v[h] - v[t] != flux(e):
            raise ValueError(
                "conjugate integration inconsistent: u is not harmonic"
            )
    vf = VertexFunction(v)
    if not is_harmonic(D.network, vf):
        raise AssertionError("conjugate failed harmonicity check")
    return vf, D


def _zero_like(x):
    if isinstance(x, Mod):
        return Mod(0, x.modulus)
    return 0 * x
