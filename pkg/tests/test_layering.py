"""Unit tests for layer-stripping, flowers, filtrations, and the
degenerate-weight constructions."""

import random

import pytest

from graphalg.families import complete_bipartite_bi, complete_graph, cycle
from graphalg.layering import (
    EDGE_DEL,
    ISOLATED,
    SPIKE,
    LayerOp,
    apply_op,
    apply_op_network,
    degenerate_weights_general,
    degenerate_weights_normalized,
    find_strippable,
    find_wedge_split,
    interiorize,
    is_completely_reducible,
    is_flower,
    is_irreducible,
    is_layerable,
    reduce_to_flower,
    standard_form_filtration,
    strip_spike_edge,
)
from graphalg.network import Network, in_U0, is_nondegenerate
from graphalg.partial_graph import PartialGraph, wedge_sum


def path(n, boundary=()):
    return PartialGraph(
        range(n), boundary, {k: (k, k + 1) for k in range(n - 1)}
    )


class TestMoves:
    def test_move_detection(self):
        # 0 isolated boundary; 1-2 boundary edge; 3-4 spike into interior
        G = PartialGraph(
            range(5), {0, 1, 2, 3}, {0: (1, 2), 1: (3, 4)}
        )
        kinds = [op.kind for op in find_strippable(G)]
        assert kinds == [ISOLATED, SPIKE, EDGE_DEL]

    def test_spike_promotes_interior_endpoint(self):
        G = path(2, boundary={0})
        op = find_strippable(G)[0]
        assert op.kind == SPIKE and op.vertex == 0 and op.interior_vertex == 1
        H = apply_op(G, op)
        assert H.boundary == frozenset({1}) and not H.edges

    def test_inapplicable_move_rejected(self):
        G = path(3, boundary={0})
        with pytest.raises(ValueError):
            apply_op(G, LayerOp(ISOLATED, vertex=0))

    def test_network_spike_requires_unit_weight(self):
        G = path(2, boundary={0})
        op = find_strippable(G)[0]
        with pytest.raises(ValueError):
            apply_op_network(Network(G, {0: 2}), op)
        N2 = apply_op_network(Network(G, {0: -1}), op)
        assert not N2.graph.edges


class TestLayerability:
    def test_path_layerable_from_one_end(self):
        assert is_layerable(path(5, boundary={0}))

    def test_all_boundary_always_layerable(self):
        G = complete_graph(4, boundary=range(4))
        assert is_layerable(G)

    def test_interior_cycle_is_stuck(self):
        G = cycle(4, boundary=())
        flower, _ = reduce_to_flower(G)
        assert flower == G
        assert is_flower(G)
        assert not is_layerable(G)

    def test_interiorize(self):
        G = cycle(4)
        H = interiorize(G, {0, 1})
        assert H.boundary == frozenset({0, 1})
        with pytest.raises(ValueError):
            interiorize(H, {0})

    def test_confluence_on_random_graphs(self):
        rng = random.Random(7)
        for trial in range(25):
            nv = rng.randint(2, 7)
            edges = {
                k: (rng.randrange(nv), rng.randrange(nv))
                for k in range(rng.randint(1, 10))
            }
            edges = {
                k: (t, h) for k, (t, h) in edges.items() if t != h
            }
            boundary = {v for v in range(nv) if rng.random() < 0.5}
            G = PartialGraph(range(nv), boundary, edges)
            f1, _ = reduce_to_flower(G)
            f2, _ = reduce_to_flower(
                G, order_key=lambda op: (-op.sort_key()[0], op.vertex)
            )
            assert f1 == f2


class TestFiltration:
    def test_standard_form_of_a_path(self):
        G = path(4, boundary={0})
        filt = standard_form_filtration(G)
        assert filt.stages[0].edges == ()
        assert filt.stages[-1] == G
        # one label per boundary vertex at every stage, consistent order
        for stage, labelling in zip(filt.stages, filt.labellings):
            assert sorted(labelling) == sorted(stage.boundary)
        assert len(filt.ops) == len(filt.stages) - 1

    def test_spike_extension_keeps_label_slot(self):
        G = path(3, boundary={0})
        filt = standard_form_filtration(G)
        # the single label slot walks back along the path: 2, 1, 0
        assert filt.labellings == ((2,), (1,), (0,))

    def test_not_layerable_raises(self):
        with pytest.raises(ValueError):
            standard_form_filtration(cycle(4, boundary=()))

    def test_strip_spike_edge_keeps_boundary_count(self):
        G = complete_graph(4, boundary=range(4))
        remnant, ops = strip_spike_edge(G)
        assert len(remnant.boundary) == 4
        assert not remnant.edges


class TestReducibility:
    def test_wedge_split_found(self):
        G1 = cycle(3, boundary={0})
        W, *_ = wedge_sum(G1, 0, cycle(3, boundary={0}), 0)
        split = find_wedge_split(W)
        assert split is not None
        x, A, B = split
        assert len(A.vertices) == 3 and len(B.vertices) == 3

    def test_interior_cycle_irreducible(self):
        assert is_irreducible(cycle(4, boundary=()))
        assert not is_irreducible(path(3, boundary={0}))

    def test_complete_bipartite_not_completely_reducible(self):
        ok, trace = is_completely_reducible(complete_bipartite_bi(2, 3))
        assert not ok
        assert all(is_irreducible(W) for W in trace.irreducible_witnesses())

    def test_layerable_graph_completely_reducible(self):
        ok, trace = is_completely_reducible(path(5, boundary={0}))
        assert ok
        assert not trace.irreducible_witnesses()


class TestDegenerateWeights:
    def test_general_construction_on_interior_cycle(self):
        N, u = degenerate_weights_general(cycle(4, boundary=()))
        assert in_U0(N, u)
        assert not is_nondegenerate(N)

    def test_general_construction_on_flower_with_boundary(self):
        flower, _ = reduce_to_flower(complete_bipartite_bi(2, 3))
        assert not flower.is_empty()
        N, u = degenerate_weights_general(flower)
        assert in_U0(N, u)
        assert not is_nondegenerate(N)

    def test_normalized_construction_on_irreducible(self):
        G = cycle(5, boundary=())
        N, u = degenerate_weights_normalized(G)
        assert N.is_normalized()
        assert in_U0(N, u)
        assert all(u(v) != 0 for v in G.interior)

    def test_normalized_rejects_reducible(self):
        with pytest.raises(ValueError):
            degenerate_weights_normalized(path(3, boundary={0}))
