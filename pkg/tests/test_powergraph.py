import pytest

from powergraphkit import (
    PowerGraphKitError,
    build_cyclic,
    build_cyclic_class_graph,
    build_directed_power_graph,
    build_group,
    build_power_graph,
    build_product,
    class_graph_to_dot,
    digraph_to_dot,
    embed_classes,
    graph_to_dot,
)
from powergraphkit.powergraph import Graph, iter_bits


def brute_power_graph_edges(group):
    """Subgroup-containment adjacency recomputed from scratch."""
    n = group.order
    subs = [set(group.cyclic_subgroup(x)) for x in range(n)]
    edges = set()
    for x in range(n):
        for y in range(x + 1, n):
            if subs[x] <= subs[y] or subs[y] <= subs[x]:
                edges.add((x, y))
    return edges


def test_power_graph_matches_brute_adjacency():
    for spec in ("zn:12", "zn:18", "prod:2x4", "un:16", "qn:41"):
        group = build_group(spec)
        pg = build_power_graph(group)
        expected = brute_power_graph_edges(group)
        actual = {
            (u, v) for u in range(pg.n) for v in iter_bits(pg.adj[u]) if v > u
        }
        assert actual == expected


def test_power_graph_no_self_loops_and_symmetric():
    pg = build_power_graph(build_cyclic(30))
    for v in range(pg.n):
        assert not (pg.adj[v] >> v) & 1
        for w in iter_bits(pg.adj[v]):
            assert pg.has_edge(w, v)


def test_identity_universal():
    for spec in ("zn:9", "un:45", "prod:6x6"):
        pg = build_power_graph(build_group(spec))
        assert pg.degree(0) == pg.n - 1


def test_prime_order_power_graph_complete():
    for p in (2, 3, 5, 7, 13):
        pg = build_power_graph(build_cyclic(p))
        assert pg.edge_count() == p * (p - 1) // 2


def test_z6_adjacency_examples():
    pg = build_power_graph(build_cyclic(6))
    for v in (1, 2, 3, 4, 5):
        assert pg.has_edge(0, v)
    assert pg.has_edge(2, 4)
    assert not pg.has_edge(2, 3)
    assert pg.has_edge(1, 5)


def test_trivial_group_graph():
    pg = build_power_graph(build_cyclic(1))
    assert pg.n == 1 and pg.edge_count() == 0


def test_directed_power_graph_orientation():
    g4 = build_cyclic(4)
    dpg = build_directed_power_graph(g4)
    assert dpg.has_edge(1, 2) and not dpg.has_edge(2, 1)
    g6 = build_cyclic(6)
    dpg6 = build_directed_power_graph(g6)
    assert dpg6.has_edge(1, 5) and dpg6.has_edge(5, 1)
    for x in range(1, 6):
        assert dpg6.has_edge(x, 0)
        assert not dpg6.has_edge(0, x)


def test_directed_support_equals_undirected():
    for spec in ("zn:24", "un:36", "prod:2x6"):
        group = build_group(spec)
        pg = build_power_graph(group)
        dpg = build_directed_power_graph(group)
        support = dpg.underlying()
        assert support.adj == pg.adj


def test_mutual_edges_are_cogenerator_pairs():
    group = build_cyclic(12)
    dpg = build_directed_power_graph(group)
    for x in range(12):
        for y in range(12):
            if x == y:
                continue
            mutual = dpg.has_edge(x, y) and dpg.has_edge(y, x)
            assert mutual == (
                x != y and group.same_cyclic_subgroup(x, y)
            )


def test_class_graph_z18_matches_known_diagram():
    gcc = build_cyclic_class_graph(build_cyclic(18))
    assert gcc.n == 6
    assert sorted(gcc.weights, reverse=True) == [6, 6, 2, 2, 1, 1]
    assert sum(row.bit_count() for row in gcc.dir_adj) == 12
    assert sorted(gcc.subgroup_orders, reverse=True) == [18, 9, 6, 3, 2, 1]


def test_class_graph_weights_sum_to_order():
    for spec in ("zn:36", "un:40", "prod:12x12"):
        group = build_group(spec)
        gcc = build_cyclic_class_graph(group)
        assert sum(gcc.weights) == group.order


def test_class_graph_is_dag_with_identity_sink():
    for spec in ("zn:60", "un:32", "prod:2x6"):
        gcc = build_cyclic_class_graph(build_group(spec))
        identity_class = gcc.class_of[0]
        assert gcc.weights[identity_class] == 1
        # every other class reaches the identity class directly
        for i in range(gcc.n):
            if i != identity_class:
                assert (gcc.dir_adj[i] >> identity_class) & 1
        # antisymmetry: no two classes point at each other
        for i in range(gcc.n):
            for j in iter_bits(gcc.dir_adj[i]):
                assert not (gcc.dir_adj[j] >> i) & 1


def test_class_graph_classes_are_cliques_in_power_graph():
    group = build_cyclic(36)
    pg = build_power_graph(group)
    gcc = build_cyclic_class_graph(group)
    for members in gcc.classes:
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                assert pg.has_edge(x, y)


def test_z6_class_graph_shape():
    gcc = build_cyclic_class_graph(build_cyclic(6))
    assert gcc.n == 4
    und = gcc.undirected
    # complete except the one incomparable pair (order-2 and order-3 classes)
    assert und.edge_count() == 5
    orders = gcc.subgroup_orders
    i2 = orders.index(2)
    i3 = orders.index(3)
    assert not und.has_edge(i2, i3)


def test_z9_class_graph_triangle():
    gcc = build_cyclic_class_graph(build_cyclic(9))
    assert gcc.n == 3
    assert gcc.undirected.edge_count() == 3


def test_hasse_reduction_z18():
    gcc = build_cyclic_class_graph(build_cyclic(18))
    by_order = {gcc.subgroup_orders[i]: i for i in range(gcc.n)}
    # covers: 18 -> 9, 18 -> 6, 9 -> 3, 6 -> 3, 6 -> 2, 3 -> 1, 2 -> 1
    cover_pairs = {
        (gcc.subgroup_orders[i], gcc.subgroup_orders[j])
        for i in range(gcc.n)
        for j in iter_bits(gcc.hasse_adj[i])
    }
    assert cover_pairs == {(18, 9), (18, 6), (9, 3), (6, 3), (6, 2), (3, 1), (2, 1)}
    assert by_order[18] is not None


def test_embed_classes_certifies_induced_subgraph():
    for spec in ("zn:18", "zn:9", "zn:1", "un:45", "prod:2x4"):
        group = build_group(spec)
        pg = build_power_graph(group)
        gcc = build_cyclic_class_graph(group)
        mapping = embed_classes(gcc, pg)
        assert sorted(mapping) == list(range(gcc.n))
        assert all(mapping[i] == gcc.reps[i] for i in range(gcc.n))


def test_embed_classes_counts_z18():
    group = build_cyclic(18)
    gcc = build_cyclic_class_graph(group)
    pg = build_power_graph(group)
    mapping = embed_classes(gcc, pg)
    induced_edges = sum(
        1
        for i in range(gcc.n)
        for j in range(i + 1, gcc.n)
        if pg.has_edge(mapping[i], mapping[j])
    )
    assert induced_edges == gcc.undirected.edge_count() == 12


def test_embed_classes_rejects_mismatched_sources():
    gcc = build_cyclic_class_graph(build_cyclic(18))
    other = build_power_graph(build_cyclic(12))
    with pytest.raises(PowerGraphKitError):
        embed_classes(gcc, other)


def test_quotient_distance_on_sample():
    from powergraphkit.invariants import bfs_distances

    for spec in ("zn:30", "un:45"):
        group = build_group(spec)
        pg = build_power_graph(group)
        gcc = build_cyclic_class_graph(group)
        cdist = [bfs_distances(gcc.undirected, c) for c in range(gcc.n)]
        for u in range(pg.n):
            du = bfs_distances(pg, u)
            for v in range(u + 1, pg.n):
                if gcc.class_of[u] != gcc.class_of[v]:
                    assert du[v] == cdist[gcc.class_of[u]][gcc.class_of[v]]


def _dot_is_well_formed(text: str, directed: bool) -> bool:
    lines = text.strip().splitlines()
    head = "digraph" if directed else "graph"
    if not lines[0].startswith(head) or not lines[0].endswith("{"):
        return False
    if lines[-1] != "}":
        return False
    edge_op = "->" if directed else "--"
    for line in lines[1:-1]:
        line = line.strip()
        if not line.endswith(";"):
            return False
        body = line[:-1]
        if edge_op in body:
            left, _, right = body.partition(edge_op)
            if not (left.strip().isdigit() and right.strip().split()[0].isdigit()):
                return False
        elif "[label=" not in body:
            return False
    return True


def test_dot_exports_are_well_formed():
    group = build_cyclic(18)
    pg = build_power_graph(group)
    dpg = build_directed_power_graph(group)
    gcc = build_cyclic_class_graph(group)
    assert _dot_is_well_formed(graph_to_dot(pg, group.labels), directed=False)
    assert _dot_is_well_formed(digraph_to_dot(dpg, group.labels), directed=True)
    assert _dot_is_well_formed(class_graph_to_dot(gcc), directed=True)
    assert _dot_is_well_formed(class_graph_to_dot(gcc, hasse=True), directed=True)


def test_class_dot_labels_carry_order_and_weight():
    gcc = build_cyclic_class_graph(build_cyclic(18))
    text = class_graph_to_dot(gcc)
    assert 'label="Z_18(6)"' in text
    assert 'label="Z_9(6)"' in text
    assert 'label="Z_1(1)"' in text


def test_product_label_rendering_in_dot():
    group = build_product([2, 2])
    text = graph_to_dot(build_power_graph(group), group.labels)
    assert 'label="(0,0)"' in text and 'label="(1,1)"' in text


def test_graph_helpers():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.degree(1) == 2
    assert not g.is_connected()
    comp = g.complement()
    assert comp.has_edge(0, 2) and not comp.has_edge(0, 1)
    sub = g.induced([0, 1, 2])
    assert sub.edge_count() == 2
    with pytest.raises(ValueError):
        g.add_edge(2, 2)


def test_dot_highlight_overlay():
    group = build_cyclic(36)
    pg = build_power_graph(group)
    text = graph_to_dot(pg, group.labels, highlight=[(2, 12), (12, 3)])
    bold = [line for line in text.splitlines() if "style=bold" in line]
    assert len(bold) == 2
    assert any("2 -- 12" in line for line in bold)
