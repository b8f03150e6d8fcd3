import pytest

from powergraphkit import (
    PathCapExceeded,
    build_cyclic,
    build_directed_power_graph,
    build_group,
    build_power_graph,
    build_product,
    chromatic_number,
    chromatic_via_generator_peeling,
    clique_to_directed_path,
    composition_partition,
    construct_longest_path_cyclic,
    eccentricities,
    general_group_clique_number,
    independence_number,
    longest_directed_path_bruteforce,
    max_clique,
)
from powergraphkit import numtheory as nt
from powergraphkit.errors import DisconnectedGraphError
from powergraphkit.invariants import build_invariant_report, validate_coloring
from powergraphkit.powergraph import Graph

from oracles import (
    brute_chromatic_number,
    brute_independence_size,
    brute_longest_directed_path,
    brute_max_clique_size,
)


# -- eccentricities -----------------------------------------------------------


def test_eccentricities_z6():
    pg = build_power_graph(build_cyclic(6))
    summary = eccentricities(pg)
    assert summary.radius == 1
    assert summary.diameter == 2
    assert summary.center == (0, 1, 5)
    assert len(summary.center) == nt.totient(6) + 1


def test_center_sizes_from_known_cases():
    assert len(eccentricities(build_power_graph(build_cyclic(8))).center) == 8
    assert len(eccentricities(build_power_graph(build_product([2, 2]))).center) == 1


def test_eccentricities_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        eccentricities(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_radius_one_diameter_two_sample():
    for spec in ("zn:12", "zn:30", "un:45", "prod:2x6"):
        pg = build_power_graph(build_group(spec))
        summary = eccentricities(pg)
        assert summary.radius == 1
        assert summary.diameter <= 2


# -- cliques and coloring ------------------------------------------------------


def test_max_clique_z12_against_brute_force():
    pg = build_power_graph(build_cyclic(12))
    assert len(max_clique(pg)) == brute_max_clique_size(pg) == 9


def test_max_clique_z18_against_brute_force():
    pg = build_power_graph(build_cyclic(18))
    assert len(max_clique(pg)) == brute_max_clique_size(pg) == 15


def test_max_clique_prime_powers_complete():
    for n in (8, 27, 25):
        pg = build_power_graph(build_cyclic(n))
        assert len(max_clique(pg)) == n


def test_max_clique_edgeless_and_witness_is_clique():
    assert max_clique(Graph(5)) == (0,)
    pg = build_power_graph(build_cyclic(30))
    witness = max_clique(pg)
    assert all(
        pg.has_edge(u, v) for i, u in enumerate(witness) for v in witness[i + 1 :]
    )


def test_max_clique_witness_is_lexicographically_smallest():
    # two triangles of equal size share vertex 3; (0, 3, 4) beats (1, 2, 3)
    g = Graph.from_edges(5, [(0, 3), (0, 4), (3, 4), (1, 2), (1, 3), (2, 3)])
    assert max_clique(g) == (0, 3, 4)


def test_max_clique_random_graphs_match_brute():
    import random

    rng = random.Random(7)
    for trial in range(30):
        n = rng.randint(1, 11)
        g = Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.45:
                    g.add_edge(u, v)
        assert len(max_clique(g)) == brute_max_clique_size(g)


def test_chromatic_z12_and_z18():
    pg12 = build_power_graph(build_cyclic(12))
    chi12, colors12 = chromatic_number(pg12)
    assert chi12 == 9 == brute_chromatic_number(pg12)
    assert validate_coloring(pg12, list(colors12))
    assert len(set(colors12)) == 9
    pg18 = build_power_graph(build_cyclic(18))
    chi18, colors18 = chromatic_number(pg18)
    assert chi18 == 15 == nt.psi(18)
    assert validate_coloring(pg18, list(colors18))


def test_chromatic_complete_graph():
    kn = Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])
    assert chromatic_number(kn)[0] == 6


def test_chromatic_random_graphs_match_brute():
    import random

    rng = random.Random(11)
    for trial in range(20):
        n = rng.randint(1, 9)
        g = Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    g.add_edge(u, v)
        chi, colors = chromatic_number(g)
        assert chi == brute_chromatic_number(g)
        assert validate_coloring(g, list(colors))


def test_chromatic_equals_clique_on_power_graphs():
    for spec in ("zn:24", "zn:36", "un:32", "prod:2x8"):
        pg = build_power_graph(build_group(spec))
        assert chromatic_number(pg)[0] == len(max_clique(pg))


def test_generator_peeling_matches_exact():
    for n in (2, 7, 9, 12, 18, 30, 45, 60):
        group = build_cyclic(n)
        assert (
            chromatic_via_generator_peeling(group)
            == chromatic_number(build_power_graph(group))[0]
        )


def test_generator_peeling_rejects_non_cyclic():
    with pytest.raises(ValueError):
        chromatic_via_generator_peeling(build_product([2, 2]))


def test_independence_number_samples():
    pg6 = build_power_graph(build_cyclic(6))
    assert len(independence_number(pg6)) == 2 == brute_independence_size(pg6)
    kn = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert independence_number(kn) == (0,)
    pg30 = build_power_graph(build_cyclic(30))
    witness = independence_number(pg30)
    assert len(witness) == brute_independence_size(pg30)
    assert all(
        not pg30.has_edge(u, v) for i, u in enumerate(witness) for v in witness[i + 1 :]
    )


# -- directed paths ------------------------------------------------------------


def test_longest_path_z12():
    dpg = build_directed_power_graph(build_cyclic(12))
    path = longest_directed_path_bruteforce(dpg)
    assert len(path) == 9 == brute_longest_directed_path(dpg.out, 12)
    assert all(dpg.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def test_longest_path_matches_unpruned_oracle():
    for spec in ("zn:8", "zn:10", "un:16", "prod:2x4", "qn:13"):
        dpg = build_directed_power_graph(build_group(spec))
        path = longest_directed_path_bruteforce(dpg)
        assert len(path) == brute_longest_directed_path(dpg.out, dpg.n)


def test_longest_path_prime_is_hamiltonian():
    dpg = build_directed_power_graph(build_cyclic(13))
    assert len(longest_directed_path_bruteforce(dpg)) == 13


def test_longest_path_single_vertex():
    dpg = build_directed_power_graph(build_cyclic(1))
    assert longest_directed_path_bruteforce(dpg) == (0,)


def test_longest_path_cap_refusal():
    dpg = build_directed_power_graph(build_cyclic(30))
    with pytest.raises(PathCapExceeded):
        longest_directed_path_bruteforce(dpg, cap=24)


def test_construct_longest_path_cyclic():
    assert construct_longest_path_cyclic(12) == [1, 5, 7, 11, 2, 10, 4, 8, 0]
    assert construct_longest_path_cyclic(1) == [0]
    for p in (5, 13):
        assert sorted(construct_longest_path_cyclic(p)) == list(range(p))
    for n in (2, 6, 12, 18, 24, 45, 60, 100):
        seq = construct_longest_path_cyclic(n)
        assert len(seq) == nt.psi(n)
        assert seq[-1] == 0
        dpg = build_directed_power_graph(build_cyclic(n))
        assert all(dpg.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def test_clique_to_directed_path_z6():
    group = build_cyclic(6)
    dpg = build_directed_power_graph(group)
    path = clique_to_directed_path(dpg, [1, 5, 2, 4, 0])
    assert sorted(path) == [0, 1, 2, 4, 5]
    assert all(dpg.has_edge(path[i], path[i + 1]) for i in range(4))


def test_clique_to_directed_path_singleton_and_full_prime_power():
    group = build_cyclic(8)
    dpg = build_directed_power_graph(group)
    assert clique_to_directed_path(dpg, [3]) == [3]
    path = clique_to_directed_path(dpg, range(8))
    assert sorted(path) == list(range(8))
    assert all(dpg.has_edge(path[i], path[i + 1]) for i in range(7))


def test_clique_to_directed_path_rejects_non_clique():
    dpg = build_directed_power_graph(build_cyclic(6))
    with pytest.raises(ValueError):
        clique_to_directed_path(dpg, [2, 3])


def test_clique_to_directed_path_every_maximal_clique_z30():
    from powergraphkit.verify import _maximal_cliques

    group = build_cyclic(30)
    pg = build_power_graph(group)
    dpg = build_directed_power_graph(group)
    for clique in _maximal_cliques(pg):
        path = clique_to_directed_path(dpg, clique)
        assert sorted(path) == sorted(clique)
        assert all(dpg.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def test_general_group_clique_number():
    assert general_group_clique_number(build_product([2, 2])) == 2
    g144 = build_product([12, 12])
    assert general_group_clique_number(g144) == 9
    assert general_group_clique_number(g144) == len(
        max_clique(build_power_graph(g144))
    )
    for n in (6, 12, 30):
        assert general_group_clique_number(build_cyclic(n)) == nt.psi(n)


# -- composition partition -------------------------------------------------------


def test_composition_partition_z12():
    part = composition_partition(build_cyclic(12))
    assert part.blocks[0] == (0,)
    assert part.blocks[1] == (4, 6, 8)
    assert part.blocks[2] == (2, 3, 9, 10)
    assert part.blocks[3] == (1, 5, 7, 11)


def test_composition_partition_prime():
    part = composition_partition(build_cyclic(7))
    assert part.blocks[0] == (0,)
    assert part.blocks[1] == tuple(range(1, 7))


def test_composition_partition_klein_top_not_clique():
    group = build_product([2, 2])
    part = composition_partition(group)
    assert len(part.blocks[1]) == 3
    pg = build_power_graph(group)
    members = part.blocks[1]
    assert not all(
        pg.has_edge(x, y) for i, x in enumerate(members) for y in members[i + 1 :]
    )


def test_composition_partition_blocks_cover_group():
    for spec in ("zn:60", "un:40", "prod:6x6"):
        group = build_group(spec)
        part = composition_partition(group)
        seen = sorted(x for block in part.blocks.values() for x in block)
        assert seen == list(range(group.order))


# -- report ----------------------------------------------------------------------


def test_invariant_report_z18():
    report = build_invariant_report(build_cyclic(18))
    assert report.spec == "zn:18"
    assert report.radius == 1
    assert report.clique_number == 15
    assert report.chromatic_number == 15
    assert report.psi == 15
    assert report.complete is False
    assert report.connected is True
    assert report.longest_directed_path == 15
    data = report.to_dict()
    assert list(data)[:4] == ["spec", "order", "connected", "complete"]


def test_invariant_report_skips_path_above_cap():
    report = build_invariant_report(build_cyclic(30))
    assert report.longest_directed_path is None
    assert any("skipped" in note for note in report.notes)


def test_metric_inequalities_hold_across_corpus():
    for spec in ("zn:2", "zn:12", "zn:60", "un:45", "prod:2x6", "qn:41"):
        summary = eccentricities(build_power_graph(build_group(spec)))
        assert summary.radius <= summary.diameter <= 2 * summary.radius or summary.diameter == 0


def test_longest_path_random_digraphs_match_unpruned_oracle():
    import random

    from powergraphkit.powergraph import Digraph

    rng = random.Random(17)
    for trial in range(40):
        n = rng.randint(1, 8)
        out = [0] * n
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < 0.35:
                    out[u] |= 1 << v
        dg = Digraph(n, out)
        path = longest_directed_path_bruteforce(dg, cap=24)
        assert len(path) == brute_longest_directed_path(out, n)
        assert all(dg.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def test_chromatic_on_cycles():
    def cycle(k):
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])

    for k, expected in ((4, 2), (5, 3), (6, 2), (7, 3), (8, 2)):
        chi, colors = chromatic_number(cycle(k))
        assert chi == expected
        assert validate_coloring(cycle(k), list(colors))


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def test_petersen_invariants():
    g = petersen_graph()
    assert len(max_clique(g)) == 2
    assert len(independence_number(g)) == 4
    assert chromatic_number(g)[0] == 3
