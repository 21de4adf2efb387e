import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kmfactor.cgraph import (
    DynkinGraph,
    all_graphs,
    c_dc,
    c_direct,
    canonical_form,
    contract_edge,
    count_k_partitions,
    cycle_edges,
    delete_edge,
    format_graph,
    k_partition_counts,
    k_partitions,
    leaf_reduce,
    parse_graph,
    remove_vertex,
    totally_disconnected_subsets,
)
from kmfactor.errors import GraphFormatError, NotAnEdge

P2 = DynkinGraph.path(2)
C3 = DynkinGraph.cycle(3)
EMPTY2 = DynkinGraph(2)


def random_graph(rng, n, p=0.5):
    return DynkinGraph(n, frozenset(e for e in itertools.combinations(range(n), 2)
                                    if rng.random() < p))


def random_tree(rng, n):
    return DynkinGraph(n, frozenset((v, rng.randrange(v)) for v in range(1, n)))


def brute_c(G):
    """c(G) from counts produced by literal enumeration of ordered tuples."""
    total = Fraction(0)
    for k in range(1, G.n + 1):
        total += Fraction((-1) ** k * sum(1 for _ in k_partitions(G, k)), k)
    return (-1) ** G.n * total


def test_independent_sets():
    assert totally_disconnected_subsets(P2) == [{0}, {1}]
    assert totally_disconnected_subsets(C3) == [{0}, {1}, {2}]
    assert totally_disconnected_subsets(EMPTY2) == [{0}, {1}, {0, 1}]


def test_k_partition_examples():
    assert count_k_partitions(P2, 1) == 0
    assert count_k_partitions(P2, 2) == 2
    assert [count_k_partitions(C3, k) for k in (1, 2, 3)] == [0, 0, 6]
    assert count_k_partitions(DynkinGraph(1), 1) == 1
    with pytest.raises(ValueError):
        count_k_partitions(P2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_match_enumeration(n):
    for G in all_graphs(n):
        counts = k_partition_counts(G)
        for k in range(1, n + 1):
            parts = list(k_partitions(G, k))
            assert len(parts) == counts[k]
            for J in parts:
                assert all(J) and frozenset().union(*J) == frozenset(range(n))
                assert sum(map(len, J)) == n
                assert all(G.is_independent(p) for p in J)


def test_edgeless_counts_are_surjections():
    # on an edgeless graph every ordered set partition counts
    G = DynkinGraph(5)
    for k in range(1, 6):
        surj = sum((-1) ** i * math.comb(k, i) * (k - i) ** 5 for i in range(k + 1))
        assert count_k_partitions(G, k) == surj


def test_c_direct_examples():
    assert c_direct(P2) == 1
    assert c_direct(C3) == 2
    assert c_direct(EMPTY2) == 0


def test_surgery_examples():
    e = (0, 1)
    assert delete_edge(C3, e) == DynkinGraph(3, frozenset({(0, 2), (1, 2)}))
    assert contract_edge(C3, e) == P2
    assert delete_edge(P2, e) == EMPTY2
    assert contract_edge(P2, e) == DynkinGraph(1)
    C4 = DynkinGraph.cycle(4)
    assert canonical_form(delete_edge(C4, e)) == canonical_form(DynkinGraph.path(4))
    assert canonical_form(contract_edge(C4, e)) == canonical_form(C3)
    with pytest.raises(NotAnEdge):
        delete_edge(EMPTY2, (0, 1))
    with pytest.raises(NotAnEdge):
        contract_edge(C4, (0, 2))


def test_contraction_merges_neighbourhoods():
    # 0-1, 1-2, 0-3: contracting 0-1 gives r adjacent to 2 and 3
    G = DynkinGraph(4, frozenset({(0, 1), (1, 2), (0, 3)}))
    H = contract_edge(G, (1, 0))
    assert H == DynkinGraph(3, frozenset({(0, 2), (1, 2)}))


def test_c_dc_examples():
    assert c_dc(DynkinGraph.path(5)) == 1
    star6 = DynkinGraph(6, frozenset((0, i) for i in range(1, 6)))
    assert c_dc(star6) == 1
    for m in range(3, 9):
        assert c_dc(DynkinGraph.cycle(m)) == m - 1
    two_triangles = DynkinGraph(6, frozenset({(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}))
    assert c_dc(two_triangles) == 0


def test_leaf_reduce_examples():
    rng = random.Random(1)
    for n in range(1, 9):
        assert leaf_reduce(random_tree(rng, n)) == DynkinGraph(1)
    pendant = DynkinGraph(4, frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}))
    assert leaf_reduce(pendant) == C3
    assert leaf_reduce(DynkinGraph.cycle(4)) == DynkinGraph.cycle(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_methods_agree_exhaustive(n):
    memo = {}
    for G in all_graphs(n):
        c = c_direct(G)
        assert c == c_dc(G, memo) == c_direct(leaf_reduce(G))
        assert (c > 0) == G.is_connected()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_against_literal_enumeration(n):
    for G in all_graphs(n):
        assert brute_c(G) == c_direct(G)


def test_methods_agree_random():
    rng = random.Random(2024)
    for _ in range(60):
        G = random_graph(rng, rng.randint(6, 7), rng.choice([0.3, 0.5, 0.7]))
        assert c_direct(G) == c_dc(G)


def test_complete_graphs():
    # only k = n contributes, with c_n = n!, so c(K_n) = n!/n
    for n in range(1, 7):
        K = DynkinGraph(n, frozenset(itertools.combinations(range(n), 2)))
        assert c_direct(K) == c_dc(K) == math.factorial(n - 1)


def test_leaf_recurrence():
    rng = random.Random(7)
    graphs = [random_tree(rng, rng.randint(2, 7)) for _ in range(15)]
    for _ in range(15):
        n = rng.randint(3, 7)
        T = random_tree(rng, n)
        extra = rng.sample([e for e in itertools.combinations(range(n), 2)
                            if e not in T.edges], 1)
        graphs.append(DynkinGraph(n, T.edges | set(extra)))
    checked = 0
    for G in graphs:
        for p in range(G.n):
            if G.degree(p) != 1:
                continue
            H = remove_vertex(G, p)
            cG, cH = k_partition_counts(G), k_partition_counts(H)
            for k in range(1, G.n + 1):
                assert cG[k] == k * cH.get(k - 1, 0) + (k - 1) * cH.get(k, 0)
            assert c_direct(G) == c_direct(H)
            checked += 1
    assert checked > 20


def test_isolated_vertex_recurrence():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 7)
        G = random_graph(rng, n)
        for v in range(n):
            if G.degree(v):
                continue
            H = remove_vertex(G, v)
            cG, cH = k_partition_counts(G), k_partition_counts(H)
            for k in range(1, n + 1):
                assert cG[k] == k * (cH.get(k, 0) + cH.get(k - 1, 0))


def test_deletion_contraction_counts():
    rng = random.Random(3)
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 6))
        for e in G.sorted_edges():
            cG = k_partition_counts(G)
            cDel = k_partition_counts(delete_edge(G, e))
            cCon = k_partition_counts(contract_edge(G, e))
            for k in range(1, G.n + 1):
                assert cG[k] + cCon.get(k, 0) == cDel[k]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(
        list(itertools.combinations(range(n), 2)) or [(0, 0)])), st.permutations(range(n)))))
def test_canonical_form_is_invariant(data):
    n, edges, perm = data
    edges = {e for e in edges if e[0] != e[1]}
    G = DynkinGraph(n, frozenset(edges))
    H = DynkinGraph(n, frozenset((perm[i], perm[j]) for i, j in edges))
    assert canonical_form(G) == canonical_form(H)


def test_canonical_form_separates():
    forms = {}
    for G in all_graphs(5):
        forms.setdefault(canonical_form(G), G)
    assert len(forms) == 34


def test_cycle_edges():
    assert cycle_edges(DynkinGraph.path(4)) == []
    pendant = DynkinGraph(4, frozenset({(0, 1), (1, 2), (0, 2), (2, 3)}))
    assert cycle_edges(pendant) == [(0, 1), (0, 2), (1, 2)]


def test_graph_file_round_trip():
    G = DynkinGraph(4, frozenset({(2, 1), (0, 3)}))
    text = format_graph(G)
    assert text == "vertices 4\nedge 0 3\nedge 1 2\n"
    assert parse_graph(text) == G


@pytest.mark.parametrize("text", [
    "", "vertices\n", "vertices 2\nedge 0 2\n", "vertices 2\nedge 1 1\n",
    "vertices 2\nedge 0 1\nedge 1 0\n", "vertices 0\n", "nodes 2\n", "vertices 2\nedge 0\n",
])
def test_graph_file_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)
