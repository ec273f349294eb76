import math
from itertools import combinations

import networkx as nx
import pytest

from conftest import load_corpus
from cycleforge.analysis import (
    HostCycle,
    InternalCycle,
    canonical_cycle,
    girth,
    is_k_connected,
    is_simple_cycle,
    project_cycle,
    vertex_connectivity,
)
from cycleforge.constructors import (
    chia_thomassen,
    generalized_petersen,
    k4,
    marry,
    marry_all,
    MarriagePlan,
    petersen,
    truncate,
)
from cycleforge.errors import InvalidCycle, OriginMismatch
from cycleforge.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    path_graph,
)
from cycleforge.search import all_cycles, census_by_enumeration

GP92 = generalized_petersen(9, 2)
TRIANGLE = complete_graph(3)


def naive_connectivity(g: Graph) -> int:
    """Smallest vertex subset whose deletion disconnects g (n-1 for complete graphs)."""
    n = g.n
    for k in range(n - 1):
        for cut in combinations(range(n), k):
            rest, _ = induced_subgraph(g, set(range(n)) - set(cut))
            if not is_connected(rest):
                return k
    return n - 1


def test_girth_examples():
    assert girth(GP92).girth == 5
    assert girth(k4()) .girth == 3
    res = girth(path_graph(5))
    assert res.acyclic and res.girth == math.inf and res.witness == ()
    assert min(2 * res.girth, 5) == 5


def test_girth_against_networkx(small_corpus):
    for g in small_corpus[::3]:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        res = girth(g)
        assert res.girth == nx.girth(h)
        if not res.acyclic:
            assert len(res.witness) == res.girth
            assert is_simple_cycle(g, res.witness)
            assert res.witness == canonical_cycle(res.witness)
            shortest = sorted(c for c in all_cycles(g) if len(c) == res.girth)
            assert res.witness == shortest[0]


def test_girth_after_vertex_deletion():
    for u in range(GP92.n):
        assert girth(delete_vertex(GP92, u)[0]).girth == 5
    for g in load_corpus("cubic_connected_4_12.g6")[:40]:
        for u in range(g.n):
            assert girth(delete_vertex(g, u)[0]).girth >= girth(g).girth


def test_connectivity_examples():
    assert vertex_connectivity(GP92).kappa == 3
    ct = vertex_connectivity(chia_thomassen())
    assert ct.kappa == 2
    assert vertex_connectivity(disjoint_union(TRIANGLE, TRIANGLE)).kappa == 0
    assert vertex_connectivity(complete_graph(5)) .kappa == 4


def test_connectivity_cut_disconnects():
    for g in (GP92, chia_thomassen(), petersen(), truncate(k4())[0]):
        res = vertex_connectivity(g)
        rest, _ = induced_subgraph(g, set(range(g.n)) - set(res.cut))
        assert len(res.cut) == res.kappa and not is_connected(rest)


def test_menger_matches_subset_deletion(small_corpus):
    graphs = [g for g in small_corpus if g.n <= 10]
    assert len(graphs) > 500
    for g in graphs:
        assert vertex_connectivity(g).kappa == naive_connectivity(g)


def test_is_k_connected():
    for u in range(GP92.n):
        assert is_k_connected(delete_vertex(GP92, u)[0], 2)
    assert not is_k_connected(chia_thomassen(), 3)
    assert is_k_connected(chia_thomassen(), 2)
    assert is_k_connected(path_graph(3), 0)
    assert is_k_connected(GP92, 3) and not is_k_connected(GP92, 4)
    assert is_k_connected(complete_graph(5), 4) and not is_k_connected(complete_graph(5), 5)


def test_is_k_connected_matches_kappa(small_corpus):
    for g in small_corpus[::4]:
        kappa = vertex_connectivity(g).kappa
        for k in range(0, 5):
            assert is_k_connected(g, k) == (kappa >= k), (g.adjacency, k)


@pytest.mark.parametrize("host", [k4(), complete_bipartite(3, 3), petersen()])
def test_marriage_connectivity_bound(host):
    kappa1 = vertex_connectivity(host).kappa
    for q in (0, 9):
        kappa2 = vertex_connectivity(delete_vertex(GP92, q)[0]).kappa
        for p in range(host.n):
            h, _ = marry(MarriagePlan(host, p, GP92, q))
            assert vertex_connectivity(h).kappa >= min(kappa1, kappa2)


def test_girth_bound_of_marry_all():
    for host in (k4(), complete_bipartite(3, 3), petersen(), generalized_petersen(4, 1)):
        for guest in (k4(), GP92):
            h, _ = marry_all(host, guest, 0)
            g2u = girth(delete_vertex(guest, 0)[0]).girth
            assert girth(h).girth >= min(2 * girth(host).girth, g2u)


# -- projection -------------------------------------------------------------------


def test_project_fiber_triangle():
    h, origin = truncate(k4())
    proj = project_cycle(h, origin, [0, 1, 2])
    assert proj == InternalCycle(0, (0, 1, 2))


def test_project_hamiltonian_cycle_of_truncated_k4():
    h, origin = truncate(k4())
    ham = [c for c in all_cycles(h) if len(c) == 12]
    assert len(ham) == 3
    for c in ham:
        proj = project_cycle(h, origin, c, host=k4())
        assert isinstance(proj, HostCycle)
        assert sorted(proj.host_cycle) == [0, 1, 2, 3]
        assert proj.fiber_lengths == (3, 3, 3, 3)


def test_project_longest_cycles_of_truncated_petersen():
    h, origin = truncate(petersen())
    longest = [c for c in all_cycles(h) if len(c) == 27]
    assert len(longest) == census_by_enumeration(petersen())[1]
    for c in longest:
        proj = project_cycle(h, origin, c, host=petersen())
        assert len(proj.host_cycle) == 9 and proj.fiber_lengths == (3,) * 9


def test_every_cycle_projects(small_corpus):
    h, origin = truncate(k4())
    fiber, _ = delete_vertex(k4(), 0)
    kinds = {InternalCycle: 0, HostCycle: 0}
    for c in all_cycles(h):
        proj = project_cycle(h, origin, c, host=k4())
        kinds[type(proj)] += 1
        if isinstance(proj, InternalCycle):
            assert is_simple_cycle(fiber, proj.cycle)
        else:
            assert all(len(p) >= 1 for p in proj.fiber_paths)
    assert kinds[InternalCycle] == 4 and kinds[HostCycle] > 0


def test_project_single_marriage():
    h, origin = marry(MarriagePlan(k4(), 0, k4(), 0))
    # prism: the fiber triangle is 3,4,5
    assert project_cycle(h, origin, [3, 4, 5]) == InternalCycle(0, (0, 1, 2))
    hc = [c for c in all_cycles(h) if len(c) == 6]
    proj = project_cycle(h, origin, hc[0], host=k4())
    assert isinstance(proj, HostCycle) and len(proj.host_cycle) == 4


def test_project_errors():
    h, origin = truncate(k4())
    with pytest.raises(InvalidCycle):
        project_cycle(h, origin, [0, 1, 5])
    with pytest.raises(InvalidCycle):
        project_cycle(h, origin, [0, 1])
    with pytest.raises(OriginMismatch):
        project_cycle(GP92, origin, [0, 1, 2, 3, 4, 5, 6, 7, 8])
