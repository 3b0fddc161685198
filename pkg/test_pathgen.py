import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.network.pathgen import enumerate_paths, format_pathsets, paths_through_edge
from src.network.topology import build_torus
from src.schemas.models import Commodity
from src.testing.instance_generator import InstanceGenerator
from src.testing.oracles import count_paths_dfs
from src.utils.errors import NoPathFound, UnknownEdge


def commodity(s: int, t: int) -> Commodity:
    return Commodity(id=0, source=s, destination=t, demand=1e6)


def test_adjacent_nodes_one_hop():
    graph = build_torus(4, 4, 1e9)
    pathset = enumerate_paths(graph, commodity(0, 1), max_hops=1)
    assert [p.nodes for p in pathset.paths] == [(0, 1)]


def test_two_by_two_diagonal_has_two_paths():
    graph = build_torus(2, 2, 1e9)
    pathset = enumerate_paths(graph, commodity(0, 3), max_hops=2)
    assert [p.nodes for p in pathset.paths] == [(0, 1, 3), (0, 2, 3)]


def test_no_path_within_bound():
    graph = build_torus(4, 4, 1e9)
    with pytest.raises(NoPathFound):
        enumerate_paths(graph, commodity(0, 10), max_hops=1)


@pytest.mark.parametrize(
    "rows, cols, s, t, hops",
    [(3, 3, 0, 4, 3), (3, 3, 0, 1, 4), (4, 4, 0, 5, 4), (4, 4, 0, 10, 6), (2, 3, 0, 4, 5)],
)
def test_path_count_matches_dfs(rows, cols, s, t, hops):
    graph = build_torus(rows, cols, 1e9)
    pathset = enumerate_paths(graph, commodity(s, t), hops)
    assert len(pathset) == count_paths_dfs(graph, s, t, hops)


def test_paths_are_simple_and_bounded():
    graph = build_torus(4, 4, 1e9)
    pathset = enumerate_paths(graph, commodity(0, 10), max_hops=6)
    for path in pathset.paths:
        assert path.nodes[0] == 0 and path.nodes[-1] == 10
        assert len(set(path.nodes)) == len(path.nodes)
        assert path.hops <= 6
        assert all(graph.has_edge(edge) for edge in path.edges)


def test_edge_index_is_consistent():
    graph = build_torus(3, 3, 1e9)
    pathset = enumerate_paths(graph, commodity(0, 4), max_hops=4)
    for edge in graph.edge_keys:
        expected = [i for i, path in enumerate(pathset.paths) if edge in path.edges]
        assert paths_through_edge(pathset, edge) == expected
    with pytest.raises(UnknownEdge):
        paths_through_edge(pathset, (0, 0))


def test_more_hops_never_fewer_paths():
    graph = build_torus(4, 4, 1e9)
    counts = [len(enumerate_paths(graph, commodity(0, 5), h)) for h in range(2, 7)]
    assert counts == sorted(counts)


def test_enumeration_is_deterministic():
    graph = build_torus(4, 4, 1e9)
    first = enumerate_paths(graph, commodity(3, 12), 5)
    second = enumerate_paths(build_torus(4, 4, 1e9), commodity(3, 12), 5)
    assert first.paths == second.paths
    assert format_pathsets([first]) == format_pathsets([second])
    assert format_pathsets([first]).splitlines()[0].startswith("0: 3->")


@pytest.mark.parametrize("seed", range(300))
def test_random_path_sets(seed):
    generator = InstanceGenerator(seed)
    graph = generator.torus(max_dim=4)
    [(s, t)] = generator.endpoints(graph, 1)
    hops = int(generator.rng.integers(1, 7))
    expected = count_paths_dfs(graph, s, t, hops)
    if expected == 0:
        with pytest.raises(NoPathFound):
            enumerate_paths(graph, commodity(s, t), hops)
        return
    pathset = enumerate_paths(graph, commodity(s, t), hops)
    assert len(pathset) == expected
    nodes = [path.nodes for path in pathset.paths]
    assert nodes == sorted(nodes)
    for path in pathset.paths:
        assert path.nodes[0] == s and path.nodes[-1] == t
        assert len(set(path.nodes)) == len(path.nodes)
        assert 1 <= path.hops <= hops
