import pytest

from grundylab import (
    CycleDetected,
    GameDef,
    LimitExceeded,
    MISERE_TERMINAL,
    UnknownPosition,
    adjoin_misere_terminal,
    enumerate_subgame,
    graph_from_adjacency,
)


def one_pile_nim():
    return GameDef("nim", {}, lambda p: [(v,) for v in range(p[0])])


def test_moves_deduplicates():
    game = GameDef("dup", {}, lambda p: [(0,), (0,), (1,)])
    assert game.moves((2,)) == [(0,), (1,)]


def test_canonical_applied_to_moves():
    game = GameDef("sorted", {}, lambda p: [(2, 1), (1, 2)],
                   canonical=lambda p: tuple(sorted(p)))
    assert game.moves((3, 3)) == [(1, 2)]


def test_is_terminal():
    game = one_pile_nim()
    assert game.is_terminal((0,))
    assert not game.is_terminal((3,))


def test_enumerate_single_pile():
    graph = enumerate_subgame(one_pile_nim(), [(3,)])
    assert len(graph) == 4
    assert graph.terminals() == [(0,)]
    assert graph.edge_count() == 3 + 2 + 1


def test_depth_is_longest_move_count():
    graph = enumerate_subgame(one_pile_nim(), [(5,)])
    assert graph.depth((5,)) == 5
    assert graph.depth((0,)) == 0
    with pytest.raises(UnknownPosition):
        graph.depth((9,))


def test_topological_order_parents_first():
    graph = enumerate_subgame(one_pile_nim(), [(4,)])
    index = {x: i for i, x in enumerate(graph.topo)}
    for x, opts in graph.succ.items():
        for y in opts:
            assert index[x] < index[y]


def test_cycle_detected():
    adj = {"a": ["b"], "b": ["c"], "c": ["a"]}
    with pytest.raises(CycleDetected):
        graph_from_adjacency(adj)


def test_self_loop_detected():
    game = GameDef("loop", {}, lambda p: [p])
    with pytest.raises(CycleDetected):
        enumerate_subgame(game, [(1,)])


def test_node_cap():
    with pytest.raises(LimitExceeded):
        enumerate_subgame(one_pile_nim(), [(100,)], node_cap=10)


def test_adjacency_root_inference():
    adj = {"r": ["a", "b"], "a": [], "b": ["a"]}
    graph = graph_from_adjacency(adj)
    assert graph.roots == frozenset({"r"})


def test_adjacency_rejects_dangling_edge():
    with pytest.raises(UnknownPosition):
        graph_from_adjacency({"a": ["missing"]})


def test_adjoin_terminal_shape():
    graph = enumerate_subgame(one_pile_nim(), [(2,)])
    extended = adjoin_misere_terminal(graph)
    assert len(extended) == len(graph) + 1
    assert extended.succ[(0,)] == (MISERE_TERMINAL,)
    assert extended.succ[MISERE_TERMINAL] == ()
    # non-terminal successor lists are unchanged
    assert extended.succ[(2,)] == graph.succ[(2,)]


def test_misere_sentinel_repr():
    assert repr(MISERE_TERMINAL) == "x_T"
