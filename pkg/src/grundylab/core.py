"""Game graphs: rule objects, reachable subgames, depth, misere transform.

Positions are arbitrary hashable values.  Pile games use tuples of
non-negative ints; explicit fixtures use string node ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

Position = Hashable

DEFAULT_NODE_CAP = 5_000_000


class GameError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetected(GameError):
    """A position recurs on an expansion path; the move relation is not acyclic."""


class LimitExceeded(GameError):
    """Enumeration passed the configured node cap."""


class UnknownPosition(GameError):
    pass


class UnknownFixture(GameError):
    pass


class UnknownPredicate(GameError):
    pass


class MissingSet(GameError):
    pass


class InvalidParams(GameError):
    pass


class UnsupportedParams(GameError):
    pass


class NotTameLabel(GameError):
    pass


class _MisereTerminal:
    """Unique sentinel node adjoined below the former terminals."""

    __slots__ = ()

    def __repr__(self):
        return "x_T"


MISERE_TERMINAL = _MisereTerminal()


@dataclass(frozen=True)
class GameDef:
    """Rule object for one game instance: option enumeration + terminal test.

    ``options`` must return a finite collection of positions, each strictly
    smaller in some well-founded measure.  ``canonical`` (optional) maps a
    position to the representative of its symmetry orbit; it must commute
    with the move rule.
    """

    family: str
    params: dict = field(default_factory=dict)
    options: Callable[[Position], list] = None
    canonical: Callable[[Position], Position] | None = None

    def canon(self, p: Position) -> Position:
        return p if self.canonical is None else self.canonical(p)

    def moves(self, p: Position) -> list:
        """Canonicalized, deduplicated option list."""
        if self.canonical is None:
            seen = dict.fromkeys(self.options(p))
            return list(seen)
        return list(dict.fromkeys(self.canonical(y) for y in self.options(p)))

    def is_terminal(self, p: Position) -> bool:
        return not self.options(p)


class ReachableGraph:
    """The finite subgame generated by a root set: explicit nodes and moves.

    Immutable after construction.  ``topo`` lists nodes with every move
    source before its targets; solvers iterate it in reverse.
    """

    def __init__(self, roots, succ, topo, depth):
        self.roots = frozenset(roots)
        self.succ = succ          # node -> tuple of option nodes
        self.topo = topo          # nodes, parents before children
        self._depth = depth       # node -> d(x)

    @property
    def nodes(self):
        return self.succ.keys()

    def __len__(self):
        return len(self.succ)

    def __contains__(self, x):
        return x in self.succ

    def edge_count(self) -> int:
        return sum(len(v) for v in self.succ.values())

    def terminals(self):
        return [x for x, opts in self.succ.items() if not opts]

    def is_terminal(self, x) -> bool:
        return not self.succ[x]

    def depth(self, x) -> int:
        """d(x): the greatest number of successive moves from x to a terminal."""
        try:
            return self._depth[x]
        except KeyError:
            raise UnknownPosition(f"position {x!r} not in graph") from None

    def describe_bound(self) -> str:
        roots = sorted(self.roots, key=repr)
        if len(roots) > 4:
            shown = ", ".join(repr(r) for r in roots[:3])
            root_str = f"{len(roots)} roots ({shown}, ...)"
        else:
            root_str = ", ".join(repr(r) for r in roots)
        return f"roots={root_str}; nodes={len(self)}"


def enumerate_subgame(game: GameDef, roots: Iterable[Position],
                      node_cap: int = DEFAULT_NODE_CAP) -> ReachableGraph:
    """Materialize the subgame reachable from ``roots``.

    Breadth-first closure under the move rule, then a DFS topological sort
    that doubles as the mandatory cycle check.
    """
    root_set = list(dict.fromkeys(game.canon(r) for r in roots))
    succ: dict = {}
    queue = deque(root_set)
    while queue:
        x = queue.popleft()
        if x in succ:
            continue
        opts = tuple(game.moves(x))
        succ[x] = opts
        if len(succ) > node_cap:
            raise LimitExceeded(f"node cap {node_cap} exceeded")
        for y in opts:
            if y not in succ:
                queue.append(y)
    topo = _topological_order(succ)
    depth = _compute_depths(succ, topo)
    return ReachableGraph(root_set, succ, topo, depth)


def graph_from_adjacency(adj: dict, roots=None) -> ReachableGraph:
    """Build a ReachableGraph from an explicit node -> successors mapping."""
    succ = {x: tuple(ys) for x, ys in adj.items()}
    for x, ys in succ.items():
        for y in ys:
            if y not in succ:
                raise UnknownPosition(f"edge target {y!r} has no node entry")
    if roots is None:
        targets = {y for ys in succ.values() for y in ys}
        roots = [x for x in succ if x not in targets] or list(succ)
    topo = _topological_order(succ)
    depth = _compute_depths(succ, topo)
    return ReachableGraph(roots, succ, topo, depth)


def _topological_order(succ: dict) -> list:
    """Iterative DFS order (parents first); raises CycleDetected on back edges."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(succ, WHITE)
    order = []
    for start in succ:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = GRAY
        while stack:
            x, it = stack[-1]
            advanced = False
            for y in it:
                if color[y] == GRAY:
                    raise CycleDetected(f"position {y!r} recurs on the expansion path")
                if color[y] == WHITE:
                    color[y] = GRAY
                    stack.append((y, iter(succ[y])))
                    advanced = True
                    break
            if not advanced:
                color[x] = BLACK
                order.append(x)
                stack.pop()
    order.reverse()
    return order


def _compute_depths(succ: dict, topo: list) -> dict:
    depth = {}
    for x in reversed(topo):
        opts = succ[x]
        depth[x] = 1 + max(depth[y] for y in opts) if opts else 0
    return depth


def adjoin_misere_terminal(graph: ReachableGraph) -> ReachableGraph:
    """Remark-3 transform: one fresh terminal below every former terminal.

    Normal SG values of the result, restricted to the original nodes, equal
    the misere SG values of the input.
    """
    succ = {}
    for x, opts in graph.succ.items():
        succ[x] = opts if opts else (MISERE_TERMINAL,)
    succ[MISERE_TERMINAL] = ()
    return graph_from_adjacency(succ, roots=graph.roots)
