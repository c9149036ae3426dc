"""Disjunctive sums: product games, the XOR rule, and the tame-sum swap law."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor

from .core import GameDef, NotTameLabel, ReachableGraph, enumerate_subgame
from .grundy import Label, sg_labels
from .classify import ClassReport, classify


def sum_game(games: list[GameDef]) -> GameDef:
    """Product rule object: a position is a tuple of component positions and
    a move is a move in exactly one component."""
    if len(games) < 2:
        raise ValueError("a disjunctive sum needs at least two summands")

    def options(pos):
        out = []
        for i, g in enumerate(games):
            for y in g.moves(pos[i]):
                out.append(pos[:i] + (y,) + pos[i + 1:])
        return out

    def canonical(pos):
        return tuple(g.canon(p) for g, p in zip(games, pos))

    family = "+".join(g.family for g in games)
    return GameDef(family=family, params={"summands": len(games)},
                   options=options, canonical=canonical)


def sum_graph(games: list[GameDef], roots: list, **kwargs) -> ReachableGraph:
    """Explicit product subgame reachable from the root tuple(s).

    ``roots`` is one root per summand, or a list of such tuples.
    """
    game = sum_game(games)
    root_tuples = _normalize_roots(games, roots)
    return enumerate_subgame(game, root_tuples, **kwargs)


def _normalize_roots(games, roots):
    # accept one component root per summand as shorthand for a single
    # product root; otherwise expect a list of product-root tuples
    roots = list(roots)
    if len(roots) == len(games) and not all(
            isinstance(r, tuple) and len(r) == len(games) for r in roots):
        return [tuple(roots)]
    return roots


def sum_sg(values) -> int:
    """Bitwise XOR fold: the normal SG value of a sum of components."""
    return reduce(xor, values, 0)


def tame_sum_label(labels: list[Label]) -> Label:
    """Label of a sum position from tame component labels.

    All swaps: (1,0) iff the number of (1,0) inputs is odd, else (0,1).
    Otherwise the sum position satisfies g_minus = g = XOR of the g's.
    """
    for lab in labels:
        lab = Label(*lab)
        if lab.g != lab.g_minus and not lab.is_swap:
            raise NotTameLabel(f"{tuple(lab)} cannot occur in a tame game")
    if all(Label(*lab).is_swap for lab in labels):
        ones = sum(1 for lab in labels if tuple(lab) == (1, 0))
        return Label(1, 0) if ones % 2 == 1 else Label(0, 1)
    g = sum_sg(lab[0] for lab in labels)
    return Label(g, g)


@dataclass
class ClosureReport:
    target: str
    summand_reports: list
    sum_report: ClassReport
    holds: bool
    label_mismatches: list

    @property
    def fast_path_ok(self) -> bool:
        return not self.label_mismatches


def check_closure(target: str, games: list[GameDef], roots: list,
                  **kwargs) -> ClosureReport:
    """Classify the explicit sum and report whether ``target`` survives.

    For tame or miserable summands the theorem-derived fast path
    (``tame_sum_label``) is cross-checked against every sum label.
    """
    summand_lgs = []
    summand_reports = []
    root_tuples = _normalize_roots(games, roots)
    for i, g in enumerate(games):
        comp_roots = {r[i] for r in root_tuples}
        lg = sg_labels(enumerate_subgame(g, comp_roots, **kwargs))
        summand_lgs.append(lg)
        summand_reports.append(classify(lg))

    graph = sum_graph(games, root_tuples, **kwargs)
    sum_lg = sg_labels(graph)
    sum_report = classify(sum_lg)
    holds = sum_report.verdicts.get(target, False)

    mismatches = []
    if all(r.verdicts["tame"] for r in summand_reports):
        for pos, lab in sum_lg.labels.items():
            comp_labels = [summand_lgs[i].labels[pos[i]] for i in range(len(games))]
            predicted = tame_sum_label(comp_labels)
            if tuple(predicted) != tuple(lab):
                mismatches.append((pos, tuple(lab), tuple(predicted)))
    return ClosureReport(target, summand_reports, sum_report, holds, mismatches)
