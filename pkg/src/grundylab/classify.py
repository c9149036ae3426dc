"""Class predicates (domestic/tame/pet, the miserability family, forced,
returnable), witness extraction, and candidate-set verification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MissingSet, ReachableGraph, UnknownPredicate
from .grundy import LabeledGraph, sg_labels, sort_key

PREDICATES = (
    "domestic",
    "tame",
    "pet",
    "miserable",
    "strongly_miserable",
    "t_miserable",
    "weakly_miserable",
    "forced",
    "returnable",
)


# --- per-position properties -------------------------------------------------

def prop_a(lg, x):
    return lg.labels[x].is_swap


def prop_a0(lg, x):
    return tuple(lg.labels[x]) in ((0, 1), (1, 0), (0, 0), (1, 1))


def prop_b(lg, x):
    swap = lg.vset(0, 1) | lg.vset(1, 0)
    return not lg.movable_to(x, swap)


def prop_c(lg, x):
    return lg.movable_to(x, lg.vset(0, 1)) and lg.movable_to(x, lg.vset(1, 0))


def prop_c0(lg, x):
    return lg.movable_to(x, lg.vset(0, 1)) and lg.movable_to(x, lg.vset(0, 0))


def prop_c1(lg, x):
    return lg.movable_to(x, lg.vset(1, 0)) and lg.movable_to(x, lg.vset(0, 0))


def prop_e(lg, x):
    return lg.movable_to(x, lg.vset(0, 0)) and lg.movable_to(x, lg.vset(1, 1))


# --- node-level violation tests ----------------------------------------------

def _violates_domestic(lg, x):
    g, gm = lg.labels[x]
    if (g == 0 and gm >= 2) or (gm == 0 and g >= 2):
        return f"({g},{gm})-position breaks domesticity"
    return None


def _violates_tame(lg, x):
    g, gm = lg.labels[x]
    if lg.labels[x].is_swap or g == gm:
        return None
    return f"({g},{gm})-position is neither swap nor equal-valued"


def _violates_pet(lg, x):
    g, gm = lg.labels[x]
    if lg.labels[x].is_swap or (g == gm and g >= 2):
        return None
    return f"({g},{gm})-position is neither swap nor (k,k) with k>=2"


def _violates_strongly_miserable(lg, x):
    if prop_a(lg, x) or prop_c(lg, x):
        return None
    return "neither swap nor movable to both a (0,1)- and a (1,0)-position"


def _violates_miserable(lg, x):
    if prop_a(lg, x) or prop_b(lg, x) or prop_c(lg, x):
        return None
    return "movable to exactly one kind of swap position while not swap itself"


def _violates_t_miserable(lg, x):
    if prop_a0(lg, x) or prop_c(lg, x) or prop_e(lg, x):
        return None
    return "fails all three t-miserability properties"


def _violates_weakly_miserable(lg, x):
    if (prop_a(lg, x) or prop_b(lg, x) or prop_c(lg, x)
            or prop_c0(lg, x) or prop_c1(lg, x)):
        return None
    return "fails all five weak-miserability properties"


def _violates_forced(lg, x):
    lab = tuple(lg.labels[x])
    if lab not in ((0, 1), (1, 0)):
        return None
    opposite = (1, 0) if lab == (0, 1) else (0, 1)
    for y in lg.graph.succ[x]:
        if tuple(lg.labels[y]) != opposite:
            return (f"move to {y!r} with label {tuple(lg.labels[y])} "
                    f"instead of {opposite}")
    return None


def _violates_returnable(lg, x):
    lab = tuple(lg.labels[x])
    if lab not in ((0, 1), (1, 0)):
        return None
    parallel = lg.vset(*lab)
    for y in lg.graph.succ[x]:
        if lg.graph.is_terminal(y):
            continue
        if not lg.movable_to(y, parallel):
            return f"move to {y!r} cannot be answered back to a {lab}-position"
    return None


_VIOLATION_TESTS = {
    "domestic": _violates_domestic,
    "tame": _violates_tame,
    "pet": _violates_pet,
    "miserable": _violates_miserable,
    "strongly_miserable": _violates_strongly_miserable,
    "t_miserable": _violates_t_miserable,
    "weakly_miserable": _violates_weakly_miserable,
    "forced": _violates_forced,
    "returnable": _violates_returnable,
}


@dataclass
class ClassReport:
    verdicts: dict
    witnesses: dict
    enumerated_bound: str

    def to_dict(self) -> dict:
        wit = {}
        for pred, (pos, lab, reason) in self.witnesses.items():
            wit[pred] = {"position": _json_pos(pos), "label": list(lab),
                         "reason": reason}
        return {"verdicts": dict(self.verdicts), "witnesses": wit,
                "bound": self.enumerated_bound}


def _json_pos(pos):
    return list(pos) if isinstance(pos, tuple) else str(pos)


def find_witness(lg: LabeledGraph, predicate: str):
    """Minimal-depth node violating the predicate, or None if it holds.

    Ties break to the lexicographically smallest position string.
    """
    try:
        test = _VIOLATION_TESTS[predicate]
    except KeyError:
        raise UnknownPredicate(f"unknown predicate {predicate!r}") from None
    best = None
    for x in lg.graph.nodes:
        reason = test(lg, x)
        if reason is None:
            continue
        key = sort_key(lg, x)
        if best is None or key < best[0]:
            best = (key, x, reason)
    if best is None:
        return None
    _, x, reason = best
    return (x, lg.labels[x], reason)


def classify(lg: LabeledGraph) -> ClassReport:
    """Evaluate every predicate literally from its definition over all
    enumerated nodes; every negative verdict carries a witness."""
    verdicts = {}
    witnesses = {}
    for pred in PREDICATES:
        wit = find_witness(lg, pred)
        verdicts[pred] = wit is None
        if wit is not None:
            witnesses[pred] = wit
    return ClassReport(verdicts, witnesses, lg.graph.describe_bound())


# --- SM=P equivalences -------------------------------------------------------

@dataclass
class EquivalenceReport:
    conditions: dict
    witnesses: dict

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1

    @property
    def value(self) -> bool:
        return all(self.conditions.values())


def check_sm_equivalences(lg: LabeledGraph) -> EquivalenceReport:
    """The six equivalent formulations of being pet, each evaluated from
    scratch; a theorem guarantees they always agree."""
    conditions = {}
    witnesses = {}

    def record(name, witness, reason=""):
        conditions[name] = witness is None
        if witness is not None:
            witnesses[name] = (witness, lg.labels[witness], reason)

    record("i_strongly_miserable",
           _first(lg, _violates_strongly_miserable))
    record("ii_pet", _first(lg, _violates_pet))
    record("iii_no_00", _first_in_set(lg, lg.vset(0, 0)), "(0,0)-position")
    record("iv_no_00_no_11",
           _first_in_set(lg, lg.vset(0, 0) | lg.vset(1, 1)),
           "(0,0)- or (1,1)-position")

    def bad_v(x):
        lab = lg.labels[x]
        if lab.g != 0 or lg.graph.is_terminal(x):
            return None
        if any(lg.labels[y].g == 1 for y in lg.graph.succ[x]):
            return None
        return "non-terminal 0-position with no option of value 1"

    def bad_vi(x):
        if lg.labels[x].g_minus != 0:
            return None
        if any(lg.labels[y].g_minus == 1 for y in lg.graph.succ[x]):
            return None
        return "misere 0-position with no option of misere value 1"

    record("v_ferguson_normal", _first_reason(lg, bad_v))
    record("vi_ferguson_misere", _first_reason(lg, bad_vi))
    return EquivalenceReport(conditions, witnesses)


def _first(lg, test):
    for x in sorted(lg.graph.nodes, key=lambda n: sort_key(lg, n)):
        if test(lg, x) is not None:
            return x
    return None


def _first_reason(lg, test):
    for x in sorted(lg.graph.nodes, key=lambda n: sort_key(lg, n)):
        if test(x) is not None:
            return x
    return None


def _first_in_set(lg, nodes):
    if not nodes:
        return None
    return min(nodes, key=lambda n: sort_key(lg, n))


# --- candidate-set verification ----------------------------------------------

@dataclass
class CandidateSets:
    v01: set
    v10: set
    v00: set | None = None
    v11: set | None = None

    def present(self):
        out = {"v01": self.v01, "v10": self.v10}
        if self.v00 is not None:
            out["v00"] = self.v00
        if self.v11 is not None:
            out["v11"] = self.v11
        return out


@dataclass
class VerifyReport:
    target: str
    failures: list = field(default_factory=list)
    set_mismatches: list = field(default_factory=list)

    @property
    def conditions_ok(self) -> bool:
        return not self.failures

    @property
    def sets_match(self) -> bool:
        return not self.set_mismatches

    @property
    def ok(self) -> bool:
        return self.conditions_ok and self.sets_match


_REQUIRED = {
    "pet": ("v01", "v10"),
    "miserable": ("v01", "v10"),
    "tame": ("v01", "v10", "v00", "v11"),
    "domestic": ("v01", "v10", "v00"),
}


def verify_candidate_sets(graph: ReachableGraph, cand: CandidateSets,
                          target: str, *, structural_only: bool = False) -> VerifyReport:
    """Check the constructive characterization of ``target`` against the
    candidate sets over the enumerated graph.

    ``structural_only`` skips the final covering condition (the one whose
    necessity the three-node chain counterexample demonstrates).  On a full
    pass the candidate sets are also compared against the solver's V sets.
    """
    if target not in _REQUIRED:
        raise UnknownPredicate(f"no candidate-set theorem for target {target!r}")
    sets = cand.present()
    for name in _REQUIRED[target]:
        if name not in sets:
            raise MissingSet(f"target {target!r} requires set {name}")

    report = VerifyReport(target)
    fail = report.failures.append
    succ = graph.succ
    v01, v10 = cand.v01, cand.v10
    v00 = cand.v00 if cand.v00 is not None else set()
    v11 = cand.v11 if cand.v11 is not None else set()
    terminals = set(graph.terminals())

    def movable(x, target_set):
        return any(y in target_set for y in succ[x])

    named = [("v01", v01), ("v10", v10)]
    if target in ("tame", "domestic"):
        named.append(("v00", v00))
    if target == "tame":
        named.append(("v11", v11))

    # pairwise disjoint
    for i, (na, sa) in enumerate(named):
        for nb, sb in named[i + 1:]:
            overlap = sa & sb
            if overlap:
                fail(("disjoint", next(iter(overlap)), f"{na} and {nb} overlap"))

    # (i) independence
    for name, s in named:
        for x in s:
            if x in succ and movable(x, s):
                fail(("i", x, f"move inside {name}"))

    # (ii) terminals
    missing_t = terminals - v01
    for x in sorted(missing_t, key=repr):
        fail(("ii", x, "terminal not in v01"))

    unknown = [x for _, s in named for x in s if x not in succ]
    for x in unknown:
        fail(("membership", x, "candidate position not in graph"))
    if unknown:
        return report

    if target in ("pet", "miserable"):
        for x in v01 - terminals:
            if not movable(x, v10):
                fail(("iii", x, "v01 position not movable to v10"))
        for x in v10:
            if not movable(x, v01):
                fail(("iv", x, "v10 position not movable to v01"))
        if not structural_only:
            for x in succ:
                a = x in v01 or x in v10
                c = movable(x, v01) and movable(x, v10)
                if target == "pet":
                    if a == c:
                        fail(("SM(v)", x,
                              "exactly one of membership / double-movability must hold"))
                else:
                    b = not movable(x, v01 | v10)
                    if not (a or b or c):
                        fail(("M(v)", x, "none of (a'),(b'),(c') hold"))

    elif target == "tame":
        for x in v01 - terminals:
            if not movable(x, v10):
                fail(("iii", x, "v01 position not movable to v10"))
        for x in v01:
            if movable(x, v00 | v11):
                fail(("iii", x, "v01 position movable to v00 or v11"))
        for x in v10:
            if not movable(x, v01):
                fail(("iv", x, "v10 position not movable to v01"))
            if movable(x, v00 | v11):
                fail(("iv", x, "v10 position movable to v00 or v11"))
        for x in v00:
            if movable(x, v01 | v10):
                fail(("v", x, "v00 position movable to a swap set"))
        for x in v11:
            if not movable(x, v00):
                fail(("vi", x, "v11 position not movable to v00"))
            if movable(x, v01 | v10):
                fail(("vi", x, "v11 position movable to a swap set"))
        rest = [x for x in succ if x not in v01 and x not in v10 and x not in v00]
        for x in rest:
            if not movable(x, v01 | v10 | v00):
                fail(("vii", x, "not movable to v01, v10, or v00"))
        if not structural_only:
            for x in succ:
                a0 = x in v01 or x in v10 or x in v00 or x in v11
                c = movable(x, v01) and movable(x, v10)
                e = movable(x, v00) and movable(x, v11)
                if not (a0 or c or e):
                    fail(("T(viii)", x, "none of (a0'),(c'),(e') hold"))

    elif target == "domestic":
        for x in v01 - terminals:
            if not movable(x, v10):
                fail(("iii", x, "v01 position not movable to v10"))
            if movable(x, v00):
                fail(("iii", x, "v01 position movable to v00"))
        for x in v10:
            if not movable(x, v01):
                fail(("iv", x, "v10 position not movable to v01"))
            if movable(x, v00):
                fail(("iv", x, "v10 position movable to v00"))
        for x in v00:
            if movable(x, v01 | v10):
                fail(("v", x, "v00 position movable to a swap set"))
        rest = [x for x in succ if x not in v01 and x not in v10 and x not in v00]
        for x in rest:
            if not movable(x, v01 | v10 | v00):
                fail(("vi", x, "not movable to v01, v10, or v00"))
        if not structural_only:
            for x in succ:
                a = x in v01 or x in v10
                b = not movable(x, v01 | v10)
                c = movable(x, v01) and movable(x, v10)
                c0 = movable(x, v01) and movable(x, v00)
                c1 = movable(x, v10) and movable(x, v00)
                if not (a or b or c or c0 or c1):
                    fail(("D(vii)", x, "none of the five properties hold"))

    # "Moreover" clause: on a clean structural pass, candidates must equal
    # the solver's own sets.
    if report.conditions_ok:
        lg = sg_labels(graph)
        truth = {"v01": lg.vset(0, 1), "v10": lg.vset(1, 0),
                 "v00": lg.vset(0, 0), "v11": lg.vset(1, 1)}
        for name, s in named:
            if s != truth[name]:
                extra = s - truth[name]
                missing = truth[name] - s
                report.set_mismatches.append((name, extra, missing))
    return report
