import pytest

from grundylab import (
    CandidateSets,
    MissingSet,
    UnknownPredicate,
    check_sm_equivalences,
    classify,
    enumerate_subgame,
    find_witness,
    load_fixture,
    sg_labels,
    verify_candidate_sets,
)
from grundylab.classify import PREDICATES
from grundylab.fixtures import fixture_roots
from grundylab.random_games import random_dag_stream
from grundylab.zoo import box_roots, euclid_swap_oracle, make_family, moore_swap_oracle


def labeled_fixture(name):
    game = load_fixture(name)
    return sg_labels(enumerate_subgame(game, fixture_roots(name)))


def labeled_family(family, params, roots, sym=True):
    game = make_family(family, params, use_symmetry=sym)
    return sg_labels(enumerate_subgame(game, roots))


def test_domestic_not_tame_witness():
    report = classify(labeled_fixture("domestic_not_tame"))
    assert report.verdicts["domestic"]
    assert not report.verdicts["tame"]
    pos, lab, _ = report.witnesses["tame"]
    assert tuple(lab) == (1, 2)


def test_tame_not_pet_verdicts():
    report = classify(labeled_fixture("tame_not_pet"))
    assert report.verdicts["tame"]
    assert not report.verdicts["pet"]
    assert report.verdicts["miserable"]
    assert not report.verdicts["strongly_miserable"]


def test_wythoff_returnable_not_forced():
    report = classify(labeled_family("wythoff", {}, [(20, 20)]))
    assert report.verdicts["miserable"]
    assert report.verdicts["returnable"]
    assert not report.verdicts["forced"]
    pos, lab, _ = report.witnesses["forced"]
    assert tuple(lab) in ((0, 1), (1, 0))


def test_mark_not_domestic_witness_8():
    report = classify(labeled_family("mark", {}, [(20,)], sym=False))
    assert not report.verdicts["domestic"]
    pos, lab, _ = report.witnesses["domestic"]
    assert pos == (8,)
    assert tuple(lab) == (0, 2)


def test_hierarchy_nesting_on_random_graphs():
    implications = [
        ("pet", "tame"), ("tame", "domestic"),
        ("strongly_miserable", "miserable"),
        ("miserable", "t_miserable"),
        ("t_miserable", "weakly_miserable"),
        ("miserable", "tame"),
        ("strongly_miserable", "returnable"),
        ("forced", "returnable"),
    ]
    equalities = [
        ("domestic", "weakly_miserable"),
        ("tame", "t_miserable"),
        ("pet", "strongly_miserable"),
    ]
    for graph in random_dag_stream(1, 200):
        verdicts = classify(sg_labels(graph)).verdicts
        for a, b in implications:
            assert not verdicts[a] or verdicts[b], (a, b)
        for a, b in equalities:
            assert verdicts[a] == verdicts[b], (a, b)


def test_sm_equivalences_agree_on_random_graphs():
    for graph in random_dag_stream(2, 200):
        report = check_sm_equivalences(sg_labels(graph))
        assert report.agree
        assert len(report.conditions) == 6


def test_sm_equivalences_on_pet_fixture():
    report = check_sm_equivalences(labeled_fixture("pet"))
    assert report.agree and report.value


def test_find_witness_not_returnable():
    lg = labeled_fixture("not_returnable")
    wit = find_witness(lg, "returnable")
    assert wit is not None
    pos, lab, reason = wit
    assert tuple(lab) in ((0, 1), (1, 0))
    assert "answered back" in reason


def test_find_witness_absent_on_pet():
    assert find_witness(labeled_fixture("pet"), "pet") is None


def test_find_witness_exact_nim():
    lg = labeled_family("exact_nim", {"n": 5, "k": 2}, [(3, 3, 3, 3, 3)])
    wit = find_witness(lg, "domestic")
    assert wit is not None
    pos, lab, _ = wit
    assert tuple(lab) in ((0, 2), (2, 0))
    # the named counterexample position carries that label too
    assert tuple(lg.labels[(1, 2, 3, 3, 3)]) == (0, 2)


def test_find_witness_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        find_witness(labeled_fixture("pet"), "bogus")


def test_every_false_verdict_has_witness():
    for name in ("not_domestic", "not_returnable", "tame_not_miserable"):
        report = classify(labeled_fixture(name))
        for pred in PREDICATES:
            assert report.verdicts[pred] == (pred not in report.witnesses)


def test_report_to_dict_shape():
    report = classify(labeled_fixture("not_domestic"))
    data = report.to_dict()
    assert set(data) == {"verdicts", "witnesses", "bound"}
    assert data["verdicts"]["domestic"] is False
    assert "domestic" in data["witnesses"]


# --- candidate sets ----------------------------------------------------------

def oracle_sets(graph, oracle):
    v01 = {x for x in graph.nodes if oracle(x) == (0, 1)}
    v10 = {x for x in graph.nodes if oracle(x) == (1, 0)}
    return CandidateSets(v01, v10)


def test_euclid_stay_positive_candidate_sets():
    game = make_family("euclid_grossman")
    graph = enumerate_subgame(
        game, [(x, y) for x in range(1, 13) for y in range(1, 13)])
    cand = oracle_sets(graph, lambda x: euclid_swap_oracle("grossman", x))
    report = verify_candidate_sets(graph, cand, "miserable")
    assert report.ok


def test_euclid_diagonal_double_sets_rejected():
    # diagonal + doubled-pair sets miss the higher Fibonacci pairs and fail
    # the covering condition, e.g. at (2,3) which is movable to (1,2) only
    game = make_family("euclid_grossman")
    graph = enumerate_subgame(
        game, [(x, y) for x in range(1, 13) for y in range(1, 13)])
    v01 = {(x, x) for x in range(1, 13)}
    v10 = ({(x, 2 * x) for x in range(1, 7)}
           | {(2 * x, x) for x in range(1, 7)})
    report = verify_candidate_sets(graph, CandidateSets(v01, v10), "miserable")
    assert not report.ok
    assert any(cond == "M(v)" for cond, _, _ in report.failures)


def test_euclid_original_candidate_sets():
    game = make_family("euclid_cd")
    graph = enumerate_subgame(game, box_roots(2, 12))
    cand = oracle_sets(graph, lambda x: euclid_swap_oracle("cd", x))
    assert verify_candidate_sets(graph, cand, "miserable").ok


def test_abc_chain_demonstrates_covering_necessity():
    graph = enumerate_subgame(load_fixture("abc_chain"), ["C"])
    cand = CandidateSets({"A"}, {"B"}, set(), set())
    partial = verify_candidate_sets(graph, cand, "tame", structural_only=True)
    assert partial.conditions_ok
    assert not partial.sets_match  # C belongs to the true V01
    full = verify_candidate_sets(graph, cand, "tame")
    assert not full.conditions_ok


def test_moore_candidate_sets():
    game = make_family("moore_nim", {"n": 4, "k": 2}, use_symmetry=True)
    graph = enumerate_subgame(game, [(2, 2, 2, 2)])
    cand = oracle_sets(graph, lambda x: moore_swap_oracle(4, 2, x))
    assert verify_candidate_sets(graph, cand, "miserable").ok


def test_missing_set_error():
    graph = enumerate_subgame(load_fixture("abc_chain"), ["C"])
    with pytest.raises(MissingSet):
        verify_candidate_sets(graph, CandidateSets({"A"}, {"B"}), "tame")


def test_unknown_target_error():
    graph = enumerate_subgame(load_fixture("abc_chain"), ["C"])
    with pytest.raises(UnknownPredicate):
        verify_candidate_sets(graph, CandidateSets(set(), set()), "weird")


def test_candidate_position_outside_graph():
    graph = enumerate_subgame(load_fixture("abc_chain"), ["C"])
    report = verify_candidate_sets(
        graph, CandidateSets({"A", "Z"}, {"B"}), "miserable")
    assert not report.conditions_ok
    assert any(cond == "membership" for cond, _, _ in report.failures)


def test_solver_sets_always_verify():
    # the solver's own V sets satisfy every theorem they instantiate
    for name in ("tame_not_pet", "tame_not_miserable"):
        game = load_fixture(name)
        graph = enumerate_subgame(game, fixture_roots(name))
        lg = sg_labels(graph)
        cand = CandidateSets(lg.vset(0, 1), lg.vset(1, 0),
                             lg.vset(0, 0), lg.vset(1, 1))
        assert verify_candidate_sets(graph, cand, "tame").ok
