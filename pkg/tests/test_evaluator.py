import pytest

from datrinfer import EvaluationError, Extensional, Query, dump, evaluate, parse_theory
from datrinfer.evaluator import DEPTH_EXCEEDED, NO_MATCH, try_evaluate
from helpers import consistent_pair, self_queries


@pytest.mark.parametrize("query, value", [
    (("Love", ("mor", "pres", "tense", "sing", "two")), ("love",)),
    (("Come", ("mor", "past")), ("came",)),
    (("Love", ("mor", "past")), ("love", "_ed")),
    (("Come", ("mor", "past", "participle")), ("come",)),
    (("Come", ("mor", "pres", "tense", "sing", "three")), ("come", "_s")),
    (("Love", ("mor", "past", "participle")), ("love", "_ed")),
])
def test_verbs_values(verbs, query, value):
    assert evaluate(verbs, Query(*query)) == value


def test_cycle_is_depth_exceeded():
    theory = parse_theory("X: <> == X.")
    with pytest.raises(EvaluationError) as info:
        evaluate(theory, Query("X", ("a",)), depth_limit=64)
    assert info.value.reason == DEPTH_EXCEEDED


def test_deep_chain_hits_limit():
    theory = parse_theory("".join(f"N{i}: <> == N{i + 1}.\n" for i in range(100)) + "N100: <> == v.")
    assert evaluate(theory, Query("N0", ())) == ("v",)
    assert try_evaluate(theory, Query("N0", ()), depth_limit=50).reason == DEPTH_EXCEEDED


def test_missing_node_and_path(verbs):
    with pytest.raises(EvaluationError) as info:
        evaluate(verbs, Query("Nonode", ("x",)))
    assert info.value.reason == NO_MATCH
    with pytest.raises(EvaluationError):
        evaluate(verbs, Query("VERB", ("syn",)))


def test_global_context_switch():
    # quoted node re-enters with the global path, so B sees the query path
    theory = parse_theory('A: <> == "B". B: <x> == bx. B: <> == b.')
    assert evaluate(theory, Query("A", ("x",))) == ("bx",)


def test_path_extension():
    theory = parse_theory("X: <a> == <b>. X: <b c> == v. X: <b> == w.")
    assert evaluate(theory, Query("X", ("a", "c"))) == ("v",)
    assert evaluate(theory, Query("X", ("a",))) == ("w",)


def test_dump_verbs(verbs):
    out, failures = dump(verbs, [Query("Love", ("mor", "past")), Query("Come", ("mor", "past"))])
    assert out == [Extensional("Love", ("mor", "past"), ("love", "_ed")),
                   Extensional("Come", ("mor", "past"), ("came",))]
    assert failures == []


def test_dump_empty(verbs):
    assert dump(verbs, []) == ([], [])


def test_dump_reports_failures(verbs):
    out, failures = dump(verbs, [Query("Nonode", ())])
    assert out == [] and failures[0][0] == Query("Nonode", ())


def test_deterministic_and_coherent(rng):
    for _ in range(100):
        theory, _ = consistent_pair(rng)
        for query in self_queries(theory, rng, extra=3):
            first, second = try_evaluate(theory, query, 64), try_evaluate(theory, query, 64)
            if isinstance(first, EvaluationError):
                assert (first.reason, first.at) == (second.reason, second.at)
            else:
                assert first == second
                assert all(isinstance(atom, str) for atom in first)
