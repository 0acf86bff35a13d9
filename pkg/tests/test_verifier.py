import pytest

from datrinfer import Extensional, Sentence, Theory, initial_hypothesis, verify
from datrinfer.verifier import Checker, ConflictingObservations
from helpers import random_dataset


def test_verbs_consistent_and_complete(verbs):
    report = verify(verbs, [Extensional("Love", ("mor", "pres", "tense", "sing", "two"), ("love",))])
    assert report.ok
    assert report.lines() == ["consistent: yes, complete: yes"]


def test_deleted_exception_exposes_default(verbs):
    theory = verbs.remove("Come", ("mor", "past"))
    report = verify(theory, [Extensional("Come", ("mor", "past"), ("came",))])
    assert not report.consistent and report.complete
    assert report.violations[0][1] == ("come", "_ed")


def test_missing_is_incomplete(verbs):
    report = verify(verbs, [Extensional("Nonode", (), ("x",))])
    assert report.consistent and not report.complete


def test_initial_hypothesis_examples():
    assert initial_hypothesis([Extensional("Fels", ("plur", "nom"), ("fels", "_n"))]) == Theory(
        [Sentence("Fels", ("plur", "nom"), ("fels", "_n"))])
    assert len(initial_hypothesis([])) == 0
    with pytest.raises(ConflictingObservations):
        initial_hypothesis([Extensional("X", ("a",), ("b",)), Extensional("X", ("a",), ("c",))])


def test_duplicate_observation_is_fine():
    obs = Extensional("X", ("a",), ("b",))
    assert len(initial_hypothesis([obs, obs])) == 1


def test_initial_hypothesis_sound(rng):
    for _ in range(50):
        data = random_dataset(rng)
        assert verify(initial_hypothesis(data), data).ok


def test_checker_agrees_with_verify(verb_data, verbs, rng):
    checker = Checker(verbs, verb_data)
    assert checker.ok
    sentences = list(verbs)
    for _ in range(40):
        s = rng.choice(sentences)
        changed = verbs.remove(s.node, s.path)
        step = checker.recheck(changed, [(s.node, s.path)])
        assert (step is not None) == verify(changed, verb_data).ok
