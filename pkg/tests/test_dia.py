import pytest

from datrinfer import Query, Sentence, Theory, dump, is_maximally_reduced, parse_theory, reduce, verify
from datrinfer.dia import PreconditionError, single_reductions
from helpers import UNROLLED_VERB, VERB_QUERIES, consistent_pair


def own_data(theory):
    data, failures = dump(theory, [Query(s.node, s.path) for s in theory])
    assert not failures
    return data


def test_blocked_shortening_keeps_both_values():
    theory = parse_theory("X: <a b> == v <a> == w.")
    data = own_data(theory)
    out = reduce(theory, data)
    # <a b> cannot move onto <a>; <a> itself is free to become the default
    assert out == parse_theory("X: <a b> == v <> == w.")
    assert is_maximally_reduced(out, data)


def test_duplicate_rhs_is_deleted():
    theory = parse_theory("X: <a b> == v <a> == v.")
    data = own_data(theory)
    assert reduce(theory, data) == parse_theory("X: <> == v.")


def test_unrolled_verb():
    theory = parse_theory(UNROLLED_VERB)
    data, _ = dump(theory, VERB_QUERIES)
    out = reduce(theory, data)
    assert verify(out, data).ok
    assert len(out.node_sentences("VERB")) == 3
    assert out.get("VERB", ("mor", "pres", "tense", "sing", "three")) is not None
    assert is_maximally_reduced(out, data)
    assert not is_maximally_reduced(theory, data)


def test_empty():
    assert reduce(Theory(), []) == Theory()
    assert is_maximally_reduced(Theory(), [])


def test_rejects_unsound_input():
    with pytest.raises(PreconditionError):
        reduce(parse_theory("X: <a> == v."), own_data(parse_theory("X: <a> == w.")))


def test_single_reductions_cover_both_kinds():
    theory = parse_theory("X: <a b> == v <a> == w.")
    got = set(single_reductions(theory))
    assert theory.remove("X", ("a", "b")) in got
    assert theory.modify(removed=[("X", ("a",))], added=[Sentence("X", (), ("w",))]) in got
    # <a b> -> <a> is taken, so it is not a free shortening
    assert len(got) == 3


def test_random_reductions(rng):
    for _ in range(40):
        theory, data = consistent_pair(rng)
        out = reduce(theory, data, 64)
        assert verify(out, data, 64).ok
        assert len(out) <= len(theory)
        assert reduce(out, data, 64) == out
        assert is_maximally_reduced(out, data, 64)
