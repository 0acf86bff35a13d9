import pytest

from datrinfer import Extensional, SearchConfig, infer, initial_hypothesis, parse_theory, print_theory, verify
from datrinfer.criteria import parse_complex
from datrinfer.search import ConfigError
from datrinfer.transform import abstract_node_count
from helpers import random_dataset


def test_config_defaults():
    config = SearchConfig()
    assert config.beam_width == 3
    assert [str(c) for c in config.search_criteria] == [
        "distinct-reference-count", "descriptor-complexity", "hierarchy-level-count"]
    assert [str(c) for c in config.selection_criteria] == [
        "node-path-rhs-count", "no-node-reference-ratio", "sentence-count-average-per-node"]


def test_config_round_trip():
    config = SearchConfig(beam_width=5, theta=3, rules=("L1", "A1"),
                          search_criteria=parse_complex("sentence-count-absolute"))
    assert SearchConfig.from_text(config.to_text()) == config


@pytest.mark.parametrize("text", ["beam_width = 0", "colour = red", "theta = x", "rules = L9"])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        SearchConfig.from_text(text)


def test_single_observation():
    data = [Extensional("X", ("a", "b"), ("v",))]
    result = infer(data)
    assert result.report.ok
    assert result.theory == parse_theory("X: <> == v.")


def test_verbs_corpus(verb_data):
    result = infer(verb_data)
    assert result.report.ok
    assert len(result.theory) < len(initial_hypothesis(verb_data))
    assert parse_theory(print_theory(result.theory)) == result.theory


def test_beam_discipline(verb_data):
    result = infer(verb_data, SearchConfig(beam_width=2, max_steps=6))
    kept = [line for line in result.trace if " keep " in line]
    per_step = {}
    for line in kept:
        per_step[line.split()[1]] = per_step.get(line.split()[1], 0) + 1
    assert per_step and max(per_step.values()) <= 2
    assert result.steps <= 6


def test_abstract_cap(verb_data):
    result = infer(verb_data, SearchConfig(abstract_cap=0))
    assert abstract_node_count(result.theory) == 0


def test_sound_on_random_data(rng):
    for _ in range(10):
        data = random_dataset(rng, max_nodes=4, max_len=3, size=8)
        result = infer(data, SearchConfig(max_steps=5))
        assert verify(result.theory, data).ok
