"""Consistency and completeness of a theory with respect to observations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

from .evaluator import DEFAULT_DEPTH_LIMIT, EvaluationError, evaluate
from .model import Extensional, Query, Sentence, Theory, format_rhs


class ConflictingObservations(ValueError):
    pass


@dataclass
class VerificationReport:
    """Outcome of checking a theory against observations.

    ``violations`` holds ``(observation, actual_value)`` pairs for queries that
    evaluate to the wrong value; ``missing`` holds ``(query, error)`` pairs for
    queries that do not evaluate at all.
    """

    violations: list = field(default_factory=list)
    missing: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def complete(self) -> bool:
        return not self.missing

    @property
    def ok(self) -> bool:
        return self.consistent and self.complete

    def lines(self) -> List[str]:
        yes = {True: "yes", False: "no"}
        out = [f"consistent: {yes[self.consistent]}, complete: {yes[self.complete]}"]
        for expected, actual in self.violations:
            out.append(f"violation: {expected.query} expected {format_rhs(expected.value)}"
                       f" got {format_rhs(actual)}")
        for query, err in self.missing:
            out.append(f"missing: {query} ({err.reason} at {err.at})")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def verify(theory: Theory, data: Iterable[Extensional],
           depth_limit: int = DEFAULT_DEPTH_LIMIT) -> VerificationReport:
    report = VerificationReport()
    for sentence in data:
        try:
            actual = evaluate(theory, sentence.query, depth_limit)
        except EvaluationError as err:
            report.missing.append((sentence.query, err))
            continue
        if actual != tuple(sentence.value):
            report.violations.append((sentence, actual))
    return report


def initial_hypothesis(data: Iterable[Extensional]) -> Theory:
    """The trivial theory with one atom-valued sentence per observation."""
    seen: dict = {}
    sentences = []
    for obs in data:
        key = (obs.node, tuple(obs.path))
        if key in seen:
            if seen[key] != tuple(obs.value):
                raise ConflictingObservations(
                    f"{Query(*key)} observed as both {format_rhs(seen[key])}"
                    f" and {format_rhs(obs.value)}")
            continue
        seen[key] = tuple(obs.value)
        sentences.append(Sentence(obs.node, tuple(obs.path), tuple(obs.value)))
    return Theory(sentences)


class Checker:
    """Remembers which lookups each observation's evaluation made.

    After a theory is changed at a few (node, path) keys, only observations
    whose evaluation looked up a path extending one of those keys can change
    value, so :meth:`recheck` re-evaluates just those.
    """

    def __init__(self, theory: Theory, data: Sequence[Extensional],
                 depth_limit: int = DEFAULT_DEPTH_LIMIT, _lookups=None):
        self.theory = theory
        self.data = list(data)
        self.depth_limit = depth_limit
        if _lookups is None:
            _lookups = []
            self.ok = True
            for obs in self.data:
                value, trace = self._run(theory, obs)
                _lookups.append(tuple(trace))
                if value != tuple(obs.value):
                    self.ok = False
        else:
            self.ok = True
        self.lookups = _lookups

    def _run(self, theory, obs):
        trace: list = []
        try:
            value = evaluate(theory, obs.query, self.depth_limit, trace)
        except EvaluationError:
            value = None
        return value, trace

    def affected(self, changed: Iterable) -> List[int]:
        by_node: dict = {}
        for node, path in changed:
            by_node.setdefault(node, []).append(tuple(path))
        hits = []
        for i, trace in enumerate(self.lookups):
            for node, path in trace:
                prefixes = by_node.get(node)
                if prefixes and any(path[:len(p)] == p for p in prefixes):
                    hits.append(i)
                    break
        return hits

    def recheck(self, theory: Theory, changed: Iterable) -> Optional["Checker"]:
        """Checker for ``theory`` if it still reproduces every observation, else None."""
        lookups = list(self.lookups)
        for i in self.affected(changed):
            obs = self.data[i]
            value, trace = self._run(theory, obs)
            if value != tuple(obs.value):
                return None
            lookups[i] = tuple(trace)
        return Checker(theory, self.data, self.depth_limit, _lookups=lookups)
