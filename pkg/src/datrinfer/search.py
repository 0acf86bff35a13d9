"""Beam search over rewrite sequences, each finished off by default inference.

The search keeps only monotonic theories on its frontier.  Every frontier
theory is reduced once to obtain a candidate default theory; the best
candidate under the selection criteria is the result.

Successors are generated in *moves* rather than single rewrites: a move
applies every rewrite that introduces the same descriptor (for instance all
``"<root>"`` references at once), or creates one abstract node and points
its members at it.  Rewrites inside a move that would break an observation
are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import criteria as crit
from .dia import _closure, _sweep
from .evaluator import DEFAULT_DEPTH_LIMIT
from .model import Extensional, Ref, Sentence, Theory, descriptor_key, rhs_key
from .transform import (
    RULES,
    Rewrite,
    abstract_node_count,
    abstraction_classes,
    candidates,
    fresh_abstract_name,
    node_reference,
    similarity_table,
)
from .verifier import Checker, VerificationReport, initial_hypothesis, verify

DEFAULT_RULES = ("L2", "G2", "G2s", "A1")

CONFIG_KEYS = ("beam_width", "theta", "abstract_cap", "depth_limit", "search_criteria",
               "selection_criteria", "max_steps", "rules")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    beam_width: int = 3
    search_criteria: tuple = crit.SEARCH_CRITERIA
    selection_criteria: tuple = crit.SELECTION_CRITERIA
    theta: int = 2
    abstract_cap: Optional[int] = None  # None: number of input nodes
    depth_limit: int = DEFAULT_DEPTH_LIMIT
    max_steps: int = 500
    rules: tuple = DEFAULT_RULES

    def __post_init__(self):
        if self.beam_width < 1:
            raise ConfigError("beam_width must be at least 1")
        if self.theta < 1:
            raise ConfigError("theta must be at least 1")
        if self.depth_limit < 1:
            raise ConfigError("depth_limit must be at least 1")
        unknown = [r for r in self.rules if r not in RULES]
        if unknown:
            raise ConfigError(f"unknown rules: {', '.join(unknown)}")

    @classmethod
    def from_text(cls, text: str) -> "SearchConfig":
        """Read flat ``key = value`` lines; ``#`` and ``%`` start comments."""
        values: dict = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split("%", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"line {lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in CONFIG_KEYS:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            try:
                if key.endswith("criteria"):
                    values[key] = crit.parse_complex(value)
                elif key == "rules":
                    values[key] = tuple(r.strip() for r in value.split(",") if r.strip())
                elif key == "abstract_cap" and value.lower() == "none":
                    values[key] = None
                else:
                    values[key] = int(value)
            except ValueError as err:
                raise ConfigError(f"line {lineno}: {err}") from None
        return cls(**values)

    def to_text(self) -> str:
        cap = "none" if self.abstract_cap is None else self.abstract_cap
        return "\n".join([
            f"beam_width = {self.beam_width}",
            f"theta = {self.theta}",
            f"abstract_cap = {cap}",
            f"depth_limit = {self.depth_limit}",
            f"max_steps = {self.max_steps}",
            f"rules = {', '.join(self.rules)}",
            f"search_criteria = {', '.join(map(str, self.search_criteria))}",
            f"selection_criteria = {', '.join(map(str, self.selection_criteria))}",
        ]) + "\n"


@dataclass(frozen=True)
class Move:
    key: tuple
    rewrites: tuple = ()
    abstraction: Optional[Rewrite] = None

    def __str__(self) -> str:
        if self.abstraction is not None:
            return str(self.abstraction)
        return f"{self.key[0]} {_introduced(self.rewrites[0])}"


def _introduced(rewrite: Rewrite) -> Ref:
    old, new = rewrite.old.rhs, rewrite.new.rhs
    for k, item in enumerate(new):
        if k >= len(old) or item != old[k]:
            return item
    return new[-1]


def generate_moves(theory: Theory, config: SearchConfig, cap: int) -> List[Move]:
    groups: dict = {}
    plain = [r for r in config.rules if r != "A1"]
    for rewrite in candidates(theory, plain):
        ref = _introduced(rewrite)
        groups.setdefault((rewrite.rule, descriptor_key(ref)), []).append(rewrite)
    moves = [Move(key, tuple(rws)) for key, rws in sorted(groups.items())]
    if "A1" in config.rules and abstract_node_count(theory) < cap:
        moves.extend(_abstraction_moves(theory, config.theta))
    return moves


def _abstraction_moves(theory: Theory, theta: int) -> List[Move]:
    # only the most similar nodes seed new classes
    table = similarity_table(theory)
    best = max((len(shared) for shared in table.values()), default=0)
    if best < theta:
        return []
    name = fresh_abstract_name(theory)
    moves = []
    for members, shared in abstraction_classes(
            theory, theta, lambda a, b, s: len(s) == best):
        added = tuple(sorted(((name, p, r) for p, r in shared),
                             key=lambda s: (s[1], rhs_key(s[2]))))
        rewrite = Rewrite("A1", added=tuple(Sentence(*s) for s in added), members=members)
        moves.append(Move(("A1", members), abstraction=rewrite))
    return moves


@dataclass
class Step:
    checker: Checker
    applied: list
    move: Optional[Move] = None
    parent: int = -1


def apply_move(checker: Checker, move: Move) -> Optional[Step]:
    applied = []
    if move.abstraction is not None:
        abstraction = move.abstraction
        name = abstraction.added[0].node
        checker = checker.recheck(abstraction.apply_to(checker.theory), abstraction.changed_keys)
        if checker is None:
            return None
        applied.append(abstraction)
        shared = {(s.path, s.rhs) for s in abstraction.added}
        linked = set()
        for member in abstraction.members:
            for path, rhs in sorted(checker.theory.node_table(member).items(),
                                    key=lambda kv: (kv[0], rhs_key(kv[1]))):
                if (path, rhs) not in shared:
                    continue
                rewrite = node_reference(Sentence(member, path, rhs), name)
                step = checker.recheck(rewrite.apply_to(checker.theory), rewrite.changed_keys)
                if step is not None:
                    checker = step
                    applied.append(rewrite)
                    linked.add(member)
        if len(linked) < 2:
            return None
        return Step(checker, applied, move)
    for rewrite in move.rewrites:
        old = rewrite.old
        if checker.theory.get(old.node, old.path) != old.rhs:
            continue
        step = checker.recheck(rewrite.apply_to(checker.theory), rewrite.changed_keys)
        if step is not None:
            checker = step
            applied.append(rewrite)
    if not applied:
        return None
    return Step(checker, applied, move)


@dataclass
class InferenceResult:
    theory: Theory
    report: VerificationReport
    trace: List[str] = field(default_factory=list)
    initial_size: int = 0
    best_step: int = 0
    steps: int = 0

    @property
    def trace_text(self) -> str:
        return "\n".join(self.trace) + "\n"


def infer(data: Sequence[Extensional], config: SearchConfig = SearchConfig()) -> InferenceResult:
    """Induce a default theory that reproduces ``data``."""
    data = list(data)
    h0 = initial_hypothesis(data)
    cap = config.abstract_cap if config.abstract_cap is not None else len(h0.nodes)
    root = Checker(h0, data, config.depth_limit)
    trace = [f"# {len(data)} observations, {len(h0.nodes)} nodes, {len(h0)} initial sentences",
             *("# " + line for line in config.to_text().splitlines())]
    frontier = [Step(root, [])]
    seen = {h0}
    reduced_seen: set = set()
    best_key, best, best_step = None, None, 0
    step_no = 0
    while True:
        for rank, node in enumerate(frontier, 1):
            default = _closure(_sweep(node.checker)).theory
            if default in reduced_seen:
                continue
            reduced_seen.add(default)
            key = crit.sort_key(default, config.selection_criteria)
            values = crit.score(default, config.selection_criteria)
            trace.append(f"step {step_no} candidate {rank}: {len(default)} sentences,"
                         f" selection {crit.format_score(values)}")
            if best_key is None or key < best_key:
                best_key, best, best_step = key, default, step_no
                trace.append(f"step {step_no} candidate {rank}: new best")
        if step_no >= config.max_steps:
            trace.append(f"stopped after max_steps = {config.max_steps}")
            break
        successors = []
        for index, node in enumerate(frontier):
            for move in generate_moves(node.checker.theory, config, cap):
                result = apply_move(node.checker, move)
                if result is None or result.checker.theory in seen:
                    continue
                seen.add(result.checker.theory)
                result.parent = index
                key = crit.sort_key(result.checker.theory, config.search_criteria)
                successors.append((key, index, move.key, result))
        if not successors:
            trace.append(f"step {step_no}: no rule applies")
            break
        successors.sort(key=lambda item: item[:3])
        step_no += 1
        frontier = []
        for rank, (key, index, _, result) in enumerate(successors[:config.beam_width], 1):
            values = crit.score(result.checker.theory, config.search_criteria)
            trace.append(f"step {step_no} keep {rank}/{len(successors)} from {index + 1}:"
                         f" {result.move} [{len(result.applied)} rewrites,"
                         f" search {crit.format_score(values)}]")
            trace.extend(f"  {rewrite}" for rewrite in result.applied)
            frontier.append(result)
    report = verify(best, data, config.depth_limit)
    trace.append(f"result: best candidate from step {best_step}, {len(best)} sentences"
                 f" (initial {len(h0)}), consistent={report.consistent},"
                 f" complete={report.complete}")
    trace.extend("hierarchy: " + line for line in crit.hierarchy_lines(best))
    return InferenceResult(best, report, trace, len(h0), best_step, step_no)
