"""Scoring functions for theories, combined into priority-ordered complexes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Sequence

from .model import Ref, Theory


def _refs(theory: Theory):
    for s in theory:
        for item in s.rhs:
            if isinstance(item, Ref):
                yield s, item


def _ratio(count: int, theory: Theory) -> Fraction:
    return Fraction(count, len(theory)) if len(theory) else Fraction(0)


def _has_node_ref(rhs) -> bool:
    return any(isinstance(i, Ref) and i.node is not None for i in rhs)


def _has_path_ref(rhs) -> bool:
    return any(isinstance(i, Ref) and i.node is None for i in rhs)


def sentence_count(theory: Theory) -> int:
    return len(theory)


def average_node_size(theory: Theory) -> Fraction:
    nodes = len(theory.nodes)
    return Fraction(len(theory), nodes) if nodes else Fraction(0)


def distinct_rhs_count(theory: Theory) -> int:
    return len({s.rhs for s in theory})


def rhs_complexity(theory: Theory) -> int:
    """Total sequence length plus descriptor path length over all RHSs."""
    return sum(len(s.rhs) for s in theory) + sum(len(r.path or ()) for _, r in _refs(theory))


def node_reference_ratio(theory: Theory) -> Fraction:
    return _ratio(sum(_has_node_ref(s.rhs) for s in theory), theory)


def path_reference_ratio(theory: Theory) -> Fraction:
    return _ratio(sum(_has_path_ref(s.rhs) for s in theory), theory)


def node_path_rhs_count(theory: Theory) -> int:
    return sum(any(isinstance(i, Ref) and i.kind == "node-path" for i in s.rhs) for s in theory)


def no_node_reference_ratio(theory: Theory) -> Fraction:
    return _ratio(sum(not _has_node_ref(s.rhs) for s in theory), theory)


def inheritance_edges(theory: Theory, empty_path_only: bool = False) -> Dict[str, set]:
    """Node -> nodes it refers to through node or node-path descriptors.

    With ``empty_path_only`` only ``<> == Node`` links count.
    """
    edges: Dict[str, set] = {}
    for s, ref in _refs(theory):
        if empty_path_only and (s.path or ref.path is not None):
            continue
        if ref.node is not None and ref.node != s.node:
            edges.setdefault(s.node, set()).add(ref.node)
    return edges


def hierarchy_levels(theory: Theory) -> int:
    """Length of the longest chain of ``<> == Node`` links (cycles are cut)."""
    edges = inheritance_edges(theory, empty_path_only=True)
    memo: Dict[str, int] = {}
    active: set = set()

    def depth(node):
        if node in memo:
            return memo[node]
        if node in active:
            return 0
        active.add(node)
        best = max((1 + depth(t) for t in sorted(edges.get(node, ()))), default=0)
        active.discard(node)
        memo[node] = best
        return best

    return max((depth(n) for n in sorted(edges)), default=0)


def distinct_reference_count(theory: Theory) -> int:
    return len({ref for _, ref in _refs(theory)})


def descriptor_complexity(theory: Theory) -> Fraction:
    """Mean size of a descriptor occurrence: path length, plus one for a node."""
    sizes = [len(r.path or ()) + (r.node is not None) for _, r in _refs(theory)]
    return Fraction(sum(sizes), len(sizes)) if sizes else Fraction(0)


CRITERIA: Dict[str, Callable[[Theory], object]] = {
    "sentence-count-absolute": sentence_count,
    "sentence-count-average-per-node": average_node_size,
    "distinct-rhs-count": distinct_rhs_count,
    "rhs-complexity": rhs_complexity,
    "node-reference-ratio": node_reference_ratio,
    "path-reference-ratio": path_reference_ratio,
    "node-path-rhs-count": node_path_rhs_count,
    "no-node-reference-ratio": no_node_reference_ratio,
    "hierarchy-level-count": hierarchy_levels,
    "distinct-reference-count": distinct_reference_count,
    "descriptor-complexity": descriptor_complexity,
}


@dataclass(frozen=True)
class Criterion:
    kind: str
    maximize: bool = False

    def __post_init__(self):
        if self.kind not in CRITERIA:
            raise ValueError(f"unknown criterion {self.kind!r}")

    def __call__(self, theory: Theory):
        return CRITERIA[self.kind](theory)

    def __str__(self) -> str:
        return f"{self.kind}{'+' if self.maximize else ''}"

    @classmethod
    def parse(cls, text: str) -> "Criterion":
        """``name`` minimizes; ``name+`` or ``max:name`` maximizes."""
        text = text.strip()
        if text.startswith("max:"):
            return cls(text[4:], True)
        if text.endswith("+"):
            return cls(text[:-1], True)
        if text.startswith("min:"):
            text = text[4:]
        return cls(text.rstrip("-"))


def parse_complex(text: str) -> tuple:
    return tuple(Criterion.parse(part) for part in text.split(",") if part.strip())


def score(theory: Theory, complex_: Sequence[Criterion]) -> tuple:
    """Raw per-criterion values, in complex order."""
    return tuple(c(theory) for c in complex_)


def sort_key(theory: Theory, complex_: Sequence[Criterion]) -> tuple:
    """Key under which smaller means better for the whole complex."""
    return tuple(-v if c.maximize else v for c, v in zip(complex_, score(theory, complex_)))


SEARCH_CRITERIA = parse_complex(
    "distinct-reference-count, descriptor-complexity, hierarchy-level-count")
SELECTION_CRITERIA = parse_complex(
    "node-path-rhs-count, no-node-reference-ratio, sentence-count-average-per-node")


def format_score(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def hierarchy_lines(theory: Theory) -> list:
    """One line per node that inherits from other nodes: ``Node -> Parent ...``."""
    edges = inheritance_edges(theory)
    return [f"{node} -> {' '.join(sorted(edges[node]))}"
            for node in theory.nodes if node in edges]
