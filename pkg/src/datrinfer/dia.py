"""Default inference: turn a monotonic theory into a default theory.

Paths are shortened one element at a time, longest paths first, so that
each shortened sentence becomes a default for the paths it now prefixes.
A shortening whose target path is already defined either deletes the
sentence (same RHS) or is blocked (different RHS).  Every committed step is
checked against the observations, which also covers the path-extension
effects of path and node-path descriptors.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .evaluator import DEFAULT_DEPTH_LIMIT
from .model import Extensional, Theory
from .verifier import Checker, verify


class PreconditionError(ValueError):
    pass


def _try(checker: Checker, node, path, shorter) -> Optional[Checker]:
    """Shorten (or, if ``shorter`` is None, delete) one sentence if that is safe."""
    theory = checker.theory
    rhs = theory.get(node, path)
    if shorter is None:
        changed = [(node, path)]
        result = theory.remove(node, path)
    else:
        existing = theory.get(node, shorter)
        if existing is not None and existing != rhs:
            return None
        changed = [(node, path), (node, shorter)]
        if existing is None:
            result = theory.modify(removed=[(node, path)], added=[(node, shorter, rhs)])
        else:
            result = theory.remove(node, path)
    return checker.recheck(result, changed)


def _sweep(checker: Checker) -> Checker:
    for node in sorted(checker.theory.nodes):
        top = max((len(p) for p in checker.theory.node_table(node)), default=0)
        for length in range(top, 0, -1):
            level = sorted(p for p in checker.theory.node_table(node) if len(p) == length)
            for path in level:
                if checker.theory.get(node, path) is None:
                    continue
                checker = _try(checker, node, path, path[:-1]) or checker
    return checker


def _closure(checker: Checker) -> Checker:
    """Apply single deletions and shortenings until none is safe any more."""
    changed = True
    while changed:
        changed = False
        for s in checker.theory.sorted_sentences():
            if checker.theory.get(s.node, s.path) != s.rhs:
                continue
            step = _try(checker, s.node, s.path, None)
            if step is None and s.path and checker.theory.get(s.node, s.path[:-1]) is None:
                step = _try(checker, s.node, s.path, s.path[:-1])
            if step is not None:
                checker = step
                changed = True
    return checker


def reduce(theory: Theory, data: Sequence[Extensional],
           depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Theory:
    """Maximally reduce ``theory`` while it keeps reproducing ``data``."""
    checker = Checker(theory, data, depth_limit)
    if not checker.ok:
        raise PreconditionError("theory is not consistent and complete with respect to the data")
    checker = _sweep(checker)
    checker = _closure(checker)
    return checker.theory


def single_reductions(theory: Theory):
    """Every theory one deletion or one free one-element shortening away."""
    for s in theory.sorted_sentences():
        yield theory.remove(s.node, s.path)
        if s.path and theory.get(s.node, s.path[:-1]) is None:
            yield theory.modify(removed=[(s.node, s.path)],
                                added=[(s.node, s.path[:-1], s.rhs)])


def is_maximally_reduced(theory: Theory, data: Sequence[Extensional],
                         depth_limit: int = DEFAULT_DEPTH_LIMIT) -> bool:
    """True iff no single reduction keeps the theory consistent and complete.

    Brute force: every candidate is verified from scratch.
    """
    return not any(verify(candidate, data, depth_limit).ok
                   for candidate in single_reductions(theory))
