"""Deterministic query evaluation.

A query ``N:<p>`` is answered by the sentence of ``N`` with the longest path
that is a prefix of ``p``; the unmatched suffix (the *extension*) is appended
to every path that the sentence's descriptors pass on.  Quoted descriptors
are resolved against the global context, which starts out as the original
query and is replaced whenever a quoted descriptor is followed.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .model import Extensional, Query, Theory

DEFAULT_DEPTH_LIMIT = 512

NO_MATCH = "no-matching-sentence"
DEPTH_EXCEEDED = "depth-exceeded"


class EvaluationError(Exception):
    """Raised when a query has no value."""

    def __init__(self, reason: str, at: Query):
        self.reason = reason
        self.at = at
        super().__init__(f"{reason} at {at}")


def evaluate(theory: Theory, query: Query, depth_limit: int = DEFAULT_DEPTH_LIMIT,
             trace: Optional[list] = None) -> tuple:
    """Return the atom sequence that ``query`` evaluates to.

    Raises :class:`EvaluationError` if no sentence matches along the way, or
    if evaluation recurses deeper than ``depth_limit`` (cyclic inheritance).
    If ``trace`` is given, every ``(node, path)`` lookup is appended to it.
    """
    if depth_limit < 1:
        raise ValueError("depth_limit must be at least 1")
    query = Query(query[0], tuple(query[1]))
    out: List[str] = []
    try:
        _resolve(theory, query, query, 0, depth_limit, out, trace, set())
    except RecursionError:
        raise EvaluationError(DEPTH_EXCEEDED, query) from None
    return tuple(out)


def _resolve(theory, local, glob, depth, limit, out, trace, active):
    if depth >= limit:
        raise EvaluationError(DEPTH_EXCEEDED, local)
    state = (local, glob)
    if state in active:
        # the same state would recur forever
        raise EvaluationError(DEPTH_EXCEEDED, local)
    if trace is not None:
        trace.append(local)
    found = theory.longest_defined_prefix(local)
    if found is None:
        raise EvaluationError(NO_MATCH, local)
    sentence, rest = found
    active.add(state)
    for item in sentence.rhs:
        if isinstance(item, str):
            out.append(item)
            continue
        node = item.node
        if item.path is None:
            # node descriptors keep the whole current path
            path = local.path if not item.quoted else glob.path
        else:
            path = item.path + rest
        if item.quoted:
            if node is None:
                node = glob.node
            target = Query(node, path)
            _resolve(theory, target, target, depth + 1, limit, out, trace, active)
        else:
            target = Query(node if node is not None else local.node, path)
            _resolve(theory, target, glob, depth + 1, limit, out, trace, active)
    active.discard(state)


def try_evaluate(theory: Theory, query: Query, depth_limit: int = DEFAULT_DEPTH_LIMIT):
    """Like :func:`evaluate` but returns the error instead of raising it."""
    try:
        return evaluate(theory, query, depth_limit)
    except EvaluationError as err:
        return err


def dump(theory: Theory, queries: Iterable[Query],
         depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Tuple[list, list]:
    """Evaluate queries in order.

    Returns ``(sentences, failures)``: the extensional sentences for queries
    that have a value, and ``(query, error)`` pairs for those that do not.
    """
    sentences, failures = [], []
    for query in queries:
        query = Query(query[0], tuple(query[1]))
        try:
            value = evaluate(theory, query, depth_limit)
        except EvaluationError as err:
            failures.append((query, err))
        else:
            sentences.append(Extensional(query.node, query.path, value))
    return sentences, failures
