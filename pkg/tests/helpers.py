"""Shared theories and random generators for the test suite."""

import random

from datrinfer import Extensional, Query, Ref, Sentence, Theory, dump

VERBS = """\
VERB: <mor past> == ("<mor root>" _ed)
      <mor pres tense> == "<mor root>"
      <mor pres tense sing three> == ("<mor root>" _s).
Love: <> == VERB
      <mor root> == love.
Come: <> == VERB
      <mor root> == come
      <mor past> == came
      <mor past participle> == <mor root>.
"""

# VERB with its present tense spelled out cell by cell
UNROLLED_VERB = """\
VERB: <mor past> == ("<mor root>" _ed)
      <mor pres tense sing one> == "<mor root>"
      <mor pres tense sing two> == "<mor root>"
      <mor pres tense sing three> == ("<mor root>" _s)
      <mor pres tense plur one> == "<mor root>"
      <mor pres tense plur two> == "<mor root>"
      <mor pres tense plur three> == "<mor root>".
Love: <> == VERB
      <mor root> == love.
Come: <> == VERB
      <mor root> == come
      <mor past> == came
      <mor past participle> == <mor root>.
"""

VERB_PATHS = [("mor", "root"), ("mor", "past"), ("mor", "past", "participle")] + [
    ("mor", "pres", "tense", number, person)
    for number in ("sing", "plur") for person in ("one", "two", "three")]

VERB_QUERIES = [Query(node, path) for node in ("Love", "Come") for path in VERB_PATHS]


# -- random theories ----------------------------------------------------------

NODES = "ABCDEFGHIJ"
LABELS = "pqr"
VALUES = "uvw"


def random_path(rng, max_len=3, labels=LABELS):
    return tuple(rng.choice(labels) for _ in range(rng.randint(0, max_len)))


def random_theory(rng, n_nodes=4, n_sentences=10, descriptor_rate=0.3, max_len=3):
    """Small theory over a tiny alphabet so that RHSs coincide often."""
    nodes = NODES[:n_nodes]
    sentences = {}
    for _ in range(n_sentences):
        node, path = rng.choice(nodes), random_path(rng, max_len)
        items = []
        for _ in range(rng.choice((1, 1, 1, 2))):
            if rng.random() < descriptor_rate:
                kind = rng.choice(("node", "path", "node-path"))
                items.append(Ref(
                    node=rng.choice(nodes) if kind != "path" else None,
                    path=random_path(rng, 2) if kind != "node" else None,
                    quoted=rng.random() < 0.4))
            else:
                items.append(rng.choice(VALUES))
        sentences[(node, path)] = tuple(items)
    return Theory(Sentence(n, p, r) for (n, p), r in sorted(sentences.items()))


def self_queries(theory, rng=None, extra=0):
    """The theory's own LHS queries, plus a few extended ones."""
    queries = [Query(s.node, s.path) for s in theory.sorted_sentences()]
    if rng is not None:
        for _ in range(extra):
            s = rng.choice(queries)
            queries.append(Query(s.node, s.path + (rng.choice(LABELS),)))
    return queries


def consistent_pair(rng, **kwargs):
    """A random theory and the observations it reproduces."""
    theory = random_theory(rng, **kwargs)
    data, _ = dump(theory, self_queries(theory, rng, extra=3), depth_limit=64)
    return theory, data


def random_dataset(rng, max_nodes=10, max_len=6, size=12):
    """Conflict-free observations."""
    seen = {}
    for _ in range(size):
        node = rng.choice(NODES[:rng.randint(1, max_nodes)])
        path = random_path(rng, max_len)
        seen.setdefault((node, path), tuple(rng.choice(VALUES) for _ in range(rng.randint(1, 3))))
    return [Extensional(n, p, v) for (n, p), v in seen.items()]


# -- acceptance reporting -----------------------------------------------------

ACCEPTANCE_LINES = []


def report(number, ok, detail):
    """Record one acceptance line; conftest prints them after the run."""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
