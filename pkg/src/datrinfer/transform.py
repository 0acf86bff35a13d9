"""Rewrite rules that introduce inheritance descriptors.

Every rule has the shape ``s -> s' / c1, ..., cn``: it replaces the RHS of
one sentence ``s`` and leaves its node and path alone.  The guard common to
all of them is that the theory holds another sentence ``s_i`` whose RHS (or,
for the ``*s`` rules, part of whose RHS) the new descriptor points at.

=====  ===================  =================================================
name   group                result, given ``s_i`` with the same RHS ``v``
=====  ===================  =================================================
L1     local-descriptor     ``n'``        s_i = (n', p, v), v atomic
L2     local-descriptor     ``<p'>``      s_i = (n, p', v), v atomic
L3     local-descriptor     ``n':<p'>``   s_i = (n', p', v), v atomic
L2s    local-descriptor     ``<p'>`` replacing the part of v equal to s_i's RHS
G1-3   global-descriptor    quoted forms of L1-L3
G2s    global-descriptor    ``"<p'>"`` replacing part of v
R1-3   reference-to-global  local forms of L1-L3 where v holds a quoted descriptor
A1     abstract-creation    adds the (path, RHS) pairs shared by a set of nodes
                            at a fresh node ``ABS_k``
=====  ===================  =================================================
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence

from .evaluator import DEFAULT_DEPTH_LIMIT
from .model import (
    Ref,
    Sentence,
    Theory,
    has_global,
    has_local,
    is_atomic,
    rhs_key,
)
from .verifier import verify

ABSTRACT_PREFIX = "ABS_"
_ABSTRACT_RE = re.compile(r"ABS_(\d+)\Z")


@dataclass(frozen=True)
class Rewrite:
    """One application of a rule.

    ``old``/``new`` describe a replaced sentence (same node and path, new RHS);
    ``added`` lists sentences created at a fresh node, with ``members`` the
    nodes they were abstracted from.
    """

    rule: str
    old: Optional[Sentence] = None
    new: Optional[Sentence] = None
    added: tuple = ()
    members: tuple = ()

    @property
    def changed_keys(self) -> list:
        keys = [(s.node, s.path) for s in self.added]
        if self.new is not None:
            keys.append((self.new.node, self.new.path))
        return keys

    def sort_key(self) -> tuple:
        if self.new is not None:
            return (self.rule, self.new.node, self.new.path, rhs_key(self.new.rhs))
        return (self.rule, "", (), tuple(self.members))

    def apply_to(self, theory: Theory) -> Theory:
        """The rewritten theory, without any semantic check."""
        added = list(self.added)
        if self.new is not None:
            added.append(self.new)
        return theory.modify(added=added)

    def __str__(self) -> str:
        if self.new is not None:
            return f"{self.rule} {self.new}"
        node = self.added[0].node if self.added else "?"
        return f"{self.rule} {node} <- {' '.join(self.members)} ({len(self.added)} sentences)"


@dataclass(frozen=True)
class TransformationRule:
    name: str
    group: str
    matcher: Callable[[Theory, dict], Iterable[Rewrite]]


def _replace(rule: str, s: Sentence, rhs: tuple) -> Rewrite:
    return Rewrite(rule, old=s, new=Sentence(s.node, s.path, rhs))


def _whole_rhs(name: str, form: str, quoted: bool, reference_to_global: bool):
    """Matcher for the rules that replace a whole RHS by one descriptor."""

    def match(theory: Theory, options: dict) -> Iterable[Rewrite]:
        groups: dict = {}
        for s in theory:
            wanted = has_global(s.rhs) and not has_local(s.rhs) if reference_to_global \
                else is_atomic(s.rhs)
            if wanted:
                groups.setdefault(s.rhs, []).append(s)
        for rhs, group in groups.items():
            if len(group) < 2:
                continue
            for s in group:
                for other in group:
                    if other == s:
                        continue
                    if form == "node":
                        if other.path != s.path or other.node == s.node:
                            continue
                        ref = Ref(node=other.node, quoted=quoted)
                    elif form == "path":
                        if other.node != s.node:
                            continue
                        ref = Ref(path=other.path, quoted=quoted)
                    else:
                        ref = Ref(node=other.node, path=other.path, quoted=quoted)
                    yield _replace(name, s, (ref,))

    return match


def _part_rhs(name: str, quoted: bool):
    """Matcher for rules that replace a proper part of an RHS by a path descriptor."""

    def match(theory: Theory, options: dict) -> Iterable[Rewrite]:
        for node in theory.nodes:
            table = theory.node_table(node)
            by_value: dict = {}
            for path, rhs in table.items():
                if is_atomic(rhs):
                    by_value.setdefault(rhs, []).append(path)
            if not by_value:
                continue
            for path, rhs in table.items():
                if len(rhs) < 2:
                    continue
                for i in range(len(rhs)):
                    for j in range(i + 1, len(rhs) + 1):
                        if j - i == len(rhs):
                            continue
                        part = rhs[i:j]
                        if not isinstance(part[-1], str):
                            break
                        for target in by_value.get(part, ()):
                            if target == path:
                                continue
                            ref = Ref(path=target, quoted=quoted)
                            yield _replace(name, Sentence(node, path, rhs),
                                           rhs[:i] + (ref,) + rhs[j:])

    return match


def abstractable_pairs(theory: Theory, node: str) -> frozenset:
    """(path, RHS) pairs of a node that keep their value when moved to another node.

    Atoms and quoted descriptors do; local descriptors would be resolved
    relative to the new node, so sentences holding them are left out.
    """
    return frozenset((path, rhs) for path, rhs in theory.node_table(node).items()
                     if not has_local(rhs))


def abstract_node_count(theory: Theory) -> int:
    return sum(1 for node in theory.nodes if _ABSTRACT_RE.match(node))


def fresh_abstract_name(theory: Theory) -> str:
    used = [int(m.group(1)) for m in map(_ABSTRACT_RE.match, theory.nodes) if m]
    return f"{ABSTRACT_PREFIX}{max(used, default=0) + 1}"


def similarity_table(theory: Theory) -> dict:
    """Map each node pair to the set of abstractable (path, RHS) pairs they share."""
    pairs = {node: abstractable_pairs(theory, node) for node in theory.nodes}
    nodes = sorted(n for n in pairs if pairs[n])
    return {(a, b): pairs[a] & pairs[b] for a, b in combinations(nodes, 2)}


def abstraction_classes(theory: Theory, theta: int, pairs_filter=None) -> list:
    """Candidate classes ``(members, shared)`` for abstract-node creation.

    Each qualifying node pair (sharing at least ``theta`` pairs) seeds a
    class made of every node that has all of the pair's shared sentences.
    """
    pairs = {node: abstractable_pairs(theory, node) for node in theory.nodes}
    classes: dict = {}
    table = similarity_table(theory)
    for (a, b), shared in sorted(table.items()):
        if len(shared) < theta or (pairs_filter and not pairs_filter(a, b, shared)):
            continue
        members = tuple(sorted(n for n, own in pairs.items() if shared <= own))
        if members not in classes:
            common = frozenset.intersection(*(pairs[m] for m in members))
            classes[members] = common
    return sorted(classes.items())


def _abstraction(theory: Theory, options: dict) -> Iterable[Rewrite]:
    theta = options.get("theta", 2)
    cap = options.get("abstract_cap")
    if cap is not None and abstract_node_count(theory) >= cap:
        return
    name = fresh_abstract_name(theory)
    for members, shared in abstraction_classes(theory, theta):
        added = tuple(Sentence(name, path, rhs)
                      for path, rhs in sorted(shared, key=lambda pr: (pr[0], rhs_key(pr[1]))))
        yield Rewrite("A1", added=added, members=members)


RULES = {rule.name: rule for rule in [
    TransformationRule("L1", "local-descriptor", _whole_rhs("L1", "node", False, False)),
    TransformationRule("L2", "local-descriptor", _whole_rhs("L2", "path", False, False)),
    TransformationRule("L3", "local-descriptor", _whole_rhs("L3", "node-path", False, False)),
    TransformationRule("L2s", "local-descriptor", _part_rhs("L2s", False)),
    TransformationRule("G1", "global-descriptor", _whole_rhs("G1", "node", True, False)),
    TransformationRule("G2", "global-descriptor", _whole_rhs("G2", "path", True, False)),
    TransformationRule("G3", "global-descriptor", _whole_rhs("G3", "node-path", True, False)),
    TransformationRule("G2s", "global-descriptor", _part_rhs("G2s", True)),
    TransformationRule("R1", "reference-to-global", _whole_rhs("R1", "node", False, True)),
    TransformationRule("R2", "reference-to-global", _whole_rhs("R2", "path", False, True)),
    TransformationRule("R3", "reference-to-global", _whole_rhs("R3", "node-path", False, True)),
    TransformationRule("A1", "abstract-creation", _abstraction),
]}


def candidates(theory: Theory, rules: Sequence = tuple(RULES), theta: int = 2,
               abstract_cap: Optional[int] = None) -> List[Rewrite]:
    """All rewrites the given rules license on ``theory``, in a fixed order."""
    options = {"theta": theta, "abstract_cap": abstract_cap}
    found = set()
    for name in rules:
        rule = RULES[name] if isinstance(name, str) else name
        for rewrite in rule.matcher(theory, options):
            if rewrite.new is not None and rewrite.new.rhs == rewrite.old.rhs:
                continue
            found.add(rewrite)
    return sorted(found, key=Rewrite.sort_key)


def node_reference(sentence: Sentence, target: str) -> Rewrite:
    """Point ``sentence`` at node ``target`` (L1 for atomic RHSs, R1 otherwise)."""
    rule = "L1" if is_atomic(sentence.rhs) else "R1"
    return _replace(rule, sentence, (Ref(node=target),))


def apply(theory: Theory, rewrite: Rewrite, data,
          depth_limit: int = DEFAULT_DEPTH_LIMIT) -> Optional[Theory]:
    """Apply a rewrite, keeping it only if the theory still reproduces ``data``."""
    result = rewrite.apply_to(theory)
    return result if verify(result, data, depth_limit).ok else None
