"""Data types for DATR theories and the hypothesis space.

Atoms and node names are plain strings, told apart by their first
character: node names start with an uppercase letter, atoms never do.
Paths are tuples of atoms.  A right-hand side (RHS) is a non-empty tuple
whose items are either atoms or :class:`Ref` descriptors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Union

ATOM_RE = re.compile(r"[a-z0-9_][A-Za-z0-9_]*\Z")
NODE_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")

Path = tuple  # tuple[str, ...]


def is_atom(token: str) -> bool:
    return bool(ATOM_RE.match(token))


def is_node_name(token: str) -> bool:
    return bool(NODE_RE.match(token))


@dataclass(frozen=True)
class Ref:
    """An inheritance descriptor: a node, a path, or a node-path pair.

    ``quoted`` marks the global variants, written in double quotes.
    At least one of ``node`` and ``path`` is set.
    """

    node: Optional[str] = None
    path: Optional[Path] = None
    quoted: bool = False

    def __post_init__(self):
        if self.node is None and self.path is None:
            raise ValueError("descriptor needs a node or a path")
        if self.path is not None and not isinstance(self.path, tuple):
            object.__setattr__(self, "path", tuple(self.path))

    @property
    def kind(self) -> str:
        if self.path is None:
            return "node"
        if self.node is None:
            return "path"
        return "node-path"

    def __str__(self) -> str:
        if self.path is None:
            body = self.node
        elif self.node is None:
            body = format_path(self.path)
        else:
            body = f"{self.node}:{format_path(self.path)}"
        return f'"{body}"' if self.quoted else body


Descriptor = Union[str, Ref]
Rhs = tuple  # tuple[Descriptor, ...]


def LocalNode(node: str) -> Ref:
    return Ref(node=node)


def LocalPath(path: Iterable[str]) -> Ref:
    return Ref(path=tuple(path))


def LocalNodePath(node: str, path: Iterable[str]) -> Ref:
    return Ref(node=node, path=tuple(path))


def GlobalNode(node: str) -> Ref:
    return Ref(node=node, quoted=True)


def GlobalPath(path: Iterable[str]) -> Ref:
    return Ref(path=tuple(path), quoted=True)


def GlobalNodePath(node: str, path: Iterable[str]) -> Ref:
    return Ref(node=node, path=tuple(path), quoted=True)


def format_path(path: Path) -> str:
    return "<" + " ".join(path) + ">"


def format_rhs(rhs: Rhs) -> str:
    items = " ".join(str(item) for item in rhs)
    return items if len(rhs) == 1 else f"({items})"


def descriptor_key(item: Descriptor) -> tuple:
    """Total order over descriptors, for deterministic sorting."""
    if isinstance(item, str):
        return (0, item)
    return (1, item.quoted, item.node or "", item.path is not None, item.path or ())


def rhs_key(rhs: Rhs) -> tuple:
    return tuple(descriptor_key(item) for item in rhs)


def is_atomic(rhs: Rhs) -> bool:
    return all(isinstance(item, str) for item in rhs)


def has_global(rhs: Rhs) -> bool:
    return any(isinstance(item, Ref) and item.quoted for item in rhs)


def has_local(rhs: Rhs) -> bool:
    return any(isinstance(item, Ref) and not item.quoted for item in rhs)


class Sentence(NamedTuple):
    """A definitional sentence ``node: <path> == rhs``."""

    node: str
    path: Path
    rhs: Rhs

    def __str__(self) -> str:
        return f"{self.node}:{format_path(self.path)} == {format_rhs(self.rhs)}"


class Query(NamedTuple):
    node: str
    path: Path

    def __str__(self) -> str:
        return f"{self.node}:{format_path(self.path)}"


class Extensional(NamedTuple):
    """An observed query together with its atomic value."""

    node: str
    path: Path
    value: tuple

    @property
    def query(self) -> Query:
        return Query(self.node, self.path)

    def __str__(self) -> str:
        return f"{self.node}: {format_path(self.path)} = {format_rhs(self.value)}"


class Theory:
    """An immutable set of definitional sentences, unique per (node, path).

    Every modifying method returns a new theory.  Per-node tables are shared
    between versions and never mutated after construction.
    """

    __slots__ = ("_defs", "_order", "_size", "_hash", "_rhs_index")

    def __init__(self, sentences: Iterable[Sentence] = ()):
        defs: dict = {}
        order: list = []
        for node, path, rhs in sentences:
            table = defs.get(node)
            if table is None:
                table = defs[node] = {}
                order.append(node)
            table[tuple(path)] = tuple(rhs)
        self._set(defs, tuple(order))

    @classmethod
    def _make(cls, defs: dict, order: tuple) -> "Theory":
        theory = cls.__new__(cls)
        theory._set(defs, order)
        return theory

    def _set(self, defs, order):
        self._defs = defs
        self._order = order
        self._size = sum(len(table) for table in defs.values())
        self._hash = None
        self._rhs_index = None

    # -- access ----------------------------------------------------------

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[Sentence]:
        for node in self._order:
            for path, rhs in self._defs[node].items():
                yield Sentence(node, path, rhs)

    def __contains__(self, sentence) -> bool:
        node, path, rhs = sentence
        return self.get(node, path) == tuple(rhs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Theory):
            return NotImplemented
        return self._defs == other._defs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(
                (node, path, rhs) for node, table in self._defs.items()
                for path, rhs in table.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Theory({len(self)} sentences, nodes={list(self._order)})"

    @property
    def nodes(self) -> tuple:
        """Node names in first-insertion order."""
        return self._order

    def get(self, node: str, path: Path) -> Optional[Rhs]:
        table = self._defs.get(node)
        return None if table is None else table.get(tuple(path))

    def node_sentences(self, node: str) -> list:
        table = self._defs.get(node, {})
        return [Sentence(node, path, rhs) for path, rhs in table.items()]

    def node_table(self, node: str) -> dict:
        """Read-only path -> rhs mapping of one node."""
        return self._defs.get(node, {})

    def sorted_sentences(self) -> list:
        """Sentences ordered by node name, then descending path length, then path."""
        return sorted(self, key=lambda s: (s.node, -len(s.path), s.path))

    @property
    def atom_values(self) -> frozenset:
        return frozenset(item for s in self for item in s.rhs if isinstance(item, str))

    def sentences_with_rhs(self, rhs: Rhs) -> set:
        if self._rhs_index is None:
            index: dict = {}
            for sentence in self:
                index.setdefault(sentence.rhs, set()).add(sentence)
            self._rhs_index = index
        return set(self._rhs_index.get(tuple(rhs), ()))

    def longest_defined_prefix(self, query: Query):
        """Return ``(sentence, remainder)`` for the longest matching path, or None."""
        node, path = query
        table = self._defs.get(node)
        if not table:
            return None
        path = tuple(path)
        for cut in range(len(path), -1, -1):
            rhs = table.get(path[:cut])
            if rhs is not None:
                return Sentence(node, path[:cut], rhs), path[cut:]
        return None

    # -- modification ----------------------------------------------------

    def insert(self, sentence: Sentence) -> "Theory":
        return self.modify(added=[sentence])

    def remove(self, node: str, path: Path) -> "Theory":
        return self.modify(removed=[(node, path)])

    def modify(self, removed: Iterable = (), added: Iterable[Sentence] = ()) -> "Theory":
        """Drop the (node, path) keys in ``removed``, then insert ``added``.

        An added sentence replaces any existing one at the same (node, path).
        """
        defs = dict(self._defs)
        copied: set = set()
        order = list(self._order)

        def table_for(node):
            if node not in copied:
                defs[node] = dict(defs.get(node, {}))
                copied.add(node)
                if node not in self._defs:
                    order.append(node)
            return defs[node]

        for node, path in removed:
            if path is not None and tuple(path) in defs.get(node, {}):
                del table_for(node)[tuple(path)]
        for node, path, rhs in added:
            if not rhs:
                raise ValueError("right-hand side must be non-empty")
            table_for(node)[tuple(path)] = tuple(rhs)
        for node in copied:
            if not defs[node]:
                del defs[node]
        order = tuple(node for node in order if node in defs)
        return Theory._make(defs, order)


def theory_insert(theory: Theory, sentence: Sentence) -> Theory:
    return theory.insert(sentence)


def longest_defined_prefix(theory: Theory, query: Query):
    return theory.longest_defined_prefix(query)


def sentences_with_rhs(theory: Theory, rhs: Rhs) -> set:
    return theory.sentences_with_rhs(rhs)
