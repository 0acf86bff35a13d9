"""German noun inflection as a learning task.

Fifteen nouns from three inflection classes.  The observations are the dump
of a hand-written reference theory (``data/nouns.dtr``) over the eight
case/number cells plus the root and gender of each noun; the result is also
shipped as ``data/nouns.ext``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import List

from .evaluator import dump
from .model import Extensional, Query, Theory
from .syntax import parse_extensional, parse_theory, print_extensional


@dataclass(frozen=True)
class NounEntry:
    lemma: str
    gloss: str
    inflection: str  # weak, mixed or strong
    root: str
    gender: str


NOUNS = (
    NounEntry("Fels", "rock", "weak", "fels", "masc"),
    NounEntry("Friede", "peace", "weak", "friede", "masc"),
    NounEntry("Herr", "gentleman", "weak", "herr", "masc"),
    NounEntry("Affe", "monkey", "weak", "affe", "masc"),
    NounEntry("Staat", "state", "mixed", "staat", "masc"),
    NounEntry("Hemd", "shirt", "mixed", "hemd", "neut"),
    NounEntry("Farbe", "colour", "mixed", "farbe", "fem"),
    NounEntry("Acker", "field", "strong", "acker", "masc"),
    NounEntry("Kloster", "convent", "strong", "kloster", "neut"),
    NounEntry("Mutter", "mother", "strong", "mutter", "fem"),
    NounEntry("Onkel", "uncle", "strong", "onkel", "masc"),
    NounEntry("Ufer", "shore", "strong", "ufer", "neut"),
    NounEntry("Klub", "club", "strong", "klub", "masc"),
    NounEntry("Auto", "car", "strong", "auto", "neut"),
    NounEntry("Disco", "disco", "strong", "disco", "fem"),
)

CELLS = tuple((number, case) for number in ("sing", "plur")
              for case in ("nom", "gen", "dat", "acc"))
PATHS = (("root",), ("gender",)) + CELLS


def _read(name: str) -> str:
    return resources.files("datrinfer").joinpath("data", name).read_text(encoding="ascii")


def reference_theory() -> Theory:
    return parse_theory(_read("nouns.dtr"))


def corpus_queries() -> List[Query]:
    return [Query(noun.lemma, path) for noun in NOUNS for path in PATHS]


def build_corpus() -> List[Extensional]:
    """Dump the reference theory over every noun's root, gender and cells."""
    sentences, failures = dump(reference_theory(), corpus_queries())
    if failures:
        raise RuntimeError(f"reference theory fails on {failures[0][0]}")
    return sentences


def load_corpus() -> List[Extensional]:
    """The shipped ``nouns.ext`` file."""
    return parse_extensional(_read("nouns.ext"))


def corpus_text() -> str:
    header = ("% German noun inflection: dump of nouns.dtr over <root>, <gender> and\n"
              "% the eight {sing, plur} x {nom, gen, dat, acc} cells of each noun.\n"
              "% Morphemes: root atom, then _n (-en), _ns (-ens), _s (-s), _uml (umlaut);\n"
              "% a zero suffix is omitted.\n")
    return header + print_extensional(build_corpus())


if __name__ == "__main__":
    print(corpus_text(), end="")
