"""German noun inflection from 150 observations.

Fifteen nouns (weak, mixed and strong) with their root, gender and eight
case/number forms.  Forms are abstract morphemes: the root followed by
suffix atoms such as _n or _s.
"""

from datrinfer import infer, initial_hypothesis, print_theory
from datrinfer import criteria as crit
from datrinfer.nouns import NOUNS, load_corpus

corpus = load_corpus()
print(f"{len(corpus)} observations, e.g.")
for obs in corpus[:10]:
    print("   ", obs)

result = infer(corpus)
h0 = initial_hypothesis(corpus)
print(f"\n{len(result.theory)} sentences instead of {len(h0)}; {result.report.lines()[0]}\n")
print(print_theory(result.theory))

# Which abstract classes did each inflection class end up under?
edges = crit.inheritance_edges(result.theory)
for kind in ("weak", "mixed", "strong"):
    print(kind)
    for noun in NOUNS:
        if noun.inflection == kind:
            print(f"    {noun.lemma:8} -> {' '.join(sorted(edges.get(noun.lemma, ())))}")
