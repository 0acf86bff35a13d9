"""Querying a small DATR theory.

A verb lexicon with one abstract node (VERB) and two verbs that inherit
from it.  Defaults come from the longest matching path prefix; the unmatched
rest of the query path is carried along ("path extension").
"""

from datrinfer import Query, dump, evaluate, parse_query, parse_theory, print_extensional

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

theory = parse_theory(VERBS)
print(f"{len(theory)} sentences in nodes {', '.join(theory.nodes)}")

# Love has no <mor pres ...> sentence, so <> == VERB applies and the whole
# path goes on to VERB, where <mor pres tense> is the longest match.  The
# quoted "<mor root>" then looks the root up at the original node, Love.
for text in ["Love:<mor pres tense sing two>", "Love:<mor pres tense sing three>",
             "Love:<mor past>", "Come:<mor past>", "Come:<mor past participle>"]:
    print(f"{text:36} -> {' '.join(evaluate(theory, parse_query(text)))}")

# Looking at the lookups the evaluator made
trace = []
evaluate(theory, Query("Love", ("mor", "past")), trace=trace)
print("lookups:", " ; ".join(str(q) for q in trace))

# dump turns a list of queries into extensional sentences
paths = [("mor", "root"), ("mor", "past"), ("mor", "pres", "tense", "sing", "three")]
data, failures = dump(theory, [Query(n, p) for n in ("Love", "Come") for p in paths])
print(print_extensional(data), end="")
