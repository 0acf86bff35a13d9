"""Inducing a theory from observations.

Beam search explores rewrite sequences on the monotonic theory and reduces
every theory it keeps; the best reduced theory under the selection criteria
wins.  The trace records every kept move.
"""

from datrinfer import Query, SearchConfig, dump, infer, parse_theory, print_theory
from datrinfer import criteria as crit

VERBS = parse_theory("""
VERB: <mor past> == ("<mor root>" _ed)
      <mor pres tense> == "<mor root>"
      <mor pres tense sing three> == ("<mor root>" _s).
Love: <> == VERB  <mor root> == love.
Come: <> == VERB  <mor root> == come  <mor past> == came
      <mor past participle> == <mor root>.
""")
paths = [("mor", "root"), ("mor", "past"), ("mor", "past", "participle")] + [
    ("mor", "pres", "tense", n, p) for n in ("sing", "plur") for p in ("one", "two", "three")]
data, _ = dump(VERBS, [Query(node, path) for node in ("Love", "Come") for path in paths])

result = infer(data)
print(print_theory(result.theory))
print(f"{len(result.theory)} sentences (from {result.initial_size}), {result.report.lines()[0]}")
print("hierarchy:", crit.hierarchy_lines(result.theory))

# A different configuration: plain sentence count as the selection criterion
config = SearchConfig(beam_width=1, selection_criteria=crit.parse_complex("sentence-count-absolute"))
print(config.to_text())
print(print_theory(infer(data, config).theory))

print("\n".join(result.trace[:12]))
