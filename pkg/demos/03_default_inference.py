"""Default inference: shortening paths to introduce defaults.

The present tense of VERB is written out cell by cell.  Reducing it
shortens paths one atom at a time, longest first, and deletes sentences
that become redundant, as long as every observation is still reproduced.
"""

from datrinfer import Query, dump, is_maximally_reduced, parse_theory, print_theory, reduce

UNROLLED = """\
VERB: <mor past> == ("<mor root>" _ed)
      <mor pres tense sing one> == "<mor root>"
      <mor pres tense sing two> == "<mor root>"
      <mor pres tense sing three> == ("<mor root>" _s)
      <mor pres tense plur one> == "<mor root>"
      <mor pres tense plur two> == "<mor root>"
      <mor pres tense plur three> == "<mor root>".
Love: <> == VERB  <mor root> == love.
Come: <> == VERB  <mor root> == come  <mor past> == came
      <mor past participle> == <mor root>.
"""

paths = [("mor", "root"), ("mor", "past"), ("mor", "past", "participle")] + [
    ("mor", "pres", "tense", n, p) for n in ("sing", "plur") for p in ("one", "two", "three")]

theory = parse_theory(UNROLLED)
data, _ = dump(theory, [Query(node, path) for node in ("Love", "Come") for path in paths])
print(f"{len(data)} observations, {len(theory)} sentences before reduction")

reduced = reduce(theory, data)
print(print_theory(reduced))
print(f"{len(reduced)} sentences after reduction")

# The present-tense default ends up at <mor pres>, and the past becomes the
# default for the whole node, since nothing observed contradicts that.
print("input maximally reduced: ", is_maximally_reduced(theory, data))
print("output maximally reduced:", is_maximally_reduced(reduced, data))
