"""Consistency and completeness against observations.

A theory is consistent when every observed query evaluates to the observed
value and complete when every observed query has a value at all.  The
initial hypothesis simply lists the observations and is always both.
"""

from datrinfer import initial_hypothesis, parse_extensional, parse_theory, print_theory, verify
from datrinfer.verifier import ConflictingObservations

data = parse_extensional("""
Love: <mor past> = (love _ed).
Come: <mor past> = came.
Come: <mor pres tense sing three> = (come _s).
""")

h0 = initial_hypothesis(data)
print(print_theory(h0))
print(verify(h0, data))

# Drop Come's irregular past: the VERB default takes over and gives (come _ed)
theory = parse_theory("""
VERB: <mor past> == ("<mor root>" _ed)
      <mor pres tense sing three> == ("<mor root>" _s).
Love: <> == VERB  <mor root> == love.
Come: <> == VERB  <mor root> == come.
""")
print()
print(verify(theory, data))

try:
    initial_hypothesis(parse_extensional("X: <a> = b. X: <a> = c."))
except ConflictingObservations as err:
    print("\nrejected:", err)
