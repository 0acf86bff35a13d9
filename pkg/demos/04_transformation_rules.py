"""Transformation rules: replacing values by inheritance descriptors.

Each rule proposes RHS rewrites; ``apply`` keeps a rewrite only if the
theory still reproduces the observations.
"""

from datrinfer import Query, apply, candidates, dump, parse_theory, print_theory

theory = parse_theory("""
Love: <mor root> == love  <mor pres> == love  <mor past> == (love _ed).
VERB: <mor root> == love.
""")
data, _ = dump(theory, [Query(s.node, s.path) for s in theory])

for rule in ("L1", "L2", "G2", "G2s"):
    print(rule, [str(r.new) for r in candidates(theory, [rule])])

# Apply the part-RHS rewrite that turns (love _ed) into ("<mor root>" _ed)
rewrite = next(r for r in candidates(theory, ["G2s"]) if '"<mor root>"' in str(r))
print()
print(print_theory(apply(theory, rewrite, data)))

# Abstraction: two nodes that share sentences get a common parent
nouns = parse_theory("""
Herr: <root> == herr  <plur> == ("<root>" _n)  <sing acc> == ("<root>" _n).
Affe: <root> == affe  <plur> == ("<root>" _n)  <sing acc> == ("<root>" _n).
""")
for r in candidates(nouns, ["A1"]):
    print(r)
    for s in r.added:
        print("   ", s)
