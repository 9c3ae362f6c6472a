"""Bubbling handles and the rewrite rules between parameter sequences.

A sequence starts from a genus-zero (or higher) base with a tracked metric
zero and adds one handle per parameter. The four rewrite rules, plus a few
identities special to quadratic differentials, relate sequences that give
the same connected component.
"""

from stratakit.oplus import OplusSequence, apply_rule, make_state, normalize, parse_sequence

base = make_state(2, [2, -2])  # the genus-one stratum (2, -2)
seq = OplusSequence(base, (1, 4))
print(seq.text(), "->", apply_rule(seq, 0, "shift").text())

# The normalizer searches the class and returns its least member.
for ops in ((1, 4), (2, 5), (3, 4), (5,)):
    result = normalize(OplusSequence(base, ops))
    print(f"{ops} -> {result.representatives[0].params} ({result.explored} states)")

# Over the base (0, -4) the identity 1+1 = 1+4 comes from a degeneration.
print(normalize(parse_sequence("base=0,-4;ops=1,4", 2)).representatives[0].text())

# Over (-1, -3) the balanced pair (1, 3) cannot be simplified by the rules.
print(normalize(parse_sequence("base=-1,-3;ops=1,3", 2)).representatives[0].text())
