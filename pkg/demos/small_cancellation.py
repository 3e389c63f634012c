# The genus-2 surface group: C'(1/6) and Dehn's algorithm.
from ringwords.groups import GENUS2, check_metric_condition, dehn_decide, free_reduce, inverse, parse_word

print(check_metric_condition(GENUS2, "1/6"))

r = GENUS2.relators[0]
g = parse_word("a c- b", GENUS2.generators)
w = free_reduce(g + r + inverse(g) + inverse(r))
res = dehn_decide(w, GENUS2)
print(GENUS2.format(w), "->", res.verdict.value)
for step in res.steps:
    print("  ", step.kind, GENUS2.format(step.before), "=>", GENUS2.format(step.after))

print(dehn_decide(parse_word("a b a- b-", GENUS2.generators), GENUS2).verdict.value)
