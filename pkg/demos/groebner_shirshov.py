# Completion, normal words and ideal membership in the free algebra.
from ringwords.freealg import parse_poly
from ringwords.rewrite import RelationSet, complete, is_member, normal_words
from ringwords.words import Alphabet

xy = Alphabet("xy")

# yy = x forces x and y to commute
basis, status = complete(RelationSet.of(["yy - x"]), 8)
print(status.value)
for p in basis:
    print("  ", p)
print("normal words up to length 4:", normal_words(basis, xy, 4))

commutative = RelationSet.of(["yx - xy"])
res = is_member(parse_poly("yyx - xyy"), commutative, 8)
print(res.verdict.value)
print(res.trace.export(), end="")
print(is_member(parse_poly("x"), commutative, 8).verdict.value)

# braid-like relation: completion never stops, so we only get a bounded answer
basis, status = complete(RelationSet.of(["xyx - yxy"]), 7)
print(status.value, len(basis), "relations up to degree 7")
