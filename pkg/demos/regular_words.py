# Regular words, their factorization and their Lie brackets.
from ringwords import BINARY, cfl_factorize, expand_bracket, generate_regular, shirshov_bracketing
from ringwords.words import format_bracket

words = generate_regular(BINARY, 6)
for n in range(1, 7):
    print(n, [w for w in words if len(w) == n])

# every word splits into a nonincreasing product of regular words
for w in ["abbab", "aabba", "babba"]:
    print(w, "=", " . ".join(cfl_factorize(w)))

# the bracketing of a regular word expands to a polynomial led by the word itself
for w in ["ba", "bba", "baa", "bbaba"]:
    t = shirshov_bracketing(w)
    print(format_bracket(t), "=", expand_bracket(t))
