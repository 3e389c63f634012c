# Growth of monomial algebras read off their automata.
from ringwords.autalg import build_normal_word_automaton, classify_growth, gk_estimate, growth_per_length, spectral_radius

for forbidden in (["yy"], ["yx"], ["yx", "xx"], ["xyy", "yxx"], ["x", "y"]):
    a = build_normal_word_automaton("xy", forbidden)
    print(forbidden, classify_growth(a), growth_per_length(a, 8))

fib = build_normal_word_automaton("xy", ["yy"])
print("growth rate", spectral_radius(fib))

comm = build_normal_word_automaton("xy", ["yx"])
for n in (10, 100, 1000, 10000):
    print(n, round(gk_estimate(comm, n), 3))  # creeps up to 2

print(fib.to_dot())
