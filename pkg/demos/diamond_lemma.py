# The five diamond-lemma conditions on a few small reduction graphs.
from ringwords.rewrite import SimplificationScheme, diamond_report

graphs = {
    "chain": [("a", "b"), ("b", "c")],
    "peak": [("a", "b"), ("a", "c")],
    "square": [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    "split square": [("a", "b"), ("a", "c"), ("b", "d"), ("c", "e")],
}
for name, edges in graphs.items():
    rep = diamond_report(SimplificationScheme([], edges))
    print(f"{name:>12}", rep.values())
