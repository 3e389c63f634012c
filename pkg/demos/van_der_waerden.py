# Exact van der Waerden numbers by backtracking.
import time

from ringwords.ramsey import find_mono_ap, format_coloring, vdw_number

for n, k, bound in [(3, 2, 20), (3, 3, 40), (4, 2, 40)]:
    t = time.perf_counter()
    res = vdw_number(n, k, bound)
    print(f"W({n},{k}) = {res.number}  {format_coloring(res.witness)}  {time.perf_counter() - t:.2f}s")
    assert find_mono_ap(res.witness, n) is None
