"""Independent check: count walks on the free product directly.

The brute-force counter knows nothing about generating functions. It walks
normal-form words and counts self-avoiding paths. Agreement with the series
is exact integer equality.
"""

import time

from connective import build_complete, build_cycle, expand_M, factor_genfun, free_product_saw_counts

products = {
    "K2*K3": [build_complete(2), build_complete(3)],
    "K3*K4": [build_complete(3), build_complete(4)],
    "C2*C5": [build_complete(2), build_cycle(5)],
    "K2*K3*K4": [build_complete(2), build_complete(3), build_complete(4)],
}

N = 12
for label, graphs in products.items():
    t = time.perf_counter()
    brute = free_product_saw_counts(graphs, N).counts
    elapsed = time.perf_counter() - t
    series = tuple(expand_M([factor_genfun(g) for g in graphs], N).as_ints())
    verdict = "match" if series == brute else "MISMATCH"
    print(f"{label:<9} sigma_{N} = {brute[-1]:>12}  {verdict}  ({elapsed:.2f}s)")
