"""How the allowable-path count grows, and how fast it is to compute.

The count depends only on the shape (n, m), not on the box contents;
``count_allowable`` runs a one-pass dynamic program over exact ints.
"""

import time

from platsurf import count_allowable, enumerate_allowable, make_diagram

print("counts by shape (rows: n, columns: m):")
header = [f"{m:>8}" for m in (1, 3, 5, 7, 9)]
print("  n\\m" + "".join(header))
for n in range(3, 8):
    cells = [f"{count_allowable(n, m):>8}" for m in (1, 3, 5, 7, 9)]
    print(f"  {n:>3}" + "".join(cells))

d = make_diagram(4, 5, [[3] * 3, [3] * 4, [3] * 3, [3] * 4, [3] * 3])
print("\nn=4, m=5 enumeration:")
for p in enumerate_allowable(d):
    print(" ", p.entries)

start = time.perf_counter()
big = count_allowable(100, 99)
elapsed = time.perf_counter() - start
print(f"\ncount_allowable(100, 99) = {big}")
print(f"({len(str(big))} digits in {elapsed * 1000:.1f} ms)")
