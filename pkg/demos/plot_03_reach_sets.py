"""
Reach sets: a Laplacian versus a diagonal operator
==================================================

The reach set collects every column l whose unit vector influences one of
the first n coordinates within k_max powers. A diagonal operator never
leaves {1, ..., n}; a Laplacian keeps spreading as the budget grows.
"""

from fractions import Fraction

from omegalap import BandedOperator, Ray, build_instance, reach_set

diag = BandedOperator.diagonal(Ray(), lambda k: Fraction(1, k))
for k_max in (1, 4, 16, 64):
    print("diagonal, k_max =", k_max, "->", sorted(reach_set(diag, 3, k_max)))

for family in ("ray", "binary_tree", "grid2d"):
    _, op = build_instance({"family": family}, "uniform", "2", "-3")
    sizes = [len(reach_set(op, 1, k)) for k in (1, 2, 4, 8, 16)]
    print(f"{family:12s} |reach(1, k_max)| for k_max = 1, 2, 4, 8, 16:", sizes)
