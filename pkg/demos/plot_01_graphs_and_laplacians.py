"""
Graphs, neighbourhoods and Laplacians
=====================================

Builtin infinite graphs are lazy: only the vertices you ask about are ever
computed. The Laplacian is an infinite matrix given row by row.
"""

import json
import pathlib
from fractions import Fraction

from omegalap import (
    FinVector,
    Grid2D,
    Ray,
    build_laplacian,
    distance,
    graph_from_spec,
    n_neighborhood,
    verify_hopping,
    weights_from_spec,
)

# the square lattice is enumerated along a spiral around the origin v_1
grid = Grid2D()
print("neighbors of the origin:", grid.neighbors(1))
print("U_2(v_1) has", len(n_neighborhood(grid, 1, 2)), "vertices")
print("d(v_1, v_49) =", distance(grid, 1, 49, radius_cap=100))

# Laplacian with normalized weights 1/deg(v): the diagonal part is the identity
lap, pair = build_laplacian(Ray(), "normalized")
print("row 2 of the Laplacian:", lap.row(2))
print("row 2 of B:", pair.B.row(2))

x = FinVector({1: 1, 2: Fraction(1, 2)})
print("L x =", lap.apply(x))

# rows only touch graph neighbours, so the operator is continuous
print("hopping violations at radius 1:", verify_hopping(lap, 1, 200))
print("hopping violations at radius 0:", len(verify_hopping(lap, 0, 10)))

# a weighted finite graph: a pentagon with a directed weight table
here = pathlib.Path(__file__).parent / "data"
pentagon = graph_from_spec(json.loads((here / "pentagon.json").read_text()))
weights = weights_from_spec(json.loads((here / "pentagon_weights.json").read_text()))
lap5, pair5 = build_laplacian(pentagon, weights)
print("weighted degrees:", [pair5.diagonal_entry(k) for k in range(1, 6)])
