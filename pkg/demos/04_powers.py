"""Co-normal powers: large graphs, small distinguishing numbers.

Run with:  python3 demos/04_powers.py
"""

from __future__ import annotations

from conormal import conormal_power, group_order, path, rigid_graphs
from conormal.checks import check_power_theorems

# The cube of P4 has 64 vertices. Its automorphisms permute the three
# coordinates and reverse each one: 3! * 2^3 = 48.
cube = conormal_power(path(4), 3)
print(f"P4^3: {cube.n} vertices, {cube.m} edges, |Aut| = {group_order(cube)}")

report = check_power_theorems(path(4), 3, mode="certificate")
print("D =", report.computed["D"], " D' =", report.computed["D'"], " verdict:", report.verdict)

# A rigid graph needs only the square.
g = rigid_graphs(6, 1)[0]
print("\nrigid order-6 graph:", g.edges)
square = conormal_power(g, 2)
print(f"its square: {square.n} vertices, |Aut| = {group_order(square)}")
report = check_power_theorems(g, 2, mode="certificate")
print("D =", report.computed["D"], " D' =", report.computed["D'"], " verdict:", report.verdict)
