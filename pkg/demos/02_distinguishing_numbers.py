"""Distinguishing numbers D and distinguishing indices D'.

Run with:  python3 demos/02_distinguishing_numbers.py
"""

from __future__ import annotations

from conormal import (
    NonFaithfulActionError,
    complete,
    conormal,
    cycle,
    distinguishing_index,
    distinguishing_number,
    fixes_only_identity,
    path,
)

# D(G) is the fewest labels on vertices such that only the identity
# automorphism preserves the labeling; D'(G) does the same with edges.
print("graph      D  D'")
for name, g in [("P5", path(5)), ("C4", cycle(4)), ("C5", cycle(5)), ("C6", cycle(6)), ("K4", complete(4))]:
    d = distinguishing_number(g)
    di = distinguishing_index(g)
    print(f"{name:8s} {d.value:3d} {di.value:3d}")

# Every result carries a witness labeling that is checked independently.
res = distinguishing_number(cycle(5))
print("\nC5 witness:", res.witness.labels, "verified:", fixes_only_identity(cycle(5), res.witness))
print("lower bound basis:", res.lower_bound_basis)

# Certificate mode stops at the first verified labeling; values 1 and 2 are
# still exact, larger values are flagged when they are only upper bounds.
big = conormal(path(4), cycle(5))
cert = distinguishing_number(big, mode="certificate")
print(f"\nD(P4 * C5) in certificate mode: {cert.value} (exact: {cert.exact})")

# Twin classes force distinct labels: the complement of a perfect matching
# on 8 pairs has 2^8 * 8! automorphisms, and the solver works on the
# 8-node quotient instead of that group.
twins = conormal(cycle(4), complete(4))
print("D(C4 * K4) =", distinguishing_number(twins).value)

# D' is undefined when some automorphism fixes every edge.
try:
    distinguishing_index(complete(2))
except NonFaithfulActionError as exc:
    print("\nD'(K2):", exc)
