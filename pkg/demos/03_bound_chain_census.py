"""A census over small connected pairs, and what it turns up.

The chain  max{D(G box H), D(G), D(H)} <= D(G * H) <= min{D(G)|V(H)|, |V(G)|D(H)}
is checked on every ordered pair of connected labeled graphs with at most
four vertices. The upper half always holds; the lower half does not.

Run with:  python3 demos/03_bound_chain_census.py      (about half a minute)
"""

from __future__ import annotations

from collections import Counter

from conormal import complete, conormal, distinguishing_number, from_graph6, path, run_census
from conormal.checks import VIOLATED

reports, summary = run_census("gen:n=4,connected", "bound-chain")
print("verdicts:", dict(summary.by_claim["bound-chain"]))

failing = Counter(tuple(r.witness["failed_parts"]) for r in reports if r.verdict == VIOLATED)
print("failing parts:", dict(failing))

pairs = Counter()
for r in reports:
    if r.verdict == VIOLATED:
        g, h = from_graph6(r.instance["G"]), from_graph6(r.instance["H"])
        pairs[(g.n, g.m, h.n, h.m)] += 1
print("violating pairs by (|V(G)|, |E(G)|, |V(H)|, |E(H)|):", dict(pairs))

# Every violation pairs K3 or K4 with a labeled P4. The smallest case: three copies of P4 joined completely (K3 * P4). The
# copies can be told apart by giving each a different 2-labeling of P4, so
# two labels suffice even though D(K3) = 3.
prod = conormal(complete(3), path(4))
res = distinguishing_number(prod)
print("\nD(K3) =", distinguishing_number(complete(3)).value, " D(K3 * P4) =", res.value)
rows = [res.witness.labels[i * 4:(i + 1) * 4] for i in range(3)]
print("witness, one row per copy of P4:", rows)
