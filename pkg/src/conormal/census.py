"""Exhaustive small-graph corpora and the census driver that applies the
registered claim verifiers to them."""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .budget import DEFAULT_BUDGET, Budget
from .checks import CLAIMS, SKIPPED_BUDGET, VIOLATED, CheckReport, run_claim
from .errors import BudgetExceeded, Graph6Error
from .graph import Graph, graph_from_mask, is_connected, make_family
from .io import read_graphs
from .distinguishing import clear_results
from .symmetry import clear_cache, group_order, isomorphism

MAX_LABELED_N = 6
MAX_ISO_N = 6


def _invariant(g: Graph) -> tuple:
    deg = g.degrees()
    return (g.m, tuple(sorted((deg[v], tuple(sorted(deg[u] for u in g.neighbors(v)))) for v in range(g.n))))


def enumerate_small_graphs(n: int, connected_only: bool = False, up_to_iso: bool = False, budget: Budget | None = None) -> Iterator[Graph]:
    """All labeled graphs on n vertices in increasing edge-bitmask order
    (bit i set = i-th vertex pair in lexicographic order present).

    ``up_to_iso`` keeps the first labeled graph of each isomorphism class,
    deciding isomorphism with the automorphism-search kernel.
    """
    limit = MAX_ISO_N if up_to_iso else MAX_LABELED_N
    if n < 1:
        raise ValueError("graph order must be >= 1")
    if n > limit:
        raise BudgetExceeded("small-graph enumeration (order)", limit, n)
    reps: dict[tuple, list[Graph]] = defaultdict(list)
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        if up_to_iso:
            bucket = reps[_invariant(g)]
            if any(isomorphism(g, r, budget) is not None for r in bucket):
                continue
            bucket.append(g)
        yield g


def family_corpus(max_n: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        for kind in ("path", "cycle", "complete"):
            if kind == "cycle" and n < 3:
                continue
            g = make_family(kind, n)
            if g not in out:
                out.append(g)
    return out


def rigid_graphs(n: int, count: int, budget: Budget | None = None) -> list[Graph]:
    """First ``count`` pairwise non-isomorphic connected rigid graphs of order n
    in enumeration order."""
    found: list[Graph] = []
    for g in enumerate_small_graphs(n, connected_only=True):
        if group_order(g, budget) != 1:
            continue
        if any(isomorphism(g, f, budget) is not None for f in found):
            continue
        found.append(g)
        if len(found) == count:
            break
    return found


def parse_corpus(spec: str, budget: Budget | None = None) -> list[Graph]:
    """``gen:n=K[,connected][,iso]`` (all graphs of order 1..K),
    ``family:n=K`` (paths, cycles and complete graphs up to order K), or a
    path to a graph6 / edge-list file."""
    if spec.startswith(("gen:", "family:")):
        kind, _, rest = spec.partition(":")
        opts = [t.strip() for t in rest.split(",") if t.strip()]
        n = None
        flags = set()
        for t in opts:
            if t.startswith("n="):
                n = int(t[2:])
            else:
                flags.add(t)
        if n is None:
            raise Graph6Error(f"corpus spec {spec!r} needs n=K")
        unknown = flags - {"connected", "iso"}
        if unknown:
            raise Graph6Error(f"unknown corpus flags {sorted(unknown)}")
        if kind == "family":
            return family_corpus(n)
        return [
            g
            for k in range(1, n + 1)
            for g in enumerate_small_graphs(k, "connected" in flags, "iso" in flags, budget)
        ]
    path = Path(spec)
    if not path.exists():
        raise Graph6Error(f"corpus file {spec!r} not found")
    return read_graphs(path)


@dataclass(frozen=True)
class Task:
    index: int
    claim_id: str
    graphs: tuple[Graph, ...]
    k: int | None = None


def default_power(g: Graph, budget: Budget | None = None) -> int:
    """Smallest exponent the power claims cover: 2 for rigid G, else 3."""
    return 2 if g.n >= 2 and group_order(g, budget) == 1 else 3


def instances(corpus: list[Graph], claim_ids: Iterable[str], power_k: int | None = None, budget: Budget | None = None) -> list[Task]:
    tasks: list[Task] = []
    for cid in claim_ids:
        arity = CLAIMS[cid].arity
        if arity == "graph":
            items = [((g,), None) for g in corpus]
        elif arity == "pair":
            items = [((g, h), None) for g in corpus for h in corpus]
        else:
            items = []
            for g in corpus:
                k = power_k if power_k is not None else default_power(g, budget)
                items.append(((g,), k))
        base = len(tasks)
        tasks.extend(Task(base + i, cid, gs, k) for i, (gs, k) in enumerate(items))
    return tasks


def run_task(task: Task, seed: int = 0, budget: Budget | None = None, mode: str = "certificate") -> CheckReport:
    args = task.graphs if task.k is None else (task.graphs[0], task.k)
    extra = {"mode": mode} if CLAIMS[task.claim_id].arity == "power" else {}
    return run_claim(task.claim_id, *args, seed=seed, budget=budget, **extra)


# Tasks run in fixed-size chunks, each starting from empty result caches, so
# a report never depends on which worker ran which chunk or on ``jobs``.
CHUNK = 64


def _run_chunk(args) -> list[CheckReport]:
    chunk, seed, budget, mode = args
    clear_cache()
    clear_results()
    return [run_task(t, seed, budget, mode) for t in chunk]


def iter_census(
    corpus: list[Graph],
    claim_ids: Iterable[str],
    seed: int = 0,
    budget: Budget | None = None,
    power_k: int | None = None,
    power_mode: str = "certificate",
    jobs: int = 1,
) -> Iterator[tuple[Task, CheckReport]]:
    """Reports in deterministic task order; the output does not depend on ``jobs``."""
    budget = budget or DEFAULT_BUDGET
    tasks = instances(corpus, claim_ids, power_k, budget)
    chunks = [(tasks[i : i + CHUNK], seed, budget, power_mode) for i in range(0, len(tasks), CHUNK)]
    if jobs <= 1:
        for args in chunks:
            yield from zip(args[0], _run_chunk(args))
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for args, reports in zip(chunks, pool.map(_run_chunk, chunks)):
            yield from zip(args[0], reports)


@dataclass
class CensusSummary:
    by_claim: dict[str, Counter] = field(default_factory=lambda: defaultdict(Counter))

    def add(self, report: CheckReport) -> None:
        self.by_claim[report.claim_id][report.verdict] += 1

    @property
    def violations(self) -> int:
        return sum(c[VIOLATED] for c in self.by_claim.values())

    @property
    def budget_skips(self) -> int:
        return sum(c[SKIPPED_BUDGET] for c in self.by_claim.values())

    def to_record(self) -> dict:
        return {
            "summary": {cid: dict(sorted(c.items())) for cid, c in sorted(self.by_claim.items())},
            "violations": self.violations,
        }


def run_census(
    corpus: list[Graph] | str,
    claim_ids: Iterable[str] | str = "all",
    seed: int = 0,
    budget: Budget | None = None,
    power_k: int | None = None,
    jobs: int = 1,
) -> tuple[list[CheckReport], CensusSummary]:
    if isinstance(corpus, str):
        corpus = parse_corpus(corpus, budget)
    if isinstance(claim_ids, str):
        claim_ids = list(CLAIMS) if claim_ids == "all" else [claim_ids]
    claim_ids = list(claim_ids)
    for cid in claim_ids:
        if cid not in CLAIMS:
            raise KeyError(f"unknown claim id {cid!r}")
    summary = CensusSummary()
    reports = []
    for _, rep in iter_census(corpus, claim_ids, seed, budget, power_k, jobs=jobs):
        summary.add(rep)
        reports.append(rep)
    return reports, summary
