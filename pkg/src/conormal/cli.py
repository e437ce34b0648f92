"""Command-line interface.

    conormal compute {aut,D,Dprime,predicates} GRAPH...
    conormal product {conormal,cartesian} LEFT [RIGHT] [--power K]
    conormal verify CLAIM|all [GRAPH...] [--corpus SPEC] [--jobs N]

A GRAPH argument is a family name (``P4``, ``C5``, ``K3``, ``K1,3``,
``E4``), a graph6 string, a file of graph6 lines or an edge list, or ``-``
for standard input. Records are JSON objects, one per line, with sorted
keys; run time sits under the ``timing`` key and is the only field allowed
to differ between identical runs.

Exit status: 0 success, 1 a claim was violated, 2 bad input, 3 search
budget or timeout exhausted, 4 the requested quantity is undefined.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence, TextIO

from .budget import Budget
from .census import CensusSummary, default_power, iter_census, parse_corpus
from .checks import CLAIMS, VIOLATED, CheckReport, encode, run_claim
from .distinguishing import distinguishing_index, distinguishing_number, is_traceable
from .errors import BudgetExceeded, GraphError, UndefinedIndexError
from .graph import Graph, dominating_vertices, has_false_twins, is_connected, parse_family
from .io import GRAPH6_MAX_N, dumps, from_graph6, loads
from .products import cartesian, conormal, conormal_power
from .symmetry import group_data

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_UNDEFINED = 4


class InputError(Exception):
    pass


def read_input(arg: str, stdin: TextIO | None = None) -> list[Graph]:
    """Graphs named by one command-line argument."""
    if arg == "-":
        return loads((stdin or sys.stdin).read())
    fam = parse_family(arg)
    if fam is not None:
        return [fam]
    p = Path(arg)
    if p.is_file():
        return loads(p.read_text())
    return [from_graph6(arg)]


def _graphs(args: Sequence[str], stdin: TextIO | None = None) -> list[Graph]:
    out: list[Graph] = []
    for a in args or ["-"]:
        out.extend(read_input(a, stdin))
    return out


class Emitter:
    """Single writer for records (JSON lines) or human-readable lines."""

    def __init__(self, fmt: str, seed: int, out: TextIO):
        self.fmt = fmt
        self.seed = seed
        self.out = out

    def record(self, rec: dict[str, Any], human: str, seconds: float | None = None) -> None:
        if self.fmt == "records":
            rec = {**rec, "seed": self.seed}
            if seconds is not None:
                rec["timing"] = {"seconds": round(seconds, 6)}
            self.out.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            self.out.write(human + "\n")
        self.out.flush()


def _budget(ns: argparse.Namespace) -> Budget:
    kw = {"node_limit": ns.node_budget, "retries": ns.retries}
    return Budget.with_timeout(ns.timeout, **kw)


def _predicates(g: Graph, budget: Budget) -> dict[str, Any]:
    order = group_data(g, budget).order
    rec: dict[str, Any] = {
        "rigid": order == 1,
        "false_twins": has_false_twins(g),
        "dominating_vertices": dominating_vertices(g),
        "connected": is_connected(g),
    }
    try:
        rec["traceable"] = is_traceable(g, budget)
    except BudgetExceeded:
        rec["traceable"] = None
    return rec


def cmd_compute(ns: argparse.Namespace, em: Emitter, stdin: TextIO | None = None) -> int:
    budget = _budget(ns)
    status = EXIT_OK
    for g in _graphs(ns.graphs, stdin):
        t0 = time.perf_counter()
        rec: dict[str, Any] = {"command": "compute", "what": ns.what, "graph": encode(g), "n": g.n, "m": g.m}
        try:
            if ns.what == "aut":
                data = group_data(g, budget)
                rec["group_order"] = data.order
                rec["generators"] = [[int(x) for x in p] for p in data.generators]
                human = f"{rec['graph']}: |Aut| = {data.order}"
            elif ns.what == "predicates":
                rec.update(_predicates(g, budget))
                human = f"{rec['graph']}: " + ", ".join(f"{k}={rec[k]}" for k in ("rigid", "false_twins", "dominating_vertices", "connected", "traceable"))
            else:
                solver = distinguishing_number if ns.what == "D" else distinguishing_index
                res = solver(g, ns.mode, ns.seed, budget)
                rec.update(res.to_record())
                rec["mode"] = ns.mode
                bound = "" if res.exact else f" (upper bound; lower bound {res.lower_bound})"
                name = "D" if ns.what == "D" else "D'"
                human = f"{rec['graph']}: {name} = {res.value}{bound} witness {list(res.witness.labels)}"
        except UndefinedIndexError as exc:
            rec.update({"error": "undefined", "detail": str(exc)})
            em.record(rec, f"{rec['graph']}: undefined: {exc}", time.perf_counter() - t0)
            status = max(status, EXIT_UNDEFINED)
            continue
        except BudgetExceeded as exc:
            rec.update({"error": "budget", "detail": str(exc), "lower_bound": exc.lower_bound})
            em.record(rec, f"{rec['graph']}: budget exhausted: {exc}", time.perf_counter() - t0)
            status = max(status, EXIT_BUDGET)
            continue
        em.record(rec, human, time.perf_counter() - t0)
    return status


def cmd_product(ns: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO | None = None) -> int:
    left = _graphs([ns.left], stdin)
    if len(left) != 1:
        raise InputError("product needs exactly one left graph")
    g = left[0]
    if ns.power is not None:
        if ns.right is not None:
            raise InputError("--power takes a single graph")
        if ns.kind != "conormal":
            raise InputError("--power is only defined for the co-normal product")
        result = conormal_power(g, ns.power)
    else:
        if ns.right is None:
            raise InputError("product needs a right graph (or --power)")
        right = _graphs([ns.right], stdin)
        if len(right) != 1:
            raise InputError("product needs exactly one right graph")
        build = conormal if ns.kind == "conormal" else cartesian
        result = build(g, right[0])
    if result.n > GRAPH6_MAX_N:
        err.write(f"note: order {result.n} exceeds the graph6 limit of {GRAPH6_MAX_N}; writing an edge list\n")
    out.write(dumps(result))
    return EXIT_OK


def _report_line(rep: CheckReport) -> str:
    inst = " ".join(f"{k}={v if not isinstance(v, str) or len(v) < 40 else v[:37] + '...'}" for k, v in rep.instance.items())
    extra = f" ({rep.reason})" if rep.reason else ""
    if rep.verdict == VIOLATED:
        extra = f" failed: {rep.witness.get('failed_parts') if rep.witness else ''}"
    return f"{rep.claim_id:22s} {inst:30s} {rep.verdict}{extra}"


def _explicit_reports(claim_ids: list[str], graphs: list[Graph], ns: argparse.Namespace, budget: Budget, power_mode: str):
    for cid in claim_ids:
        claim = CLAIMS[cid]
        if claim.arity == "graph":
            for g in graphs:
                yield lambda g=g, cid=cid: run_claim(cid, g, seed=ns.seed, budget=budget)
        elif claim.arity == "pair":
            if len(graphs) % 2:
                if len(claim_ids) == 1:
                    raise InputError(f"claim {cid!r} takes graphs in pairs (G H ...)")
                continue
            for g, h in zip(graphs[::2], graphs[1::2]):
                yield lambda g=g, h=h, cid=cid: run_claim(cid, g, h, seed=ns.seed, budget=budget)
        else:
            for g in graphs:
                k = ns.power or default_power(g, budget)
                yield lambda g=g, k=k, cid=cid: run_claim(cid, g, k, seed=ns.seed, budget=budget, mode=power_mode)


def cmd_verify(ns: argparse.Namespace, em: Emitter, stdin: TextIO | None = None) -> int:
    if ns.claim is None:
        if not ns.targets:
            raise InputError("verify needs a claim id or 'all'")
        ns.claim, ns.graphs = ns.targets[0], ns.targets[1:]
    else:
        ns.graphs = ns.targets
    if ns.claim != "all" and ns.claim not in CLAIMS:
        raise InputError(f"unknown claim id {ns.claim!r}; known: {', '.join(CLAIMS)}")
    claim_ids = list(CLAIMS) if ns.claim == "all" else [ns.claim]
    budget = _budget(ns)
    # power claims run on large graphs; they default to certificate mode
    power_mode = ns.mode if ns.mode_given else "certificate"
    summary = CensusSummary()

    def emit(rep: CheckReport, seconds: float | None) -> None:
        summary.add(rep)
        em.record({"command": "verify", **rep.to_record()}, _report_line(rep), seconds)

    if ns.corpus:
        if ns.graphs:
            raise InputError("give either graphs or --corpus, not both")
        corpus = parse_corpus(ns.corpus, budget)
        for _, rep in iter_census(corpus, claim_ids, ns.seed, budget, ns.power, power_mode, ns.jobs):
            emit(rep, None)
    else:
        graphs = _graphs(ns.graphs, stdin)
        for run in _explicit_reports(claim_ids, graphs, ns, budget, power_mode):
            t0 = time.perf_counter()
            rep = run()
            emit(rep, time.perf_counter() - t0)
    counts = {cid: dict(sorted(c.items())) for cid, c in sorted(summary.by_claim.items())}
    human = "summary: " + "; ".join(f"{cid} {c}" for cid, c in counts.items()) + f"; violations {summary.violations}"
    em.record({"command": "verify-summary", **summary.to_record()}, human)
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "certificate"), default=None,
                        help="exact: prove minimality; certificate: verified upper bounds (default exact)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized witness search")
    common.add_argument("--node-budget", type=int, default=2_000_000, help="search nodes per call")
    common.add_argument("--retries", type=int, default=512, help="random labelings tried per label count")
    common.add_argument("--timeout", type=float, default=None, help="wall-clock limit in seconds")
    common.add_argument("--output", choices=("human", "records"), default="human")

    p = argparse.ArgumentParser(prog="conormal", description="Symmetry breaking in co-normal products of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="automorphism group order, D, D' or predicates")
    c.add_argument("what", choices=("aut", "D", "Dprime", "predicates"))
    c.add_argument("graphs", nargs="*", help="graph inputs (default: standard input)")

    q = sub.add_parser("product", parents=[common], help="build a product graph")
    q.add_argument("kind", choices=("conormal", "cartesian"))
    q.add_argument("left")
    q.add_argument("right", nargs="?")
    q.add_argument("--power", type=int, default=None, help="k-th power of LEFT")

    v = sub.add_parser("verify", parents=[common], help="check claims on graphs or a corpus")
    v.add_argument("targets", nargs="*", metavar="CLAIM [GRAPH ...]",
                   help="claim id or 'all' (unless --claim is given), then graph inputs; pair claims read them as G H G H ...")
    v.add_argument("--claim", default=None, help="claim id or 'all'")
    v.add_argument("--corpus", default=None,
                   help="gen:n=K[,connected][,iso], family:n=K, or a graph file")
    v.add_argument("--power", type=int, default=None, help="exponent for power claims")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for corpus runs")
    return p


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out, err = stdout or sys.stdout, stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    ns.mode_given = ns.mode is not None
    ns.mode = ns.mode or "exact"
    try:
        if ns.node_budget <= 0 or ns.retries <= 0 or (ns.timeout is not None and ns.timeout <= 0):
            raise InputError("budgets and timeout must be positive")
        if getattr(ns, "power", None) is not None and ns.power < 1:
            raise InputError("--power must be at least 1")
        em = Emitter(ns.output, ns.seed, out)
        if ns.command == "compute":
            return cmd_compute(ns, em, stdin)
        if ns.command == "product":
            return cmd_product(ns, out, err, stdin)
        return cmd_verify(ns, em, stdin)
    except (InputError, GraphError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except UndefinedIndexError as exc:
        err.write(f"undefined: {exc}\n")
        return EXIT_UNDEFINED
    except BudgetExceeded as exc:
        err.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
