"""Command-line interface.

Subcommands: bounds, classify, measure, orbit, verify.  Graphs are given as
graph6 text, either inline, as a file path, or as "-" for standard input
(one graph per line).  Vertex labels are 0-based everywhere.

Exit codes: 0 success, 1 usage or parse error, 2 size cap exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from . import entanglement, measurement, oracle, orbits
from .graphs import (
    CapExceeded,
    Graph,
    parse_graph6,
    random_connected_graph,
    to_graph6,
)
from .measurement import ZeroProbabilityOutcome, apply_sequence, sequence_transcript
from .stabilizer import local_complement_clifford
from .graphs import local_complement

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2 for caps
        raise _UsageError(message)


def _load_graphs(spec: str) -> list[Graph]:
    if spec == "-":
        text = sys.stdin.read()
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if os.path.exists(spec):
        with open(spec, "r", encoding="ascii") as fh:
            return [parse_graph6(line) for line in fh if line.strip()]
    return [parse_graph6(spec)]


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ri_text(ri) -> str:
    return "(" + ",".join(map(str, ri)) + ")" if ri is not None else ""


# ---------------------------------------------------------------------------
# subcommands

def _cmd_bounds(args) -> int:
    graphs = _load_graphs(args.graph)
    records = []
    for g in graphs:
        if g.n > args.max_vertices:
            raise CapExceeded(f"graph has {g.n} vertices, cap is {args.max_vertices}")
        records.append(entanglement.bounds_record(
            g, search_cap=max(entanglement.DEFAULT_SEARCH_CAP, args.max_vertices),
            depth_limit=args.depth_limit))
    if args.format == "json":
        _emit(json.dumps(records, indent=2) + "\n", args.output)
    elif args.format == "csv":
        lines = ["graph6,lower,upper,cover_size,tight,RI_2,RI_3,two_colorable"]
        for r in records:
            lines.append(",".join([
                r["graph6"], str(r["lower"]), str(r["upper"]),
                str(r["cover_size"]), "yes" if r["tight"] else "no",
                f'"{_ri_text(r["RI_2"])}"', f'"{_ri_text(r["RI_3"])}"',
                "yes" if r["two_colorable"] else "no"]))
        _emit("\n".join(lines) + "\n", args.output)
    else:
        lines = []
        for r in records:
            lines.append(
                f'{r["graph6"]} lower={r["lower"]} upper={r["upper"]}'
                f' cover={r["cover_size"]} tight={"yes" if r["tight"] else "no"}'
                f' RI_2={_ri_text(r["RI_2"])} RI_3={_ri_text(r["RI_3"])}'
                f' two_colorable={"yes" if r["two_colorable"] else "no"}')
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_classify(args) -> int:
    records = orbits.classify(args.n_max, jobs=args.jobs)
    if args.format == "json":
        _emit(orbits.records_to_json(records) + "\n", args.output)
    elif args.format == "dot":
        _emit(orbits.representatives_dot(records), args.output)
    else:
        _emit(orbits.records_to_csv(records), args.output)
    return EXIT_OK


_STEP_RE = re.compile(r"^([xyz])(\d+)([+-]?)$")


def _parse_steps(tokens, rng) -> "callable":
    """Return a closure that resolves each token to (vertex, basis, sign),
    sampling unspecified outcomes with the seeded RNG."""
    parsed = []
    for tok in tokens:
        m = _STEP_RE.match(tok)
        if not m:
            raise ValueError(
                f"bad step {tok!r}: expected <basis><vertex>[+-], e.g. x0 or z2-")
        basis, vertex, sign = m.group(1), int(m.group(2)), m.group(3)
        parsed.append((vertex, basis, {"": None, "+": 1, "-": -1}[sign]))
    return parsed


def _cmd_measure(args) -> int:
    graphs = _load_graphs(args.graph)
    if len(graphs) != 1:
        raise ValueError("measure expects exactly one input graph")
    g = graphs[0]
    rng = random.Random(args.seed)
    parsed = _parse_steps(args.steps, rng)
    chosen: list[tuple[int, str, int]] = []
    for vertex, basis, sign in parsed:
        if sign is None:
            sign = 1 if rng.random() < 0.5 else -1
            try:
                apply_sequence(g, chosen + [(vertex, basis, sign)])
            except ZeroProbabilityOutcome:
                sign = 1
        chosen.append((vertex, basis, sign))
    transcript = sequence_transcript(g, chosen)
    final, byproduct, prob = apply_sequence(g, chosen)
    if args.format == "json":
        _emit(json.dumps({
            "input": to_graph6(g),
            "steps": transcript,
            "final_graph6": to_graph6(final),
            "byproduct": str(byproduct),
            "probability": f"{prob.numerator}/{prob.denominator}",
        }, indent=2) + "\n", args.output)
    else:
        lines = [f"input {to_graph6(g)}"]
        for rec in transcript:
            lines.append(
                f'{rec["basis"]}{rec["vertex"]}{"+" if rec["outcome"] > 0 else "-"}'
                f' -> {rec["graph6_after"]}  byproduct: {rec["byproduct"]}')
        lines.append(f"final {to_graph6(final)}  probability {prob}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_orbit(args) -> int:
    graphs = _load_graphs(args.graph)
    if len(graphs) != 1:
        raise ValueError("orbit expects exactly one input graph")
    g = graphs[0]
    if g.n > args.max_vertices:
        raise CapExceeded(f"graph has {g.n} vertices, cap is {args.max_vertices}")
    if args.with_isomorphisms:
        members = orbits.lc_closure_with_relabelings(g, limit=args.orbit_limit)
    else:
        members = orbits.lc_orbit(g, limit=args.orbit_limit)
    _emit("\n".join(to_graph6(m) for m in members) + "\n", args.output)
    return EXIT_OK


def _verify_suite(seed: int, max_n: int, trials: int) -> list[str]:
    import numpy as np

    rng = random.Random(seed)
    failures: list[str] = []

    def check(label: str, ok: bool) -> None:
        if not ok:
            failures.append(label)

    for t in range(trials):
        n = rng.randrange(2, max_n + 1)
        g = random_connected_graph(rng, n)
        state = oracle.graph_state(g)
        tag = f"trial {t} {to_graph6(g)}"

        a = rng.randrange(n)
        for basis in ("x", "y", "z"):
            for sign in (1, -1):
                prob, post = oracle.apply_projector(state, a, basis, sign)
                out = measurement.measure_pauli(g, a, basis)
                check(f"{tag}: probability {basis}{a}",
                      abs(prob - float(out.prob_plus if sign > 0 else 1 - out.prob_plus)) < 1e-12)
                if post is None:
                    continue
                byp = out.byproduct_plus if sign > 0 else out.byproduct_minus
                ref = oracle.graph_state(out.graph_after)
                ref = oracle.apply_local_clifford(ref, byp)
                ref = oracle.insert_qubit(ref, a, oracle.basis_eigenvector(basis, sign))
                check(f"{tag}: projection rule {basis}{a}",
                      oracle.equal_up_to_global_phase(post, ref))

        a_mask = rng.randrange(1, (1 << n) - 1)
        r = entanglement.schmidt_rank(g, a_mask)
        traced = [v for v in range(n) if (a_mask >> v) & 1]
        check(f"{tag}: reduced rank", oracle.reduced_rank(state, traced) == 1 << r)
        check(f"{tag}: reduced entropy",
              abs(oracle.reduced_entropy(state, traced) - r) < 1e-6)

        v = rng.randrange(n)
        flipped = oracle.apply_local_clifford(state, local_complement_clifford(g, v))
        check(f"{tag}: complementation rule",
              oracle.equal_up_to_global_phase(
                  flipped, oracle.graph_state(local_complement(g, v))))

        if n <= 8:
            check(f"{tag}: partial trace form",
                  oracle.verify_partial_trace_form(g, a_mask))
    return failures


def _cmd_verify(args) -> int:
    failures = _verify_suite(args.seed, args.max_vertices, args.trials)
    total = args.trials
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        print(f"verify: {len(failures)} failures over {total} trials "
              f"(seed={args.seed}, n<={args.max_vertices})")
        return EXIT_VERIFY
    print(f"verify: all checks passed over {total} trials "
          f"(seed={args.seed}, n<={args.max_vertices})")
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    p = _Parser(prog="graphstates",
                description="Graph-state entanglement bounds, measurement "
                            "rewrites, and local-complementation orbits.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="Schmidt-measure bounds for graph6 input")
    b.add_argument("graph", help="graph6 string, file of graph6 lines, or -")
    b.add_argument("--format", choices=("text", "csv", "json"), default="text")
    b.add_argument("--max-vertices", type=int, default=12)
    b.add_argument("--depth-limit", type=int, default=None,
                   help="limit persistency search depth (upper bound stays valid)")
    b.add_argument("--output")
    b.set_defaults(func=_cmd_bounds)

    c = sub.add_parser("classify", help="classify connected graphs up to n_max")
    c.add_argument("n_max", type=int)
    c.add_argument("--format", choices=("csv", "json", "dot"), default="csv")
    c.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    c.add_argument("--output")
    c.set_defaults(func=_cmd_classify)

    m = sub.add_parser("measure", help="apply a Pauli measurement sequence")
    m.add_argument("graph")
    m.add_argument("steps", nargs="+",
                   help="steps like x0 z2- y1+ (sign omitted = sampled)")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.add_argument("--output")
    m.set_defaults(func=_cmd_measure)

    o = sub.add_parser("orbit", help="local-complementation orbit listing")
    o.add_argument("graph")
    o.add_argument("--orbit-limit", type=int, default=orbits.ORBIT_LIMIT_DEFAULT)
    o.add_argument("--max-vertices", type=int, default=12)
    o.add_argument("--with-isomorphisms", action="store_true",
                   help="also close under vertex relabelings")
    o.add_argument("--output")
    o.set_defaults(func=_cmd_orbit)

    v = sub.add_parser("verify", help="randomized state-vector verification")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-vertices", type=int, default=8)
    v.add_argument("--trials", type=int, default=50)
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
