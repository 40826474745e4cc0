"""Command-line front end.

Exit codes: 0 = yes / success, 1 = no / reject / invalid, 2 = usage, parse,
or guard errors. Kernel and generated graphs go to stdout (or --out) in the
edge-list format; stats lines go to stderr as ``stats-v1 key=value ...``."""

from __future__ import annotations

import argparse
import sys

from . import composition
from .decomposition import nice_clique_decomposition
from .graphs import (
    Graph,
    GraphFormatError,
    GuardError,
    P3,
    PiSpec,
    parse_graph,
    parse_pispec,
    serialize_graph,
)
from .monopolar import kernelize_monopolar
from .random_graphs import generate_random
from .sizeparam import (
    bsize_bound,
    cluster_delta_bound,
    kernelize_by_b_size,
    kernelize_cluster_delta,
)
from .solvers import (
    ClusterPiPartition,
    MonopolarPartition,
    PartialAssignment,
    solve_cluster_pi,
    solve_monopolar_bruteforce,
    validate_partition,
)

DEFAULT_MAX_N = 20
DEFAULT_MAX_FREE = 40


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _read_pispec(path: str) -> PiSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_pispec(fh.read())


def _read_seed(path: str) -> PartialAssignment:
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or parts[0] not in ("A", "B"):
                raise GraphFormatError(f"malformed seed line, line {lineno}")
            pairs.append((parts[0], int(parts[1])))
    return PartialAssignment.from_pairs(pairs)


def _read_partition(path: str):
    a = b = None
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line.startswith("A:"):
                a = tuple(int(x) for x in line[2:].split())
            elif line.startswith("B:"):
                b = tuple(int(x) for x in line[2:].split())
    if a is None or b is None:
        raise GraphFormatError("partition file needs 'A:' and 'B:' lines")
    return a, b


def _emit_graph(g: Graph, out: str | None) -> None:
    text = serialize_graph(g)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stats(line: str) -> None:
    print(f"stats-v1 {line}", file=sys.stderr)


def _print_partition(a, b) -> None:
    print("A: " + " ".join(str(v) for v in a))
    print("B: " + " ".join(str(v) for v in b))


def _read_cis(path: str) -> composition.CISInstance:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [
            ln.strip()
            for ln in fh
            if ln.strip() and not ln.strip().startswith("#")
        ]
    split = next(
        (i for i, ln in enumerate(lines) if ln.startswith("colors")), None
    )
    if split is None:
        raise GraphFormatError("instance file needs a 'colors' line")
    g = parse_graph("\n".join(lines[:split]))
    k = int(lines[split].split()[1])
    colors = [None] * g.n
    for ln in lines[split + 1 :]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "color":
            raise GraphFormatError(f"malformed color line: {ln!r}")
        colors[int(parts[1])] = int(parts[2])
    if any(c is None for c in colors):
        raise GraphFormatError("every vertex needs a color line")
    return composition.CISInstance(g, k, tuple(colors))


def _cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    dec = nice_clique_decomposition(g)
    for kind, clique in dec:
        print(f"{kind}: " + " ".join(str(v) for v in clique))
    return 0


def _cmd_solve_monopolar(args) -> int:
    g = _read_graph(args.graph)
    part = solve_monopolar_bruteforce(g, args.k, max_n=args.max_n)
    if part is None:
        return 1
    _print_partition(part.a, part.b)
    return 0


def _cmd_solve_cluster_pi(args) -> int:
    g = _read_graph(args.graph)
    pi = _read_pispec(args.pi)
    seed = _read_seed(args.seed) if args.seed else None
    part = solve_cluster_pi(g, args.d, pi, seed=seed, max_free=args.max_free)
    if part is None:
        return 1
    _print_partition(part.a, part.b)
    return 0


def _cmd_kernelize_monopolar(args) -> int:
    g = _read_graph(args.graph)
    result = kernelize_monopolar(g, args.k)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for entry in result.trace:
                fh.write(entry.format() + "\n")
    if result.outcome == "reject":
        _stats(f"before={result.before} after=reject bound={9 * args.k ** 4 + 9 * args.k + 1}")
        return 1
    _emit_graph(result.graph, args.out)
    _stats(
        f"before={result.before} after={result.after} "
        f"bound={9 * args.k ** 4 + 9 * args.k + 1}"
    )
    return 0


def _cmd_kernelize_bsize(args) -> int:
    g = _read_graph(args.graph)
    pi = _read_pispec(args.forbidden)
    if not pi.patterns:
        print("error: forbidden family must contain at least one pattern", file=sys.stderr)
        return 2
    kernel, _ = kernelize_by_b_size(g, args.k, pi.patterns)
    d = max(p.n for p in pi.patterns)
    _emit_graph(kernel, args.out)
    _stats(f"before={g.n} after={kernel.n} bound={bsize_bound(d, args.k)}")
    return 0


def _cmd_kernelize_cluster_delta(args) -> int:
    g = _read_graph(args.graph)
    result = kernelize_cluster_delta(g, args.k, args.delta)
    bound = cluster_delta_bound(args.k, args.delta)
    if result.outcome == "reject":
        _stats(f"before={g.n} after=reject bound={bound}")
        return 1
    _emit_graph(result.graph, args.out)
    _stats(f"before={g.n} after={result.after} bound={bound}")
    return 0


def _cmd_verify_partition(args) -> int:
    g = _read_graph(args.graph)
    a, b = _read_partition(args.partition)
    if args.pi:
        pi = _read_pispec(args.pi)
        part = ClusterPiPartition(a=a, b=b, budget=args.k)
        ok, why = validate_partition(g, part, args.k, pi)
    else:
        part = MonopolarPartition(a=a, b=b)
        ok, why = validate_partition(g, part, args.k)
    if ok:
        print("valid")
        return 0
    print(f"invalid: {why}")
    return 1


def _cmd_generate_random(args) -> int:
    g = generate_random(args.n, args.p, args.seed)
    _emit_graph(g, args.out)
    return 0


def _cmd_generate_compose(args) -> int:
    pattern = _read_graph(args.pattern)
    instances = [_read_cis(path) for path in args.instances]
    batch = composition.pad_instances(instances)
    out = composition.compose(batch, pattern)
    with open(args.out + ".graph", "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(out.graph))
    with open(args.out + ".d", "w", encoding="utf-8") as fh:
        fh.write(f"{out.d}\n")
    with open(args.out + ".roles", "w", encoding="utf-8") as fh:
        fh.write(composition.format_roles(out))
    with open(args.out + ".seed", "w", encoding="utf-8") as fh:
        fh.write(composition.format_seed(out))
    _stats(
        f"t={batch.t} k={batch.k} n={batch.n} m={batch.m} d={out.d} "
        f"vertices={out.graph.n} edges={out.graph.m}"
    )
    return 0


def _cmd_selftest(args) -> int:
    from .graphs import complete_graph, disjoint_union, empty_graph, path_graph
    from .decomposition import verify_decomposition
    from .sizeparam import SetFamily, sunflower_reduce
    from .graphs import PI_CLUSTER

    failures = []

    def check(name, ok):
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures.append(name)

    g = disjoint_union([complete_graph(3), empty_graph(1)])
    dec = nice_clique_decomposition(g)
    check("decomposition", verify_decomposition(g, dec)[0])
    part = solve_monopolar_bruteforce(P3, 1)
    check("solver", part is not None and validate_partition(P3, part, 1)[0])
    res = kernelize_monopolar(disjoint_union([complete_graph(3)] * 2), 1)
    check("kernel-reject", res.outcome == "reject")
    res = kernelize_monopolar(P3, 1)
    check("kernel-size", res.outcome == "kernel" and res.after <= 19)
    fam = SetFamily.build(6, [(0, 1), (2, 3), (4, 5)])
    _, forced = sunflower_reduce(fam, 1)
    check("sunflower", forced)
    inst = composition.CISInstance(Graph(4, [(0, 2), (0, 3), (1, 2)]), 2, (0, 0, 1, 1))
    batch = composition.pad_instances([inst, inst])
    out = composition.compose(batch, P3)
    check("composition", not composition.audit_invariants(out))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarkit",
        description="kernelization, exact solving, and hard-instance "
        "generation for cluster-partition recognition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="print a nice clique decomposition")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_decompose)

    solve = sub.add_parser("solve", help="exact solvers").add_subparsers(
        dest="solver", required=True
    )
    p = solve.add_parser("monopolar")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help="override the brute-force size guard (slow)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_solve_monopolar)
    p = solve.add_parser("cluster-pi")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--seed")
    p.add_argument("--max-free", type=int, default=DEFAULT_MAX_FREE,
                   help="override the free-vertex guard (slow)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_solve_cluster_pi)

    kern = sub.add_parser("kernelize", help="kernelizations").add_subparsers(
        dest="kernel", required=True
    )
    p = kern.add_parser("monopolar")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trace")
    p.add_argument("--out")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_kernelize_monopolar)
    p = kern.add_parser("bsize")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--forbidden", required=True)
    p.add_argument("--out")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_kernelize_bsize)
    p = kern.add_parser("cluster-delta")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_kernelize_cluster_delta)

    ver = sub.add_parser("verify", help="re-check claimed outputs").add_subparsers(
        dest="verify", required=True
    )
    p = ver.add_parser("partition")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", help="property file; omitted means monopolar")
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_verify_partition)

    gen = sub.add_parser("generate", help="instance generators").add_subparsers(
        dest="generator", required=True
    )
    p = gen.add_parser("random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate_random)
    p = gen.add_parser("compose")
    p.add_argument("--pattern", required=True,
                   help="graph file holding the minimal forbidden pattern")
    p.add_argument("--out", required=True, help="output prefix")
    p.add_argument("instances", nargs="+")
    p.set_defaults(func=_cmd_generate_compose)

    p = sub.add_parser("selftest", help="run built-in fixture checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("k", "d", "delta", "n"):
        value = getattr(args, name, None)
        if isinstance(value, int) and value < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (GraphFormatError, GuardError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
