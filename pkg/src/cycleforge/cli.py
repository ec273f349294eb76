"""Command-line front end: ``build``, ``verify`` and ``project``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import HostCycle, project_cycle
from .certify import (
    CHECKS,
    certificate_status,
    dump_certificate,
    dump_origin,
    load_graph,
    load_origin,
    run_checks,
    write_graph,
)
from .constructors import (
    MarriagePlan,
    VertexOrigin,
    chia_thomassen,
    family_member,
    generalized_petersen,
    k4,
    marry,
    marry_all,
    petersen,
)
from .errors import (
    CycleforgeError,
    InvalidCycle,
    InvalidParameters,
    MalformedInput,
    OriginMismatch,
    ResourceLimit,
)
from .graph import Graph, to_graph6, to_edgelist

EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_MALFORMED = 4
EXIT_PROJECTION = 5
EXIT_IO = 6


def _bijection(tokens: Sequence[str]) -> object:
    if list(tokens) == ["sorted"]:
        return "sorted"
    if len(tokens) == 2 and tokens[0] == "index":
        tokens = tokens[1:]
    if len(tokens) == 1 and tokens[0].isdigit() and int(tokens[0]) < 6:
        return int(tokens[0])
    raise InvalidParameters(f"--bijection expects 'sorted' or 'index K' (K in 0..5), got {' '.join(tokens)}")


def _build(args: argparse.Namespace) -> tuple[Graph, Optional[VertexOrigin]]:
    t = args.target
    p = args.params
    bij = _bijection(args.bijection)

    def ints(k: int) -> list[int]:
        if len(p) != k or not all(x.lstrip("-").isdigit() for x in p):
            raise InvalidParameters(f"'{t}' takes {k} integer parameter(s)")
        return [int(x) for x in p]

    if t == "gp":
        return generalized_petersen(*ints(2)), None
    if t in ("chia-thomassen", "k4", "petersen"):
        ints(0)
        return {"chia-thomassen": chia_thomassen, "k4": k4, "petersen": petersen}[t](), None
    if t == "family":
        (k,) = ints(1)
        h, chain = family_member(k, args.guest_vertex, bij)
        return h, (chain[-1] if chain else None)
    if t in ("marry", "marry-all"):
        if len(p) != 2:
            raise InvalidParameters(f"'{t}' takes HOST and GUEST graphs")
        host, guest = load_graph(p[0]), load_graph(p[1])
        if t == "marry-all":
            return marry_all(host, guest, args.guest_vertex, bij)
        if args.host_vertex is None:
            raise InvalidParameters("'marry' needs --host-vertex")
        plan = MarriagePlan(host, args.host_vertex, guest, args.guest_vertex, 0 if bij == "sorted" else bij)
        return marry(plan)
    raise InvalidParameters(f"unknown build target {t!r}")


def cmd_build(args: argparse.Namespace) -> int:
    g, origin = _build(args)
    if args.out:
        write_graph(g, Path(args.out), args.format)
    else:
        data = to_graph6(g).decode("ascii") + "\n" if args.format == "graph6" else to_edgelist(g)
        sys.stdout.write(data)
    if args.origin_out:
        if origin is None:
            raise InvalidParameters("this target has no origin map")
        Path(args.origin_out).write_text(dump_origin(origin, g))
    print(f"order={g.n} size={g.m}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    checks = [c for chunk in args.checks for c in chunk.split(",") if c]
    expectations = {
        "cubic": args.expect_cubic,
        "girth": args.expect_girth,
        "kappa": args.expect_kappa,
        "k_connected": args.expect_k_connected,
        "hamiltonian_cycles": args.expect_ham_count,
        "longest_cycle_count": args.expect_count,
        "circumference": args.expect_circumference,
    }
    expectations = {k: v for k, v in expectations.items() if v is not None}
    cert = run_checks(
        g,
        checks,
        expectations,
        connectivity_k=args.k,
        node_budget=args.node_budget,
        workers=args.threads,
    )
    text = dump_certificate(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    status = certificate_status(cert)
    for name in cert["config"]["checks"]:
        print(f"{name}: {cert['checks'][name]['status']}", file=sys.stderr)
    if status == "ok":
        return EXIT_OK
    if status == "failed":
        return EXIT_EXPECTATION
    if status == "ResourceLimit":
        return EXIT_RESOURCE
    return EXIT_MALFORMED


def cmd_project(args: argparse.Namespace) -> int:
    h = load_graph(args.graph)
    origin = load_origin(Path(args.origin).read_text(), h)
    host = load_graph(args.host) if args.host else None
    try:
        cycle = [int(x) for x in " ".join(args.cycle).replace(",", " ").split()]
    except ValueError:
        raise InvalidCycle("cycle must be a list of vertex indices") from None
    proj = project_cycle(h, origin, cycle, host)
    if isinstance(proj, HostCycle):
        print("HostCycle")
        print("host_cycle: " + " ".join(map(str, proj.host_cycle)))
        print("fiber_lengths: " + "/".join(map(str, proj.fiber_lengths)))
    else:
        print("InternalCycle")
        print(f"host: {proj.host}")
        print("cycle: " + " ".join(map(str, proj.cycle)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycleforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a graph")
    b.add_argument("target", choices=["gp", "chia-thomassen", "k4", "petersen", "marry", "marry-all", "family"])
    b.add_argument("params", nargs="*")
    b.add_argument("--out", help="output path (default: stdout)")
    b.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    b.add_argument("--origin-out", help="write the vertex origin map here")
    b.add_argument("--host-vertex", type=int, help="host vertex for 'marry'")
    b.add_argument("--guest-vertex", type=int, default=0, help="marked guest vertex u")
    b.add_argument("--bijection", nargs="+", default=["sorted"], metavar="TOKEN",
                   help="'sorted' or 'index K' with K in 0..5")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run checks and write a certificate")
    v.add_argument("graph", help="graph file or named graph (chia-thomassen, k4, petersen, gp-N-K, family-K)")
    v.add_argument("--checks", nargs="+", default=["cubic"], help=f"any of {', '.join(CHECKS)}")
    v.add_argument("--k", type=int, default=None, help="test k-connectivity instead of computing kappa")
    v.add_argument("--out", help="certificate path (default: stdout)")
    v.add_argument("--threads", type=int, default=1, help="worker processes for the census")
    v.add_argument("--node-budget", type=int, default=None, help="abort searches after B nodes")
    v.add_argument("--expect-cubic", action="store_const", const=True, default=None)
    v.add_argument("--expect-girth", type=int)
    v.add_argument("--expect-kappa", type=int)
    v.add_argument("--expect-k-connected", action="store_const", const=True, default=None)
    v.add_argument("--expect-ham-count", type=int)
    v.add_argument("--expect-count", type=int, help="expected number of longest cycles")
    v.add_argument("--expect-circumference", type=int)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("project", help="project a cycle of a married graph onto its host")
    p.add_argument("graph")
    p.add_argument("--origin", required=True)
    p.add_argument("--cycle", nargs="+", required=True)
    p.add_argument("--host", help="host graph, to validate the projected cycle")
    p.set_defaults(func=cmd_project)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"ResourceLimit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidCycle, OriginMismatch) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PROJECTION
    except (MalformedInput, CycleforgeError) as exc:
        name = type(exc).__name__
        print(f"{name}: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, InvalidParameters) else EXIT_MALFORMED
    except OSError as exc:
        print(f"IOFailure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
