"""Property certificates, graph/origin file I/O and named graph targets."""

from __future__ import annotations

import json
import math
import re
import time
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .analysis import girth, is_k_connected, vertex_connectivity
from .constructors import (
    VertexOrigin,
    chia_thomassen,
    family_member,
    generalized_petersen,
    k4,
    petersen,
)
from .errors import CycleforgeError, MalformedInput, OriginMismatch
from .graph import Graph, from_edgelist, from_graph6, is_cubic, to_edgelist, to_graph6
from .search import (
    count_hamiltonian_cycles,
    longest_cycle_census,
    smith_edge_check,
    thomason_parity_check,
    unique_cycle_nonhamiltonicity_check,
)

EMBED_MAX_ORDER = 1024
ORIGIN_HEADER = "# cycleforge origin v1"
CHECKS = ("cubic", "girth", "connectivity", "ham-count", "census", "smith", "thomason", "unique-nonham")
RUNTIME_KEY = "runtime_s"


# -- graph files ----------------------------------------------------------------


def write_graph(g: Graph, path: Path, fmt: str = "graph6") -> None:
    if fmt == "graph6":
        path.write_bytes(to_graph6(g) + b"\n")
    elif fmt == "edgelist":
        path.write_text(to_edgelist(g))
    else:
        raise MalformedInput(f"unknown format {fmt!r}")


def parse_graph_text(text: str) -> Graph:
    """Read a graph6 line or an edge list, whichever the text looks like."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedInput("no graph found")
    if re.fullmatch(r"\s*\d+\s+\d+\s*", lines[0]):
        return from_edgelist(text)
    return from_graph6(lines[0].strip().encode("ascii", errors="replace"))


def _named_graph(name: str) -> Optional[Graph]:
    if name == "chia-thomassen":
        return chia_thomassen()
    if name == "k4":
        return k4()
    if name == "petersen":
        return petersen()
    m = re.fullmatch(r"gp-(\d+)-(\d+)", name)
    if m:
        return generalized_petersen(int(m[1]), int(m[2]))
    m = re.fullmatch(r"family-(\d+)", name)
    if m:
        return family_member(int(m[1]))[0]
    return None


def load_graph(source: str) -> Graph:
    """A file path, or one of: chia-thomassen, k4, petersen, gp-N-K, family-K."""
    path = Path(source)
    if path.is_file():
        try:
            return parse_graph_text(path.read_text(encoding="ascii"))
        except UnicodeDecodeError:
            raise MalformedInput(f"{source}: not an ASCII graph file") from None
    g = _named_graph(source)
    if g is None:
        raise MalformedInput(f"{source}: no such file or named graph")
    return g


# -- origin maps ----------------------------------------------------------------------


def dump_origin(origin: VertexOrigin, h: Graph) -> str:
    lines = [
        ORIGIN_HEADER,
        f"# order {h.n} host_order {origin.host_order} fiber_order {origin.fiber_order} digest {h.digest()}",
    ]
    for v, (i, j) in enumerate(origin.pairs):
        lines.append(f"{v} {i} {'-' if j is None else j}")
    return "\n".join(lines) + "\n"


def load_origin(text: str, h: Optional[Graph] = None) -> VertexOrigin:
    """Parse an origin map; with ``h`` given, reject maps written for another graph."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != ORIGIN_HEADER:
        raise MalformedInput("missing origin header")
    meta = re.fullmatch(
        r"# order (\d+) host_order (\d+) fiber_order (\d+) digest ([0-9a-f]{64})",
        lines[1].strip() if len(lines) > 1 else "",
    )
    if not meta:
        raise MalformedInput("malformed origin metadata line")
    order, host_order, fiber_order = (int(meta[k]) for k in (1, 2, 3))
    pairs: list[tuple[int, Optional[int]]] = []
    for k, line in enumerate(ln for ln in lines[2:] if ln.strip()):
        parts = line.split()
        if len(parts) != 3 or int(parts[0]) != k:
            raise MalformedInput(f"bad origin row {line!r}")
        pairs.append((int(parts[1]), None if parts[2] == "-" else int(parts[2])))
    if len(pairs) != order:
        raise MalformedInput(f"origin announces {order} rows, found {len(pairs)}")
    if h is not None and (h.n != order or h.digest() != meta[4]):
        raise OriginMismatch("origin map was written for a different graph")
    return VertexOrigin(tuple(pairs), host_order, fiber_order)


# -- certificates ----------------------------------------------------------------------


def _skipped(reason: str) -> dict[str, str]:
    return {"status": "skipped", "reason": reason}


def graph_identity(g: Graph) -> dict[str, Any]:
    ident: dict[str, Any] = {"order": g.n, "size": g.m, "sha256": g.digest()}
    if g.n <= EMBED_MAX_ORDER:
        ident["graph6"] = to_graph6(g).decode("ascii")
    else:
        ident["graph6"] = _skipped(f"order exceeds embed threshold {EMBED_MAX_ORDER}")
    return ident


def _json_number(x: float) -> Any:
    return "infinite" if x == math.inf else int(x)


def _expect(result: dict[str, Any], key: str, expected: Any) -> None:
    if expected is None:
        return
    result.setdefault("expectations", {})[key] = expected
    if result.get(key) != expected:
        result["status"] = "failed"


def run_checks(
    g: Graph,
    checks: Sequence[str],
    expectations: Optional[dict[str, Any]] = None,
    connectivity_k: Optional[int] = None,
    node_budget: Optional[int] = None,
    workers: int = 1,
    max_witnesses: int = 1,
) -> dict[str, Any]:
    """Run the requested checks and assemble the certificate dictionary.

    A check whose kernel raises records ``status: error`` and the exception
    name; the exception is not propagated.
    """
    exp = dict(expectations or {})
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise MalformedInput(f"unknown checks: {sorted(unknown)}")
    search_kw = {"node_budget": node_budget}

    def cubic() -> dict[str, Any]:
        r = {"cubic": is_cubic(g)}
        _expect(r, "cubic", exp.get("cubic"))
        return r

    def girth_check() -> dict[str, Any]:
        res = girth(g)
        r = {"girth": _json_number(res.girth), "witness": list(res.witness)}
        _expect(r, "girth", exp.get("girth"))
        return r

    def connectivity() -> dict[str, Any]:
        if connectivity_k is not None:
            r: dict[str, Any] = {"k": connectivity_k, "k_connected": is_k_connected(g, connectivity_k)}
            _expect(r, "k_connected", exp.get("k_connected"))
            return r
        res = vertex_connectivity(g)
        r = {"kappa": res.kappa, "cut": list(res.cut)}
        _expect(r, "kappa", exp.get("kappa"))
        return r

    def ham_count() -> dict[str, Any]:
        res = count_hamiltonian_cycles(g, witnesses=True, max_witnesses=max_witnesses, **search_kw)
        r = {
            "hamiltonian_cycles": res.count,
            "witnesses": [list(c) for c in res.witnesses],
            "search": res.stats.as_dict(),
        }
        _expect(r, "hamiltonian_cycles", exp.get("hamiltonian_cycles"))
        return r

    def census() -> dict[str, Any]:
        res = longest_cycle_census(g, max_witnesses=max_witnesses, workers=workers, **search_kw)
        r = {
            "circumference": res.circumference,
            "longest_cycle_count": res.count,
            "witnesses": [list(c) for c in res.witnesses],
            "search": res.stats.as_dict(),
        }
        _expect(r, "longest_cycle_count", exp.get("longest_cycle_count"))
        _expect(r, "circumference", exp.get("circumference"))
        return r

    def smith() -> dict[str, Any]:
        res = smith_edge_check(g)
        return {
            "passed": res.passed,
            "hamiltonian_cycles": res.total,
            "at_least_three_if_hamiltonian": res.three_or_more,
            "per_edge": [[a, b, c] for (a, b), c in sorted(res.per_edge.items())],
            "status": "ok" if res.passed else "failed",
        }

    def thomason() -> dict[str, Any]:
        res = thomason_parity_check(g)
        return {
            "passed": res.passed,
            "parity": res.total_parity,
            "per_vertex_parity": res.per_vertex,
            "status": "ok" if res.passed else "failed",
        }

    def unique_nonham() -> dict[str, Any]:
        res = unique_cycle_nonhamiltonicity_check(g, **search_kw)
        return {
            "passed": res.passed,
            "vacuous": res.vacuous,
            "circumference": res.circumference,
            "longest_cycle_count": res.count,
            "status": "ok" if res.passed else "failed",
        }

    runners: dict[str, Callable[[], dict[str, Any]]] = {
        "cubic": cubic,
        "girth": girth_check,
        "connectivity": connectivity,
        "ham-count": ham_count,
        "census": census,
        "smith": smith,
        "thomason": thomason,
        "unique-nonham": unique_nonham,
    }
    results: dict[str, Any] = {}
    for name in CHECKS:
        if name not in checks:
            results[name] = _skipped("not requested")
            continue
        start = time.perf_counter()
        try:
            r = runners[name]()
            r.setdefault("status", "ok")
        except CycleforgeError as exc:
            r = {"status": "error", "error": type(exc).__name__, "message": str(exc)}
        r[RUNTIME_KEY] = round(time.perf_counter() - start, 6)
        results[name] = r

    return {
        "tool": {"name": "cycleforge", "version": __version__},
        "graph": graph_identity(g),
        "config": {
            "checks": [c for c in CHECKS if c in checks],
            "expectations": exp,
            "connectivity_k": connectivity_k,
            "node_budget": node_budget,
            "threads": workers,
        },
        "checks": results,
    }


def dump_certificate(cert: dict[str, Any]) -> str:
    return json.dumps(cert, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def strip_runtimes(obj: Any) -> Any:
    """Certificate without runtime fields, for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_runtimes(v) for k, v in obj.items() if k != RUNTIME_KEY}
    if isinstance(obj, list):
        return [strip_runtimes(v) for v in obj]
    return obj


def certificate_status(cert: dict[str, Any]) -> str:
    """'ok', 'failed' or the first error name found among the checks."""
    statuses = [c for c in cert["checks"].values() if c["status"] in ("failed", "error")]
    for c in statuses:
        if c["status"] == "error":
            return c["error"]
    return "failed" if statuses else "ok"
