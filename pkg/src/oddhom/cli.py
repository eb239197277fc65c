"""Command-line interface.

Exit codes: 0 affirmative result, 1 negative mathematical result,
2 operational failure (bad input, exhausted budget, invalid config).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .catalog import named_graph
from .critical import extract_critical_subgraph, is_critical
from .discharging import basic_density_discharge, check_ledger, run_discharging
from .enumeration import enumerate_critical, stream_critical
from .formats import FormatError, emit_graph6, read_graph
from .graph import Graph, GraphError, cycle
from .hom import DEFAULT_BUDGET, BudgetExhausted, find_hom
from .potential import PotentialParams, density_predicates, potential, subgraph_potential_scan
from .structure import StructureError, audit_lemmas, structure_report
from .transforms import FoldError, fold_face, ore_density_check, ore_subdivide
from .verify import run_all

SCHEMA_VERSION = 1
EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    t: int = 3
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    strict: bool = False
    out: str | None = None

    def validate(self) -> None:
        if not 1 <= self.t <= 5:
            raise ValueError(f"t must be in 1..5, got {self.t}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


class CliError(Exception):
    pass


def load_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(data) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise CliError(f"unknown config keys: {sorted(unknown)}")
        for k, v in data.items():
            setattr(cfg, k, v)
    for k in ("t", "budget", "workers", "strict", "out"):
        v = getattr(args, k, None)
        if v is not None:
            setattr(cfg, k, v)
    try:
        cfg.validate()
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return cfg


def load_graph(spec: str, cfg: RunConfig, fmt: str | None) -> Graph:
    """A file path, '-' for stdin, or '@name' for a built-in graph."""
    if spec.startswith("@"):
        return named_graph(spec[1:])
    return read_graph(spec, fmt, cfg.strict).graph


def parse_target(text: str) -> Graph:
    t = text.lower()
    if t.startswith("c") and t[1:].isdigit():
        return cycle(int(t[1:]))
    raise CliError(f"target must look like c7, got {text!r}")


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def emit(cfg: RunConfig, command: str, payload: dict) -> None:
    doc = {"schema_version": SCHEMA_VERSION, "command": command}
    doc.update(_jsonable(payload))
    write(cfg, json.dumps(doc, sort_keys=True, indent=2))


def write(cfg: RunConfig, text: str) -> None:
    text = text if text.endswith("\n") else text + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------- commands

def cmd_hom(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    h = parse_target(args.target or f"c{2 * cfg.t + 1}")
    phi = find_hom(g, h, cfg.budget)
    emit(cfg, "hom", {"target": h.n, "result": "hom" if phi is not None else "none",
                      "witness": list(phi) if phi is not None else None})
    return EXIT_YES if phi is not None else EXIT_NO


def cmd_critical(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    rep = is_critical(g, cycle(2 * cfg.t + 1), cfg.budget)
    emit(cfg, "critical", {"t": cfg.t, "v": g.v, "e": g.e, "potential": potential(g), **rep.to_dict()})
    return EXIT_YES if rep.critical else EXIT_NO


def cmd_extract(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    h = cycle(2 * cfg.t + 1)
    if find_hom(g, h, cfg.budget) is not None:
        print(f"graph maps to C{h.n}; it has no critical subgraph", file=sys.stderr)
        return EXIT_NO
    write(cfg, emit_graph6(extract_critical_subgraph(g, h, cfg.budget)))
    return EXIT_YES


def cmd_structure(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    emit(cfg, "structure", {"t": cfg.t, **structure_report(g, cfg.t)})
    return EXIT_YES


def cmd_audit(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    rep = audit_lemmas(g, cfg.t)
    emit(cfg, "audit", {**rep.to_dict(), "failures": rep.failures()})
    return EXIT_YES


def cmd_potential(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    params = PotentialParams(Fraction(args.alpha), Fraction(args.beta))
    payload = {"alpha": params.alpha, "beta": params.beta, "potential": potential(g, params),
               "density": density_predicates(g, cfg.t)}
    if args.scan:
        payload["scan"] = subgraph_potential_scan(g, params, args.scan, floors=cfg.t == 3).to_dict()
    emit(cfg, "potential", payload)
    return EXIT_YES


def cmd_fold(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    try:
        face = [int(x) for x in args.face.split(",")]
    except ValueError:
        raise CliError("--face must be comma-separated vertex ids") from None
    try:
        res = fold_face(g, face, args.k)
    except FoldError as exc:
        print(f"{exc}: {json.dumps(exc.attempts)}", file=sys.stderr)
        return EXIT_NO
    write(cfg, emit_graph6(res.folded))
    return EXIT_YES


def cmd_ore(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    sub = ore_subdivide(g, cfg.t)
    dens = ore_density_check(sub, cfg.t)
    emit(cfg, "ore", {"graph6": emit_graph6(sub), "density": dens.to_dict()})
    return EXIT_YES if dens.equal else EXIT_NO


def cmd_discharge(args, cfg):
    g = load_graph(args.graph, cfg, args.format)
    if args.basic:
        led = basic_density_discharge(g, cfg.t)
        emit(cfg, "discharge", {"rule": "basic", **led.to_dict()})
        return EXIT_YES
    led = run_discharging(g, cfg.t)
    emit(cfg, "discharge", {"rule": "five-stage", **led.to_dict(), "problems": check_ledger(g, led)})
    return EXIT_YES


def cmd_enumerate(args, cfg):
    res = enumerate_critical(cfg.t, args.n, prune=not args.no_prune, workers=cfg.workers, budget=cfg.budget)
    emit(cfg, "enumerate", res.to_dict())
    return EXIT_YES


def cmd_filter(args, cfg):
    src = sys.stdin if args.input in (None, "-") else open(args.input, encoding="ascii", errors="replace")
    with src:
        res = stream_critical(cfg.t, src, cfg.budget, cfg.workers)
    emit(cfg, "filter-critical", res.to_dict())
    return EXIT_YES if not res.errors else EXIT_ERROR


def cmd_verify(args, cfg):
    results = run_all()
    if args.json:
        emit(cfg, "verify-paper", {"checks": [r.to_dict() for r in results]})
    else:
        lines = [r.line() for r in results]
        if args.verbose:
            lines = [x for r in results for x in [r.line()] + [f"    {d}" for d in r.details]]
        write(cfg, "\n".join(lines))
    return EXIT_YES if all(r.passed for r in results) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", type=int, default=None, help="target is C_{2t+1} (default 3)")
    common.add_argument("--budget", type=int, default=None, help="solver assignment budget")
    common.add_argument("--workers", type=int, default=None, help="worker processes for enumeration")
    common.add_argument("--strict", action="store_true", default=None, help="reject header mismatches and duplicates")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--config", default=None, help="JSON file with t/budget/workers/strict/out")
    common.add_argument("--format", choices=("graph6", "dimacs", "json"), default=None,
                        help="input format (sniffed when omitted)")

    p = argparse.ArgumentParser(prog="oddhom", description="Homomorphisms to odd cycles and critical graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, graph=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if graph:
            sp.add_argument("graph", help="file, '-' for stdin, or @name (e.g. @tight-a, @petersen)")
        sp.set_defaults(func=fn)
        return sp

    add("hom", cmd_hom, "find a homomorphism").add_argument("--target", default=None, help="e.g. c7")
    add("critical", cmd_critical, "decide criticality")
    add("extract-critical", cmd_extract, "print a critical subgraph as graph6")
    add("structure", cmd_structure, "strings, vertex profiles and cells")
    add("audit", cmd_audit, "audit the structural statements")
    sp = add("potential", cmd_potential, "potential and density predicates")
    sp.add_argument("--alpha", default="17")
    sp.add_argument("--beta", default="15")
    sp.add_argument("--scan", type=int, default=0, help="scan connected induced subgraphs up to this size")
    sp = add("fold", cmd_fold, "fold a face")
    sp.add_argument("--face", required=True, help="comma-separated face vertices")
    sp.add_argument("--k", type=int, required=True, help="odd girth to keep")
    add("ore", cmd_ore, "subdivide every edge 2t-2 times")
    add("discharge", cmd_discharge, "run the discharging ledger").add_argument(
        "--basic", action="store_true", help="single-rule basic density discharge instead")
    sp = add("enumerate", cmd_enumerate, "exhaustive search for small critical graphs", graph=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--no-prune", action="store_true")
    sp = add("filter-critical", cmd_filter, "keep critical graphs of a graph6 stream", graph=False)
    sp.add_argument("input", nargs="?", default="-")
    sp = add("verify-paper", cmd_verify, "run the acceptance checks", graph=False)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, FormatError, StructureError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
