"""The acceptance checks, runnable from the CLI or the test suite.

Each check returns a :class:`CheckResult`; none of them raise on a failed
expectation, so a full table can always be printed.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .catalog import dodecahedron, petersen, random_planar_cubic, theta, tight_examples, wheel
from .critical import is_critical
from .discharging import FAILED, FLAG_CELLS_DISJOINT, basic_density_discharge, check_ledger, run_discharging
from .enumeration import canonical_form, enumerate_critical
from .formats import parse_graph6
from .graph import Graph, complete, cycle, girth, subdivide_all
from .hom import cycle_extension_set, extension_set, find_hom, is_homomorphism
from .potential import Subgraph, find_extension, main_bound_value, potential
from .structure import CRITICAL_GRAPH_THEOREMS, HOLDS, NOT_APPLICABLE, audit_lemmas, decompose, find_cells
from .transforms import ore_density_check, ore_subdivide


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    details: list = field(default_factory=list)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name} ({self.seconds:.2f}s)"

    def to_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "seconds": round(self.seconds, 3), "details": self.details}


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


C7 = cycle(7)


def check_tight_examples() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for name, g in tight_examples().items():
        rep, secs = _timed(is_critical, g, C7)
        p = potential(g)
        good = rep.critical and p == 2 and g.e == 18 == main_bound_value(g.v) and secs < 10
        details.append(f"{name}: verdict={rep.verdict} p={p} e={g.e} bound={main_bound_value(g.v)} {secs:.2f}s")
        ok &= good
    return CheckResult(1, "tight examples are C7-critical with potential 2", ok, time.perf_counter() - t0, details)


ORE_CASES = ((4, 1), (6, 2), (8, 3))


def check_ore_pipeline() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for n, t in ORE_CASES:
        g = ore_subdivide(complete(n), t)
        rep, secs = _timed(is_critical, g, cycle(2 * t + 1))
        dens = ore_density_check(g, t)
        good = rep.critical and dens.equal and (n != 8 or secs < 60)
        details.append(f"K{n}, t={t}: v={g.v} e={g.e} verdict={rep.verdict} formula={dens.formula} {secs:.2f}s")
        ok &= good
    return CheckResult(2, "Ore subdivisions are critical and meet the density formula", ok,
                       time.perf_counter() - t0, details)


def check_small_oracle(n_max: int = 8, agree_n: int = 6) -> CheckResult:
    t0 = time.perf_counter()
    res = enumerate_critical(3, n_max, prune=True)
    want = sorted(canonical_form(cycle(k)).decode() for k in (3, 5))
    got = sorted(canonical_form(parse_graph6(x)).decode() for x in res.critical)
    pruned = enumerate_critical(3, agree_n, prune=True).critical
    unpruned = enumerate_critical(3, agree_n, prune=False).critical
    secs = time.perf_counter() - t0
    ok = got == want and pruned == unpruned and secs < 1800
    details = [f"n<={n_max}: critical={res.critical} candidates={res.candidates_per_n}",
               f"n<={agree_n}: pruned={pruned} unpruned={unpruned}"]
    return CheckResult(3, f"only C3 and C5 are C7-critical on <= {n_max} vertices", ok, secs, details)


def walk_endpoints(n: int, start: int, length: int) -> frozenset:
    """End colours of all walks of the given length in C_n, by listing every step sequence."""
    return frozenset((start + sum(steps)) % n for steps in itertools.product((1, -1), repeat=length))


def check_extension_sets(max_n: int = 11, max_len: int = 10) -> CheckResult:
    t0 = time.perf_counter()
    bad = []
    for n in range(3, max_n + 1, 2):
        h = cycle(n)
        for s in range(n):
            for length in range(max_len + 1):
                closed = cycle_extension_set(n, s, length)
                if closed != walk_endpoints(n, s, length) or closed != extension_set(h, s, length):
                    bad.append((n, s, length))
                elif length >= 1 and len(closed) < min(length + 1, n):
                    bad.append((n, s, length, "size"))
    details = [f"mismatches: {bad[:5]}"] if bad else ["all (n, start, L) agree"]
    return CheckResult(4, "closed-form extension sets match walk enumeration", not bad,
                       time.perf_counter() - t0, details)


def critical_corpus() -> list[tuple[str, Graph, int]]:
    """Critical graphs used by the structural and basic-density checks: (name, graph, t)."""
    out = [(f"tight-{k}", g, 3) for k, g in tight_examples().items()]
    out += [(f"ore-K{n}", ore_subdivide(complete(n), t), t) for n, t in ORE_CASES]
    for t in (1, 2, 3):
        for k in range(1, t):
            out.append((f"C{2 * k + 1}@t={t}", cycle(2 * k + 1), t))
    out.append(("K4@t=1", complete(4), 1))
    return out


def check_structure_lemmas(extra=()) -> CheckResult:
    t0 = time.perf_counter()
    details = []
    ok = True
    for name, g, t in list(critical_corpus()) + list(extra):
        if not is_critical(g, cycle(2 * t + 1)).critical:
            details.append(f"{name}: not critical")
            ok = False
            continue
        rep = audit_lemmas(g, t)
        fails = [k for k in CRITICAL_GRAPH_THEOREMS if rep.status(k) not in (HOLDS, NOT_APPLICABLE)]
        if fails:
            ok = False
            details.append(f"{name}: fails {fails}")
    details.append(f"audited {len(critical_corpus()) + len(list(extra))} critical graphs")
    return CheckResult(5, "structural theorems hold on every critical graph", ok, time.perf_counter() - t0, details)


def discharge_inputs() -> list[tuple[str, Graph]]:
    out = [(f"tight-{k}", g) for k, g in tight_examples().items()]
    out += [("ore-K8", ore_subdivide(complete(8), 3)), ("petersen", petersen()),
            ("dodecahedron", dodecahedron()), ("theta-4-3-3", theta(4, 3, 3)),
            ("theta-5-4-2", theta(5, 4, 2)), ("wheel-6", wheel(6)), ("K5", complete(5))]
    for seed in range(3):
        out.append((f"cubic-{seed}", subdivide_all(random_planar_cubic(8, seed), seed)))
    return out


def check_discharging() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for name, g in discharge_inputs():
        led = run_discharging(g)
        probs = check_ledger(g, led)
        if probs:
            ok = False
            details.append(f"{name}: {probs}")
    a = tight_examples()["A"]
    led = run_discharging(a)
    a_ok = led.flags[FLAG_CELLS_DISJOINT] == FAILED and all(x == -4 for x in led.totals())
    ok &= a_ok
    details.append(f"tight-A totals={[str(x) for x in led.totals()]} flags={led.flags}")
    return CheckResult(6, "discharging conserves charge and starts at 30e - 34v", ok,
                       time.perf_counter() - t0, details)


def extension_subgraphs(g: Graph) -> list[Subgraph]:
    """Proper induced subgraphs to extend: strings with their ends, cells, branch stars, one vertex."""
    dec = decompose(g)
    fs = []
    for s in dec.strings:
        fs.append(Subgraph.induced(g, s.vertices()))
    for c in find_cells(g, 3, dec):
        fs.append(Subgraph.induced(g, c.vertices))
    for v in dec.branch_vertices[:4]:
        fs.append(Subgraph.induced(g, (v,) + g.adj[v]))
    fs.append(Subgraph.induced(g, (0,)))
    out, seen = [], set()
    for f in fs:
        if f.vertices not in seen and len(f.vertices) < g.n:
            seen.add(f.vertices)
            out.append(f)
    return out


def extension_hosts() -> list[tuple[str, Graph, Graph]]:
    out = [(f"tight-{k}", g, C7) for k, g in tight_examples().items()]
    out += [(f"ore-K{n}", ore_subdivide(complete(n), t), cycle(2 * t + 1)) for n, t in ORE_CASES if t > 1]
    return out


def check_extension_identity(minimum: int = 20) -> CheckResult:
    t0 = time.perf_counter()
    count = 0
    bad = []
    for name, g, h in extension_hosts():
        for f in extension_subgraphs(g):
            w = find_extension(g, h, f)
            count += 1
            if not (w.identity_holds() and w.counts_hold()):
                bad.append((name, sorted(f.vertices)))
    ok = count >= minimum and not bad
    return CheckResult(7, "extension potentials satisfy p(F') = p(F) + p(W) - p(X)", ok,
                       time.perf_counter() - t0, [f"witnesses={count} failures={bad[:5]}"])


def high_girth_inputs(cubic_count: int = 5, target_girth: int = 17) -> list[tuple[str, Graph]]:
    out = [("dodecahedron/3", subdivide_all(dodecahedron(), 3))]
    for seed in range(cubic_count):
        base = random_planar_cubic(12, seed=seed)
        g0 = int(girth(base))
        s = -(-target_girth // g0) - 1
        out.append((f"cubic-{seed}/{s}", subdivide_all(base, s)))
    return out


def check_high_girth() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for name, g in high_girth_inputs():
        phi, secs = _timed(find_hom, g, C7)
        good = phi is not None and is_homomorphism(g, C7, phi) and girth(g) >= 17 and secs < 60
        ok &= good
        details.append(f"{name}: v={g.v} girth={girth(g)} hom={'yes' if phi is not None else 'no'} {secs:.2f}s")
    return CheckResult(8, "planar high-girth graphs map to C7", ok, time.perf_counter() - t0, details)


def check_basic_density() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for name, g, t in critical_corpus():
        if g.max_degree() < 3:
            continue
        led = basic_density_discharge(g, t)
        good = led.branch_ok and led.degree_two_ok and led.bound_holds and led.conserved
        ok &= good
        details.append(f"{name}: min branch charge={min(led.final[v] for v in range(g.n) if g.degree(v) >= 3)}"
                       f" e={g.e} rhs={led.bound_rhs}")
    return CheckResult(9, "basic density discharge leaves branch vertices at >= 2", ok,
                       time.perf_counter() - t0, details)


CHECKS = (check_tight_examples, check_ore_pipeline, check_small_oracle, check_extension_sets,
          check_structure_lemmas, check_discharging, check_extension_identity, check_high_girth,
          check_basic_density)


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS]
