"""Five-rule discharging for C7-critical graphs, run as an auditable ledger.

Structures are vertices (labelled ``v<id>``) and 7-cycles (``C<index>``).
All arithmetic is exact. Where a rule is ambiguous on a concrete graph the
ledger resolves it conservatively and raises a flag:

* a vertex in several cells splits its charge equally among them in R1;
* several eligible senders toward one poor vertex split its deficit equally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph
from .potential import basic_density_value, potential
from .structure import StructureError, decompose, find_cells, is_short, vertex_profile

FLAG_CELLS_DISJOINT = "cells-pairwise-disjoint"
FLAG_SINGLE_SENDER = "single-sender-per-recipient"
FLAG_FRESH_RECIPIENTS = "recipients-fresh"

PASSED = "passed"
FAILED = "FAILED"


def _vkey(v: int) -> str:
    return f"v{v}"


def _ckey(i: int) -> str:
    return f"C{i}"


def charge_formula(degree: int, weight: int) -> int:
    return 15 * degree - 2 * weight - 34


@dataclass
class Transfer:
    stage: int
    sender: str
    receiver: str
    amount: Fraction

    def to_dict(self) -> dict:
        return {"stage": self.stage, "sender": self.sender, "receiver": self.receiver, "amount": str(self.amount)}


@dataclass
class ChargeLedger:
    stages: list                      # stage -> {structure: Fraction}
    cells: dict                       # "C<i>" -> vertex tuple
    transfers: list = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def totals(self) -> list[Fraction]:
        return [sum(s.values(), Fraction(0)) for s in self.stages]

    def conserved(self) -> bool:
        return len(set(self.totals())) == 1

    def final(self) -> dict:
        return self.stages[-1]

    def negatives(self) -> list[str]:
        return sorted((k for k, c in self.final().items() if c < 0), key=_sort_key)

    def to_dict(self) -> dict:
        return {
            "stages": [{k: str(v) for k, v in sorted(s.items(), key=lambda kv: _sort_key(kv[0]))}
                       for s in self.stages],
            "totals": [str(x) for x in self.totals()],
            "conserved": self.conserved(),
            "cells": {k: list(v) for k, v in self.cells.items()},
            "transfers": [t.to_dict() for t in self.transfers],
            "flags": dict(self.flags),
            "negative_structures": self.negatives(),
            "notes": list(self.notes),
        }


def _sort_key(k: str):
    return (k[0] != "v", int(k[1:]))


def initial_charges(g: Graph) -> ChargeLedger:
    """Stage 0: 15deg - 2wt - 34 on degree >= 3 vertices, 0 elsewhere."""
    dec = decompose(g)
    if not dec.branch_vertices:
        raise StructureError("no vertex of degree >= 3: weights and charges undefined")
    closed = [s for s in dec.strings if s.closed]
    if closed:
        raise StructureError(f"closed string at vertex {closed[0].a}: weight undefined")
    stage = {}
    for v in range(g.n):
        if g.degree(v) >= 3:
            p = vertex_profile(g, v, dec)
            stage[_vkey(v)] = Fraction(charge_formula(p.degree, p.weight))
        else:
            stage[_vkey(v)] = Fraction(0)
    cells = {_ckey(i): c.vertices for i, c in enumerate(find_cells(g, 3, dec))}
    for k in cells:
        stage[k] = Fraction(0)
    return ChargeLedger([stage], cells)


def run_discharging(g: Graph, t: int = 3) -> ChargeLedger:
    if t != 3:
        raise ValueError("the discharging rules are defined for C7 (t = 3) only")
    ledger = initial_charges(g)
    dec = decompose(g)
    wt = {v: vertex_profile(g, v, dec).weight for v in dec.branch_vertices}
    short_nb = {v: set() for v in dec.branch_vertices}
    for s in dec.strings:
        if is_short(s.k):
            short_nb[s.a].add(s.b)
            short_nb[s.b].add(s.a)
    cells_of = {}
    for key, vs in ledger.cells.items():
        for x in vs:
            cells_of.setdefault(x, []).append(key)
    ledger.flags[FLAG_CELLS_DISJOINT] = PASSED if all(len(c) == 1 for c in cells_of.values()) else FAILED
    ledger.flags[FLAG_SINGLE_SENDER] = PASSED
    ledger.flags[FLAG_FRESH_RECIPIENTS] = PASSED
    received = set()

    def apply(stage_no, sends):
        cur = dict(ledger.stages[-1])
        for sender, receiver, amount in sends:
            if amount == 0:
                continue
            cur[sender] -= amount
            cur[receiver] += amount
            ledger.transfers.append(Transfer(stage_no, sender, receiver, amount))
        ledger.stages.append(cur)
        received.update(r for _, r, a in sends if a != 0)

    # R1: cell vertices hand everything to their cell(s)
    ch = ledger.stages[-1]
    sends = []
    for x, cs in sorted(cells_of.items()):
        share = ch[_vkey(x)] / len(cs)
        sends += [(_vkey(x), c, share) for c in cs]
    apply(1, sends)

    def poor_targets(senders_for):
        """Split each poor, fresh vertex's deficit among its eligible senders."""
        ch = ledger.stages[-1]
        sends = []
        for v in dec.branch_vertices:
            key = _vkey(v)
            if ch[key] >= 0:
                continue
            senders = sorted(set(senders_for(v)), key=_sort_key)
            if not senders:
                continue
            if key in received:
                ledger.flags[FLAG_FRESH_RECIPIENTS] = FAILED
                continue
            if len(senders) > 1:
                ledger.flags[FLAG_SINGLE_SENDER] = FAILED
            share = -ch[key] / len(senders)
            sends += [(s, key, share) for s in senders]
        return sends

    # R2: a cell through a short-string partner pays
    apply(2, poor_targets(lambda v: [c for u in short_nb[v] for c in cells_of.get(u, [])]))
    # R3: partners of degree >= 4 pay
    apply(3, poor_targets(lambda v: [_vkey(u) for u in short_nb[v] if g.degree(u) >= 4]))
    # R4: degree-3 partners of weight <= 4 pay
    apply(4, poor_targets(lambda v: [_vkey(u) for u in short_nb[v] if g.degree(u) == 3 and wt[u] <= 4]))
    # R5: degree-3 weight-5 partners pay if v is their only poor short-string partner
    ch4 = ledger.stages[-1]

    def r5(v):
        out = []
        for u in short_nb[v]:
            if g.degree(u) == 3 and wt[u] == 5:
                poor = [x for x in short_nb[u] if ch4[_vkey(x)] < 0]
                if poor == [v]:
                    out.append(_vkey(u))
        return out

    apply(5, poor_targets(r5))
    return ledger


def check_ledger(g: Graph, ledger: ChargeLedger) -> list[str]:
    """Invariant violations (empty when the ledger is sound)."""
    problems = []
    totals = ledger.totals()
    if not ledger.conserved():
        problems.append(f"stage totals differ: {[str(x) for x in totals]}")
    want = 30 * g.e - 34 * g.v
    if totals[0] != want:
        problems.append(f"stage-0 total {totals[0]} != 30e - 34v = {want}")
    if totals[0] != -2 * potential(g):
        problems.append("stage-0 total != -2 * potential")
    return problems


# ------------------------------------------------------- basic density rule

@dataclass
class BasicDensityLedger:
    t: int
    initial: dict
    final: dict
    degrees: dict
    bound_rhs: Fraction
    e: int

    @property
    def branch_ok(self) -> bool:
        return all(self.final[v] >= 2 for v, d in self.degrees.items() if d >= 3)

    @property
    def degree_two_ok(self) -> bool:
        return all(self.final[v] == 0 for v, d in self.degrees.items() if d == 2)

    @property
    def bound_holds(self) -> bool:
        return self.e >= self.bound_rhs

    @property
    def conserved(self) -> bool:
        return sum(self.initial.values()) == sum(self.final.values())

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "initial": {str(k): str(v) for k, v in sorted(self.initial.items())},
            "final": {str(k): str(v) for k, v in sorted(self.final.items())},
            "branch_vertices_at_least_2": self.branch_ok,
            "degree_two_vertices_zero": self.degree_two_ok,
            "conserved": self.conserved,
            "bound_rhs": str(self.bound_rhs),
            "bound_holds": self.bound_holds,
        }


def basic_density_discharge(g: Graph, t: int) -> BasicDensityLedger:
    """Charge 4t*deg - 8t - 2; each degree-2 vertex sends -1 to both ends of its string."""
    if t < 1:
        raise ValueError("t must be positive")
    if g.max_degree() < 3:
        raise StructureError("basic-density discharge needs a vertex of degree >= 3")
    dec = decompose(g)
    init = {v: Fraction(4 * t * g.degree(v) - 8 * t - 2) for v in range(g.n)}
    fin = dict(init)
    for s in dec.strings:
        for x in s.interior:
            fin[x] += 2          # sends -1 twice
            fin[s.a] -= 1
            fin[s.b] -= 1
    return BasicDensityLedger(t, init, fin, {v: g.degree(v) for v in range(g.n)},
                              basic_density_value(g.v, t), g.e)
