"""Batch census over graph6 snark lists and the single-graph analyzer."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .coloring import find_3_edge_coloring, is_snark
from .connectivity import cyclic_edge_connectivity_at_least
from .cycles import (
    cdc_from_ccd,
    cycle_from_vertices,
    find_ccd,
    is_dominating,
    is_stable,
    verify_cycle_set,
)
from .graph6 import parse_graph6
from .multigraph import CubicGraph, GraphError, Multigraph
from .ppm import (
    K5_MINOR_FREE_ONLY,
    NEITHER,
    PLANARIZING,
    PseudoMatching,
    classify_ppm,
    complement_cycles,
    contract,
    enumerate_ppms,
    validate_ppm,
    write_ppm,
)

_CLASS_RANK = {NEITHER: 0, K5_MINOR_FREE_ONLY: 1, PLANARIZING: 2}

TIMEOUT_ENV = "SNARKPPM_TIMEOUT_MS"


class CensusTimeout(Exception):
    pass


@dataclass
class CensusRow:
    n: int
    s: int = 0
    no_planarizing_pm: int = 0
    no_planarizing_ppm: int = 0
    no_k5_free_pm: int = 0
    no_k5_free_ppm: int = 0

    def check_invariants(self) -> None:
        ok = (
            self.no_planarizing_ppm <= self.no_planarizing_pm <= self.s
            and self.no_k5_free_ppm <= self.no_k5_free_pm <= self.s
            and self.no_k5_free_pm <= self.no_planarizing_pm
            and self.no_k5_free_ppm <= self.no_planarizing_ppm
        )
        if not ok:
            raise GraphError(f"census row violates its invariants: {self}")


@dataclass
class GraphVerdict:
    index: int
    graph6: str
    n: int
    is_snark: bool
    girth: int
    best_pm_class: str | None = None
    best_ppm_class: str | None = None
    witness: PseudoMatching | None = None
    undecided: bool = False


@dataclass
class CensusReport:
    rows: list[CensusRow]
    verdicts: list[GraphVerdict]
    non_snarks: list[int]  # indices of graphs that fail the snark test
    min_girth: int | None
    complete: bool

    def to_tsv(self) -> str:
        cols = [
            "n",
            "s",
            "no_planarizing_pm",
            "no_planarizing_ppm",
            "no_k5_free_pm",
            "no_k5_free_ppm",
        ]
        lines = ["\t".join(cols)]
        for row in self.rows:
            lines.append(
                "\t".join(
                    str(getattr(row, c)) for c in cols
                )
            )
        return "\n".join(lines) + "\n"


def _girth(g: Multigraph) -> int:
    best = g.n + 1
    for s in range(g.n):
        dist = {s: 0}
        parent_edge = {s: -1}
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for e in g.incident_edges(v):
                    w = g.other_end(e, v)
                    if w == v:
                        return 1
                    if e == parent_edge[v]:
                        continue
                    if w in dist:
                        best = min(best, dist[v] + dist[w] + 1)
                    else:
                        dist[w] = dist[v] + 1
                        parent_edge[w] = e
                        nxt.append(w)
            frontier = nxt
    return best


def _best_class(
    g: CubicGraph, perfect_matchings_only: bool, deadline: float | None
) -> str | None:
    """Best classification over the PPM stream, stopping at planarizing."""
    best: str | None = None
    for m in enumerate_ppms(g, perfect_matchings_only=perfect_matchings_only):
        if deadline is not None and time.monotonic() > deadline:
            raise CensusTimeout
        cls = classify_ppm(g, m)
        if best is None or _CLASS_RANK[cls] > _CLASS_RANK[best]:
            best = cls
        if best == PLANARIZING:
            break
    return best


def _best_witness(
    g: CubicGraph, target: str, perfect_matchings_only: bool
) -> PseudoMatching | None:
    for m in enumerate_ppms(g, perfect_matchings_only=perfect_matchings_only):
        if classify_ppm(g, m) == target:
            return m
    return None


def census_graph(index: int, line: str, mode: str) -> GraphVerdict:
    g6 = line.strip()
    mg = parse_graph6(g6)
    g = CubicGraph(mg, require_simple=True)
    verdict = GraphVerdict(index, g6, mg.n, False, _girth(mg))
    verdict.is_snark = is_snark(g)
    if not verdict.is_snark:
        return verdict

    timeout_ms = os.environ.get(TIMEOUT_ENV)
    deadline = (
        time.monotonic() + int(timeout_ms) / 1000.0 if timeout_ms else None
    )
    try:
        if mode in ("pm", "both"):
            verdict.best_pm_class = _best_class(g, True, deadline)
        if mode in ("ppm", "both"):
            if verdict.best_pm_class == PLANARIZING:
                verdict.best_ppm_class = PLANARIZING
            else:
                verdict.best_ppm_class = _best_class(g, False, deadline)
    except CensusTimeout:
        verdict.undecided = True
        return verdict
    target = verdict.best_ppm_class or verdict.best_pm_class
    if target is not None:
        verdict.witness = _best_witness(g, target, mode == "pm")
    return verdict


def run_census(text: str, mode: str = "both", workers: int = 1) -> CensusReport:
    lines = [
        (i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()
    ]
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            verdicts = pool.starmap(
                census_graph, [(i, ln, mode) for i, ln in lines]
            )
    else:
        verdicts = [census_graph(i, ln, mode) for i, ln in lines]

    rows: dict[int, CensusRow] = {}
    non_snarks = []
    complete = True
    for v in verdicts:
        if not v.is_snark:
            non_snarks.append(v.index)
            continue
        if v.undecided:
            complete = False
            continue
        row = rows.setdefault(v.n, CensusRow(v.n))
        row.s += 1
        if mode in ("pm", "both"):
            if v.best_pm_class != PLANARIZING:
                row.no_planarizing_pm += 1
            if v.best_pm_class == NEITHER or v.best_pm_class is None:
                row.no_k5_free_pm += 1
        if mode in ("ppm", "both"):
            if v.best_ppm_class != PLANARIZING:
                row.no_planarizing_ppm += 1
            if v.best_ppm_class == NEITHER or v.best_ppm_class is None:
                row.no_k5_free_ppm += 1
    ordered = [rows[n] for n in sorted(rows)]
    if mode == "both":
        for row in ordered:
            row.check_invariants()
    girths = [v.girth for v in verdicts] or [0]
    return CensusReport(
        ordered, verdicts, non_snarks, min(girths) if verdicts else None, complete
    )


def write_details(report: CensusReport, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    by_order: dict[int, list[GraphVerdict]] = {}
    for v in report.verdicts:
        if v.is_snark and not v.undecided:
            by_order.setdefault(v.n, []).append(v)
    for n, verdicts in sorted(by_order.items()):
        lines = []
        for v in verdicts:
            cls = v.best_ppm_class or v.best_pm_class or "unknown"
            lines.append(f"{v.graph6}\t{cls}")
            if v.witness is not None:
                path = os.path.join(directory, f"order{n}_graph{v.index}.ppm")
                with open(path, "w", encoding="ascii") as fh:
                    fh.write(write_ppm(parse_graph6(v.graph6), v.witness))
        with open(
            os.path.join(directory, f"order{n}.tsv"), "w", encoding="ascii"
        ) as fh:
            fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Single-graph analyzer
# ---------------------------------------------------------------------------


def analyze(g: CubicGraph, m: PseudoMatching | None = None) -> str:
    """Human-readable report: snark status, cyclic connectivity, and, with a
    pseudo-matching, its classification and the CCD/CDC pipeline results."""
    out = [f"vertices: {g.n}, edges: {g.m}"]
    snark = is_snark(g)
    out.append(f"snark: {'yes' if snark else 'no'}")
    level = 0
    for k in (4, 5, 6):
        if cyclic_edge_connectivity_at_least(g, k):
            level = k
        else:
            break
    out.append(f"cyclically {level}-edge-connected (checked up to 6)")
    colored = find_3_edge_coloring(g)
    out.append(f"3-edge-colorable: {'yes' if colored else 'no'}")
    if m is None:
        return "\n".join(out) + "\n"

    bad = validate_ppm(g, m)
    if bad is not None:
        out.append(f"pseudo-matching INVALID: {bad.message}")
        return "\n".join(out) + "\n"
    out.append(
        f"pseudo-matching: {len(m.components)} components,"
        f" {m.claw_count()} claws"
    )
    out.append(f"classification: {classify_ppm(g, m)}")
    cycles = complement_cycles(g, m)
    out.append(
        "complement cycles: "
        + ", ".join(f"length {len(c)}" for c in cycles)
    )
    for cv in cycles:
        cyc = cycle_from_vertices(g.graph, cv)
        dom = is_dominating(g, set(cv))
        if dom:
            out.append(
                f"  cycle of length {len(cv)} is dominating;"
                f" stable: {'yes' if is_stable(g, cyc) else 'no'}"
            )
    cg = contract(g, m)
    out.append(
        f"quotient: {cg.graph.n} vertices, {cg.graph.m} edges,"
        f" degrees {sorted(set(cg.graph.degrees()))}"
    )
    ccd = find_ccd(cg)
    if ccd is None:
        out.append("CCD: none")
    else:
        out.append(f"CCD found ({len(ccd.cycles)} cycles)")
        cdc = cdc_from_ccd(g, m, ccd)
        check = verify_cycle_set(g.graph, cdc)
        status = "verified" if check is None else f"BROKEN: {check.message}"
        out.append(f"CDC {status} ({len(cdc.cycles)} cycles)")
    return "\n".join(out) + "\n"
