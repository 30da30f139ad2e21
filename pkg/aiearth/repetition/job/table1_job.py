"""Reproduction of the repetition-threshold summary table.

Every cell gathers lower and upper evidence from finite runs. The classes are
infinite, so a cell can at best be reproduced at desk scale: constructions are
checked on finite truncations, lower bounds come from exhaustive searches on
finite gadgets.
"""
import sys
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, List, Optional

from prettytable import PrettyTable
from tqdm import tqdm

from .. import __version__
from ..constructions import (
    BLOCK_LENGTH,
    FINITE_CHECK_LENGTH,
    TreeColoringParams,
    color_cp2,
    color_cp3,
    color_cp3_5letters,
    color_cp3_odd_k,
    color_cp3_ternary,
    color_tree3,
    cp3_threshold,
    father_rule_violations,
    tree_color_count,
)
from ..exception import RepetitionException
from ..graphs import Ball, CaterpillarSpec, check_colored, pigeonhole_certificate
from ..search import Colorable, SearchProblem, Unavoidable, find_coloring, get_family, prove_unavoidable, rt_bracket
from ..search.families import parse_pattern
from ..utils import fix_random_seeds, get_logger, load_profile
from ..words import FreenessSpec, RationalExponent, Word, dejean_word, repetition_threshold, violates

logger = get_logger("job.table1")

DESK_SCALE = "desk-scale evidence"

REPRODUCED = "reproduced"
EVIDENCE_ONLY = "evidence-only"
OUT_OF_SCOPE = "out-of-scope"
INCOMPLETE = "incomplete"

# columns of the table; LARGE_K stands for every k >= 6
SMALL_K = (2, 3, 4, 5)
LARGE_K = 6


def _label(k):
    return "k>=6" if k >= LARGE_K else str(k)


@dataclass
class EvidenceStep:
    direction: str
    command: str
    run: Callable[[], dict]


@dataclass
class Table1Cell:
    row: str
    k: str
    claimed: str
    plan: List[EvidenceStep] = field(default_factory=list)
    status: str = REPRODUCED
    note: Optional[str] = None
    evidence: List[dict] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def certified(self):
        return bool(self.evidence) and all(e.get("certified") for e in self.evidence)

    def to_dict(self):
        return {
            "row": self.row,
            "k": self.k,
            "claimed": self.claimed,
            "status": self.status,
            "note": self.note,
            "plan": [s.command for s in self.plan],
            "evidence": self.evidence,
            "errors": self.errors,
            "seconds": round(self.seconds, 3),
        }


def _spec(text):
    return FreenessSpec.parse(text)


def upper_construction(name, build, spec, max_factor_length=None):
    g = build()
    witness = check_colored(g, _spec(spec), max_factor_length)
    return {
        "direction": "upper",
        "kind": "construction",
        "construction": name,
        "spec": spec,
        "vertex_count": g.vertex_count,
        "colors": g.k,
        "max_factor_length": max_factor_length,
        "certified": witness is None,
        "witness": None if witness is None else witness.to_dict(),
    }


def upper_cp35(blocks, node_budget=None):
    """Bounded check at the finite-check length plus a full check of the backbone word."""
    g = color_cp3_5letters(blocks, node_budget=node_budget)
    spec = _spec("4/3+")
    witness = check_colored(g, spec, FINITE_CHECK_LENGTH)
    n = blocks * BLOCK_LENGTH
    backbone = Word(g.colors[:n], 5)
    backbone_witness = violates(backbone, spec)
    return {
        "direction": "upper",
        "kind": "construction",
        "construction": "cp35 blocks=%d" % blocks,
        "spec": "4/3+",
        "vertex_count": g.vertex_count,
        "colors": 5,
        "max_factor_length": FINITE_CHECK_LENGTH,
        "backbone_free": backbone_witness is None,
        "certified": witness is None and backbone_witness is None,
        "witness": None if witness is None else witness.to_dict(),
    }


def upper_tree3(t, depth, bounded_length, full_depth, node_budget=None):
    spec = FreenessSpec(RationalExponent(t + 1, t), strict=True)
    large = color_tree3(TreeColoringParams(t, depth), node_budget=node_budget)
    bounded = check_colored(large, spec, bounded_length)
    small = color_tree3(TreeColoringParams(t, full_depth), node_budget=node_budget)
    full = check_colored(small, spec)
    bad_edges = father_rule_violations(small)
    return {
        "direction": "upper",
        "kind": "construction",
        "construction": "tree3 t=%d" % t,
        "spec": str(spec),
        "colors": large.k,
        "depth": depth,
        "max_factor_length": bounded_length,
        "full_depth": full_depth,
        "father_rule_holds": not bad_edges,
        "certified": bounded is None and full is None and not bad_edges,
        "witness": None if bounded is None else bounded.to_dict(),
        "full_witness": None if full is None else full.to_dict(),
    }


def upper_search(family, n, k, spec, budget=None, seed=None, **params):
    problem = SearchProblem(get_family(family).build(n, **params), k, _spec(spec), node_budget=budget)
    outcome = find_coloring(problem, seed=seed)
    ret = {"direction": "upper", "kind": "search", "family": family, "n": n, "k": k, "spec": spec}
    ret.update(outcome.to_dict())
    ret.pop("graph", None)
    ret["certified"] = isinstance(outcome, Colorable)
    return ret


def lower_bracket(family, k, spec, n_start, n_max, budget=None, threads=1, confirm_next=False, **params):
    evidence = rt_bracket(family, k, _spec(spec), n_start, n_max, budget, threads=threads,
                          confirm_next=confirm_next, **params)
    ret = {"direction": "lower", "kind": "bracket"}
    ret.update(evidence.to_dict())
    ret["spec"] = spec
    return ret


def lower_instance(structure, k, spec, budget=None, threads=1):
    problem = SearchProblem(structure, k, _spec(spec), node_budget=budget)
    outcome = prove_unavoidable(problem, threads)
    ret = {"direction": "lower", "kind": "instance", "spec": spec}
    ret.update(problem.describe())
    ret.update(outcome.to_dict())
    ret.pop("graph", None)
    ret["certified"] = isinstance(outcome, Unavoidable)
    return ret


def lower_pigeonhole(degree, t):
    cert = pigeonhole_certificate(degree, t)
    ret = {"direction": "lower", "kind": "pigeonhole"}
    ret.update(cert)
    ret["certified"] = cert["holds"]
    return ret


def path_word(k, length, budget=None):
    word = dejean_word(k, length, node_budget=budget)
    spec = FreenessSpec(repetition_threshold(k), strict=True)
    witness = violates(word, spec)
    return {
        "direction": "upper",
        "kind": "word",
        "k": k,
        "length": len(word),
        "spec": str(spec),
        "certified": witness is None,
    }


class Table1Job:
    """Builds the cells from a budget profile and runs them one by one.

    Steps with the same command are run once and shared between cells.
    """

    def __init__(self, profile=None, threads=None, budget=None, seed=None, invocation=None) -> None:
        self.cfg = load_profile(profile)
        if threads is not None:
            self.cfg.threads = threads
        if budget is not None:
            self.cfg.search.node_budget = budget
        if seed is not None:
            self.cfg.seed = seed
        self.invocation = invocation if invocation is not None else " ".join(sys.argv)
        self.cells = []
        self._cache = {}
        self.setup_flag = False

    def setup(self):
        if self.setup_flag:
            return self.cells
        fix_random_seeds(self.cfg.seed)
        self.cells = self.set_cells()
        self.setup_flag = True
        return self.cells

    def set_cells(self):
        cfg = self.cfg
        t1 = cfg.table1
        budget = cfg.search.node_budget
        wbudget = cfg.word.node_budget
        threads = cfg.threads
        confirm = cfg.search.confirm_next
        cells = []

        def bracket(family, k, spec, n_start, n_max, **params):
            extra = "".join(" --param %s=%s" % kv for kv in params.items())
            return EvidenceStep(
                "lower",
                "aie-rt search unavoidable --family %s --k %d --exp %s --n-start %d --n %d --budget %d%s"
                % (family, k, spec, n_start, n_max, budget, extra),
                partial(lower_bracket, family, k, spec, n_start, n_max, budget, threads, confirm, **params),
            )

        def exists(family, n, k, spec, **params):
            extra = "".join(" --param %s=%s" % kv for kv in params.items())
            return EvidenceStep(
                "upper",
                "aie-rt search exists --family %s --k %d --exp %s --n %d --budget %d%s"
                % (family, k, spec, n, budget, extra),
                partial(upper_search, family, n, k, spec, budget, None, **params),
            )

        # P: Dejean words, evidence only
        for k in SMALL_K + (LARGE_K,):
            rt = repetition_threshold(k)
            step = EvidenceStep(
                "upper",
                "aie-rt word gen --k %d --len %d --exp %s+ --budget %d" % (k, t1.path.length, rt, wbudget),
                partial(path_word, k, t1.path.length, wbudget),
            )
            note = "words, prior result" if k < LARGE_K else "words, prior result, checked at k=%d" % k
            cells.append(Table1Cell("P", _label(k), "k/(k-1)" if k >= LARGE_K else str(rt), [step],
                                    EVIDENCE_ONLY, note))

        for row, values in (
            ("C", ["5/2", "2", "?", "?", "1+1/ceil(k/2)"]),
            ("S", ["7/3", "7/4", "3/2", "3/2", "3/2"]),
            ("T", ["7/2", "3", "3/2", "3/2", "3/2"]),
        ):
            for k, value in zip(SMALL_K + (LARGE_K,), values):
                cells.append(Table1Cell(row, _label(k), value, [], OUT_OF_SCOPE, "prior result"))

        # CP3
        c = t1.cp3
        n = c.upper_length
        cells.append(Table1Cell("CP3", "2", "3", [
            bracket("cp3-full", 2, "3/1", 1, c.k2_lower_max),
            EvidenceStep("upper", "aie-rt color cp2 --n %d | aie-rt check --exp 3/1+" % n,
                         partial(upper_construction, "cp2 n=%d" % n, partial(color_cp2, n), "3/1+")),
        ]))
        cells.append(Table1Cell("CP3", "3", "2", [
            bracket("cp3-full", 3, "2/1", 1, c.k3_lower_max),
            EvidenceStep("upper", "aie-rt color cp3 --n %d | aie-rt check --exp 2/1+" % n,
                         partial(upper_construction, "cp3 ternary n=%d" % n, partial(color_cp3_ternary, n), "2/1+")),
        ]))
        cells.append(Table1Cell("CP3", "4", "3/2", [
            bracket("cp3-full", 4, "3/2", c.k4_lower[0], c.k4_lower[1]),
            exists("cp3-full", c.k4_upper_length, 4, "3/2+"),
        ], note="upper by search on a finite caterpillar"))
        cells.append(Table1Cell("CP3", "5", "4/3", [
            bracket("cp3-full", 5, "4/3", 1, c.k5_lower_max),
            EvidenceStep("upper", "aie-rt color cp35 --blocks %d | aie-rt check --exp 4/3+ --max-len %d"
                         % (c.k5_blocks, FINITE_CHECK_LENGTH),
                         partial(upper_cp35, c.k5_blocks, wbudget)),
        ]))
        # one cell for every k >= 6: both parities on the lower side, k=6 and the odd sizes on the upper side
        six_blocks = c.k5_blocks * BLOCK_LENGTH
        steps = [
            bracket("cp3-full", 6, str(cp3_threshold(6)), 1, c.k6_lower_max),
            bracket("cp3-full", 7, str(cp3_threshold(7)), 1, c.k7_lower_max),
            EvidenceStep("upper", "aie-rt color cpk --k 6 --n %d | aie-rt check --exp 4/3+ --max-len %d"
                         % (six_blocks, FINITE_CHECK_LENGTH),
                         partial(upper_construction, "cp3 k=6 n=%d" % six_blocks,
                                 partial(color_cp3, 6, six_blocks, wbudget), "4/3+", FINITE_CHECK_LENGTH)),
        ]
        for k in c.odd_k:
            spec = "%s+" % cp3_threshold(k)
            steps.append(EvidenceStep("upper", "aie-rt color cpk --k %d --n %d | aie-rt check --exp %s"
                                      % (k, c.odd_k_length, spec),
                                      partial(upper_construction, "cpk k=%d n=%d" % (k, c.odd_k_length),
                                              partial(color_cp3_odd_k, k, c.odd_k_length, wbudget), spec)))
        sampled = ", ".join(str(k) for k in sorted({6, 7} | set(c.odd_k)))
        cells.append(Table1Cell("CP3", _label(LARGE_K), "1+1/ceil(k/2)", steps,
                                note="checked at k=%s" % sampled))

        # T3
        t = t1.t3
        cells.append(Table1Cell("T3", "2", "?", [], OUT_OF_SCOPE, "open"))
        cells.append(Table1Cell("T3", "3", "?", [], OUT_OF_SCOPE, "open"))
        cells.append(Table1Cell("T3", "4", "3/2", [
            bracket("cp3-full", 4, "3/2", c.k4_lower[0], c.k4_lower[1]),
            exists("cubic-ball", t.ball_upper_radius, 4, "3/2+"),
        ], EVIDENCE_ONLY, "upper on all trees is a prior construction; a ball is colored here"))
        cells.append(Table1Cell("T3", "5", "3/2", [
            bracket("cubic-ball", 5, "3/2", 1, t.ball_radius_max),
            exists("cubic-ball", t.ball_upper_radius, 5, "3/2+"),
        ], EVIDENCE_ONLY, "upper on all trees is a prior construction; a ball is colored here"))
        k_tree = tree_color_count(t.tree_t)
        steps = [
            EvidenceStep("upper", "aie-rt color tree3 --t %d --depth %d | aie-rt check --exp %s --max-len %d"
                         % (t.tree_t, t.tree_depth, "%d/%d+" % (t.tree_t + 1, t.tree_t), t.tree_bounded_length),
                         partial(upper_tree3, t.tree_t, t.tree_depth, t.tree_bounded_length,
                                 t.tree_full_depth, wbudget)),
        ]
        for degree, tt in t.pigeonhole:
            steps.append(EvidenceStep("lower", "pigeonhole --degree %d --t %d" % (degree, tt),
                                      partial(lower_pigeonhole, degree, tt)))
        steps.append(EvidenceStep("lower", "aie-rt search unavoidable --family cubic-ball --k 9 --exp 5/4 --n 2",
                                  partial(lower_instance, Ball(3, 2), 9, "5/4", budget, threads)))
        cells.append(Table1Cell("T3", _label(LARGE_K), "1+1/(2 log k)+o(1/log k)", steps, EVIDENCE_ONLY,
                                "asymptotic claim, checked at t=%d with %d colors" % (t.tree_t, k_tree)))

        # CP
        p = t1.cp
        pattern = parse_pattern(p.pendant_pattern)
        counts = CaterpillarSpec.cyclic(p.upper_length, pattern).pendant_counts
        cells.append(Table1Cell("CP", "2", "3", [
            bracket("cp3-full", 2, "3/1", 1, c.k2_lower_max),
            EvidenceStep("upper", "aie-rt color cp2 --n %d --pendants %s | aie-rt check --exp 3/1+"
                         % (p.upper_length, p.pendant_pattern),
                         partial(upper_construction, "cp2 pendants=%s" % p.pendant_pattern,
                                 partial(color_cp2, p.upper_length, counts), "3/1+")),
        ]))
        cells.append(Table1Cell("CP", "3", "2", [
            bracket("cp3-full", 3, "2/1", 1, c.k3_lower_max),
            EvidenceStep("upper", "aie-rt color cp3 --n %d --pendants %s | aie-rt check --exp 2/1+"
                         % (p.upper_length, p.pendant_pattern),
                         partial(upper_construction, "cp3 ternary pendants=%s" % p.pendant_pattern,
                                 partial(color_cp3_ternary, p.upper_length, counts), "2/1+")),
        ]))
        for k in (4, 5, LARGE_K):
            note = "upper by search on a finite caterpillar"
            if k == LARGE_K:
                note += ", checked at k=%d" % k
            cells.append(Table1Cell("CP", _label(k), "3/2", [
                bracket("star", k, "3/2", 1, max(p.star_leaves_max, k)),
                exists("cp-spec", p.search_length, k, "3/2+", pattern=p.pendant_pattern),
            ], note=note))
        return cells

    def run_step(self, step: EvidenceStep):
        if step.command not in self._cache:
            self._cache[step.command] = step.run()
        return dict(self._cache[step.command], command=step.command)

    def run_cell(self, cell: Table1Cell):
        started = time.time()
        for step in cell.plan:
            try:
                cell.evidence.append(self.run_step(step))
            except (RepetitionException, ValueError) as e:
                logger.warning("%s k=%s: %s failed: %s", cell.row, cell.k, step.command, e)
                cell.errors.append("%s: %s" % (step.command, e))
        cell.seconds = time.time() - started
        if cell.status == REPRODUCED and (cell.errors or not cell.certified):
            cell.status = INCOMPLETE
        if cell.status != OUT_OF_SCOPE:
            cell.note = DESK_SCALE if cell.note is None else "%s; %s" % (DESK_SCALE, cell.note)
        return cell

    def run(self, progress=True):
        cells = self.setup()
        todo = [c for c in cells if c.plan]
        for cell in tqdm(todo, desc="table1", disable=not progress):
            self.run_cell(cell)
        return self.report()

    def report(self):
        return {
            "tool": "aiearth-repetition",
            "version": __version__,
            "profile": self.cfg.profile,
            "invocation": self.invocation,
            "seed": self.cfg.seed,
            "threads": self.cfg.threads,
            "budgets": {
                "search.node_budget": self.cfg.search.node_budget,
                "word.node_budget": self.cfg.word.node_budget,
            },
            "cells": [c.to_dict() for c in self.cells],
        }


def render_table(report):
    table = PrettyTable()
    cells = report["cells"]
    table.add_column("class", [c["row"] for c in cells])
    table.add_column("k", [c["k"] for c in cells])
    table.add_column("claimed", [c["claimed"] for c in cells])
    table.add_column("status", [c["status"] for c in cells])
    table.add_column("lower", [_summary(c, "lower") for c in cells])
    table.add_column("upper", [_summary(c, "upper") for c in cells])
    table.add_column("note", [c["note"] or "" for c in cells])
    table.align = "l"
    return table.get_string()


def _summary(cell, direction):
    parts = []
    for e in cell["evidence"]:
        if e["direction"] != direction:
            continue
        if e["kind"] == "bracket":
            parts.append("%s at n=%s" % (e["outcome"], e["n"]) if e["outcome"] else "-")
        elif e["kind"] == "instance":
            parts.append(e["verdict"])
        elif e["kind"] == "search":
            parts.append(e["verdict"])
        else:
            parts.append("ok" if e["certified"] else "FAILED")
    if cell["errors"] and not parts:
        return "error"
    return ", ".join(parts)


def run_table1(profile=None, **kwargs):
    job = Table1Job(profile, **kwargs)
    return job.run()
