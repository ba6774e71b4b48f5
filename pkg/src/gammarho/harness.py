"""Scan driver: evaluate named bound predicates over graph corpora, in
parallel when asked, with machine-checkable counterexample dumps.

Predicates are either theorems (a failure means an implementation bug or a
bad input, exit code 3 downstream) or conjectures (a failure is a genuine
counterexample, exit code 2, and the offending graph is dumped with both
optimal witnesses so the violation can be replayed from the dump alone).

Graphs travel between processes as graph6 strings; records come back in
submission order, so a scan's report is byte-identical for a fixed corpus
no matter how many workers ran it.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .biconvex import (
    ConvexOrdering,
    check_biconvex_bound,
    validate_convex,
)
from .bicubic import check_bicubic_bounds, validate_bicubic
from .formats import decode_graph6, encode_graph6
from .generators import (
    enumerate_bicubic,
    gen_cycle,
    gen_random_biconvex,
    gen_random_bicubic,
    gen_random_connected,
    gen_random_mop,
    gen_random_tree,
    gen_rook,
    gen_sun,
    gen_tight_family,
    generalized_petersen,
    heawood,
    petersen,
)
from .graphs import Graph
from .outerplanar import (
    build_clique_graph,
    check_mop_bounds,
    lift_packing,
    build_dual,
    low_degree_count,
    recognize_mop,
    tokunaga_color,
    verify_tokunaga,
)
from .reports import ScanRecord, bound_str
from .solvers import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    domination_number,
    packing_number,
)


@dataclass(frozen=True)
class ScanItem:
    """One graph queued for scanning; the graph itself is carried as
    graph6 so items pickle cheaply."""

    graph_id: str
    family: str
    graph6: str
    ordering: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def make_item(graph_id: str, family: str, g: Graph,
              ordering: ConvexOrdering | None = None) -> ScanItem:
    packed = (ordering.x_order, ordering.y_order) if ordering else None
    return ScanItem(graph_id, family, encode_graph6(g), packed)


@dataclass(frozen=True)
class GraphFacts:
    graph_id: str
    family: str
    graph: Graph
    ordering: ConvexOrdering | None
    families: frozenset[str]
    gamma: int
    rho: int
    budget: int

    @property
    def delta(self) -> int:
        return self.graph.max_degree()


def detect_families(g: Graph, ordering: ConvexOrdering | None) -> frozenset[str]:
    fams = {"any"}
    if g.is_tree():
        fams.add("tree")
    try:
        validate_bicubic(g)
        fams.add("bicubic")
    except ValueError:
        pass
    try:
        recognize_mop(g)
        fams.add("mop")
    except ValueError:
        pass
    if ordering is not None:
        try:
            validate_convex(g, ordering)
            if g.is_connected():
                fams.add("biconvex")
        except ValueError:
            pass
    return frozenset(fams)


@dataclass(frozen=True)
class Predicate:
    name: str
    kind: str  # "theorem" | "conjecture"
    applies: Callable[[GraphFacts], bool]
    evaluate: Callable[[GraphFacts], tuple[bool, str, dict]]


def _p_rho_le_gamma(f: GraphFacts):
    return f.rho <= f.gamma, bound_str(f.gamma), {}


def _p_gamma_le_delta_rho(f: GraphFacts):
    return f.gamma <= f.delta * f.rho, bound_str(f.delta * f.rho), {}


def _p_tree_eq(f: GraphFacts):
    return f.gamma == f.rho, bound_str(f.rho), {}


def _p_eq(f: GraphFacts):
    return f.gamma == f.rho, bound_str(f.rho), {}


def _p_subcubic(f: GraphFacts):
    return f.gamma <= 2 * f.rho + 1, bound_str(2 * f.rho + 1), {}


def _p_delta_minus_one(f: GraphFacts):
    cap = (f.delta - 1) * f.rho + 1
    return f.gamma <= cap, bound_str(cap), {}


def _p_delta_relaxed(f: GraphFacts):
    cap = max((f.delta - 1) * f.rho, f.delta * (f.rho - 1)) + 1
    return f.gamma <= cap, bound_str(cap), {}


def _p_bicubic_gamma(f: GraphFacts):
    n = f.graph.n
    return 14 * f.gamma <= 5 * n, bound_str(Fraction(5 * n, 14)), {}


def _p_bicubic_rho(f: GraphFacts):
    n = f.graph.n
    return 48 * f.rho >= 7 * n, bound_str(Fraction(7 * n, 48)), {}


def _p_bicubic_ratio(f: GraphFacts):
    return 49 * f.gamma <= 120 * f.rho, bound_str(Fraction(120 * f.rho, 49)), {}


def _p_mop_3rho(f: GraphFacts):
    return f.gamma <= 3 * f.rho, bound_str(3 * f.rho), {}


def _p_mop_9rho_t(f: GraphFacts):
    t = low_degree_count(f.graph)
    cap4 = 9 * f.rho + t
    return 4 * f.gamma <= cap4, bound_str(Fraction(cap4, 4)), {"t": t}


def _p_mop_clique(f: GraphFacts):
    cg = build_clique_graph(recognize_mop(f.graph))
    cg_g = domination_number(cg, f.budget).value
    cg_r = packing_number(cg, f.budget).value
    return cg_g == cg_r, bound_str(cg_r), {"cg_gamma": cg_g, "cg_rho": cg_r}


def _p_mop_2rho(f: GraphFacts):
    return f.gamma <= 2 * f.rho, bound_str(2 * f.rho), {}


def _p_biconvex_2rho(f: GraphFacts):
    return f.gamma <= 2 * f.rho, bound_str(2 * f.rho), {}


PREDICATES: dict[str, Predicate] = {
    p.name: p
    for p in [
        Predicate("rho-le-gamma", "theorem", lambda f: True, _p_rho_le_gamma),
        Predicate("gamma-le-delta-rho", "theorem",
                  lambda f: f.graph.n >= 2, _p_gamma_le_delta_rho),
        Predicate("tree-gamma-eq-rho", "theorem",
                  lambda f: "tree" in f.families, _p_tree_eq),
        Predicate("gamma-eq-rho", "conjecture", lambda f: True, _p_eq),
        Predicate("subcubic-gamma-le-2rho-plus-1", "conjecture",
                  lambda f: f.delta <= 3, _p_subcubic),
        Predicate("gamma-le-delta-minus-1-rho-plus-1", "conjecture",
                  lambda f: f.graph.n >= 2, _p_delta_minus_one),
        Predicate("gamma-le-relaxed-delta", "conjecture",
                  lambda f: f.graph.n >= 2, _p_delta_relaxed),
        Predicate("bicubic-gamma-le-5n-14", "theorem",
                  lambda f: "bicubic" in f.families and f.graph.n >= 9,
                  _p_bicubic_gamma),
        Predicate("bicubic-rho-ge-7n-48", "theorem",
                  lambda f: "bicubic" in f.families and f.graph.n >= 16,
                  _p_bicubic_rho),
        Predicate("bicubic-49gamma-le-120rho", "theorem",
                  lambda f: "bicubic" in f.families, _p_bicubic_ratio),
        Predicate("mop-gamma-le-3rho", "theorem",
                  lambda f: "mop" in f.families, _p_mop_3rho),
        Predicate("mop-4gamma-le-9rho-plus-t", "theorem",
                  lambda f: "mop" in f.families, _p_mop_9rho_t),
        Predicate("mop-clique-gamma-eq-rho", "theorem",
                  lambda f: "mop" in f.families, _p_mop_clique),
        Predicate("mop-gamma-le-2rho", "conjecture",
                  lambda f: "mop" in f.families, _p_mop_2rho),
        Predicate("biconvex-gamma-le-2rho", "theorem",
                  lambda f: "biconvex" in f.families, _p_biconvex_2rho),
    ]
}

# gamma-eq-rho is false in general; it exists to exercise the
# counterexample path on demand, so scans do not run it by default
DEFAULT_PREDICATES = tuple(
    name for name in sorted(PREDICATES) if name != "gamma-eq-rho"
)


def _item_ordering(item: ScanItem) -> ConvexOrdering | None:
    if item.ordering is None:
        return None
    return ConvexOrdering(tuple(item.ordering[0]), tuple(item.ordering[1]))


def _inconclusive(item: ScanItem, g: Graph, names: Sequence[str],
                  exc: BudgetExceeded) -> list[ScanRecord]:
    detail = {"reason": "node budget exhausted", "quantity": exc.quantity,
              "range": [exc.lower, exc.upper]}
    return [
        ScanRecord(graph_id=item.graph_id, family=item.family, n=g.n,
                   check=name, kind=PREDICATES[name].kind, holds=None,
                   details=detail)
        for name in names
    ]


def _predicate_worker(
    args: tuple[ScanItem, tuple[str, ...], int],
) -> tuple[list[ScanRecord], list[dict]]:
    item, names, budget = args
    g = decode_graph6(item.graph6)
    ordering = _item_ordering(item)
    families = detect_families(g, ordering)
    try:
        gamma = domination_number(g, budget)
        rho = packing_number(g, budget)
    except BudgetExceeded as exc:
        return _inconclusive(item, g, names, exc), []
    facts = GraphFacts(item.graph_id, item.family, g, ordering, families,
                       gamma.value, rho.value, budget)
    records: list[ScanRecord] = []
    counterexamples: list[dict] = []
    for name in names:
        pred = PREDICATES[name]
        if not pred.applies(facts):
            continue
        try:
            holds, bound, details = pred.evaluate(facts)
        except BudgetExceeded as exc:
            records.extend(_inconclusive(item, g, [name], exc))
            continue
        records.append(
            ScanRecord(graph_id=item.graph_id, family=item.family, n=g.n,
                       check=name, kind=pred.kind, holds=holds, bound=bound,
                       gamma=gamma.value, rho=rho.value, details=details)
        )
        if not holds and pred.kind == "conjecture":
            counterexamples.append({
                "graph_id": item.graph_id,
                "family": item.family,
                "predicate": name,
                "graph6": item.graph6,
                "gamma": gamma.value,
                "rho": rho.value,
                "bound": bound,
                "dominating": list(gamma.witness),
                "packing": list(rho.witness),
                "x_order": list(item.ordering[0]) if item.ordering else None,
                "y_order": list(item.ordering[1]) if item.ordering else None,
            })
    return records, counterexamples


def run_scan(items: Sequence[ScanItem],
             predicates: Sequence[str] = DEFAULT_PREDICATES,
             budget: int = DEFAULT_BUDGET,
             jobs: int = 1) -> tuple[list[ScanRecord], list[dict]]:
    """Evaluate the named predicates on every item.  Returns the records
    (submission order) and the conjecture counterexamples found."""
    for name in predicates:
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}")
    args = [(item, tuple(predicates), budget) for item in items]
    if jobs <= 1:
        outcomes = [_predicate_worker(a) for a in args]
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            outcomes = list(pool.imap(_predicate_worker, args, chunksize=1))
    records: list[ScanRecord] = []
    counterexamples: list[dict] = []
    for recs, ces in outcomes:
        records.extend(recs)
        counterexamples.extend(ces)
    return records, counterexamples


def scan_verdict(records: Iterable[ScanRecord]) -> int:
    """Process exit code for a record set: 3 for any theorem failure,
    else 2 for any conjecture counterexample, else 0."""
    code = 0
    for r in records:
        if r.holds is False:
            if r.kind == "theorem":
                return 3
            code = 2
    return code


def write_counterexamples(counterexamples: Sequence[dict], sink) -> None:
    for ce in counterexamples:
        sink.write(json.dumps(ce, sort_keys=True) + "\n")


def verify_counterexamples(lines: Iterable[str],
                           budget: int = DEFAULT_BUDGET) -> list[dict]:
    """Replay a counterexample dump: re-solve each graph from its graph6
    alone and re-evaluate the named predicate.  Each returned entry gains
    a `still_violates` flag."""
    results = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        ce = json.loads(line)
        g = decode_graph6(ce["graph6"])
        ordering = None
        if ce.get("x_order") is not None:
            ordering = ConvexOrdering(tuple(ce["x_order"]), tuple(ce["y_order"]))
        families = detect_families(g, ordering)
        gamma = domination_number(g, budget)
        rho = packing_number(g, budget)
        facts = GraphFacts(ce["graph_id"], ce["family"], g, ordering, families,
                           gamma.value, rho.value, budget)
        pred = PREDICATES[ce["predicate"]]
        holds, _, _ = pred.evaluate(facts)
        out = dict(ce)
        out["still_violates"] = pred.applies(facts) and not holds
        results.append(out)
    return results


# ------------------------------------------------------- default corpus ----

def default_scan_items() -> list[ScanItem]:
    """Mixed corpus for plain `scan`: random trees, small connected graphs,
    random bicubic / maximal outerplanar / biconvex graphs, and a shelf of
    named graphs.  Everything is seeded, so the corpus is fixed."""
    items: list[ScanItem] = []
    for s in range(40):
        n = 5 + (s * 7) % 36
        items.append(make_item(f"tree-{s}", "tree", gen_random_tree(n, s)))
    for s in range(60):
        n = 4 + s % 9
        items.append(make_item(f"conn-{s}", "any",
                               gen_random_connected(n, 1000 + s)))
    for s in range(25):
        n = 16 + 2 * (s % 5)
        items.append(make_item(f"bicubic-{s}", "bicubic",
                               gen_random_bicubic(n, 2000 + s)))
    for s in range(60):
        n = 4 + s % 15
        items.append(make_item(f"mop-{s}", "mop", gen_random_mop(n, 3000 + s)))
    for s in range(60):
        nx = 2 + s % 9
        ny = 2 + (s // 9) % 9
        g, ordering = gen_random_biconvex(nx, ny, 4000 + s)
        items.append(make_item(f"biconvex-{s}", "biconvex", g, ordering))
    named = [
        ("petersen", petersen()),
        ("heawood", heawood()),
        ("cube", generalized_petersen(4, 1)),
        ("moebius-kantor", generalized_petersen(8, 3)),
        ("desargues", generalized_petersen(10, 3)),
        ("sun", gen_sun()),
        ("rook-4", gen_rook(4)),
        ("c4", gen_cycle(4)),
        ("c7", gen_cycle(7)),
    ]
    for gid, g in named:
        items.append(make_item(gid, "named", g))
    return items


# ---------------------------------------------------------- experiments ----

def _exp_records_bicubic(item: ScanItem, budget: int) -> list[ScanRecord]:
    g = decode_graph6(item.graph6)
    records = check_bicubic_bounds(g, item.graph_id, budget)
    gamma = domination_number(g, budget)
    rho = packing_number(g, budget)
    records.append(
        ScanRecord(graph_id=item.graph_id, family=item.family, n=g.n,
                   check="gamma-le-2rho", kind="conjecture",
                   holds=gamma.value <= 2 * rho.value,
                   bound=bound_str(2 * rho.value),
                   gamma=gamma.value, rho=rho.value)
    )
    return records


def _exp_records_tight(item: ScanItem, budget: int, k: int) -> list[ScanRecord]:
    g = decode_graph6(item.graph6)
    ordering = _item_ordering(item)
    gamma = domination_number(g, budget)
    rho = packing_number(g, budget)
    base = dict(graph_id=item.graph_id, family=item.family, n=g.n,
                gamma=gamma.value, rho=rho.value)
    # k disjoint blocks, so the connected-graph certificate machinery does
    # not apply; the point of the family is the pair of exact values.
    _ = ordering
    return [
        ScanRecord(check="tight-gamma-eq-2k", kind="theorem",
                   holds=gamma.value == 2 * k, bound=bound_str(2 * k), **base),
        ScanRecord(check="tight-rho-eq-k", kind="theorem",
                   holds=rho.value == k, bound=bound_str(k), **base),
        ScanRecord(check="tight-gamma-eq-2rho", kind="theorem",
                   holds=gamma.value == 2 * rho.value, **base),
    ]


def _exp_records_mop(item: ScanItem, budget: int) -> list[ScanRecord]:
    g = decode_graph6(item.graph6)
    records = check_mop_bounds(g, item.graph_id, budget)
    t = recognize_mop(g)
    colors = tokunaga_color(t)
    problems = verify_tokunaga(t, colors)
    cg = build_clique_graph(t)
    cg_rho = packing_number(cg, budget)
    lifted = lift_packing(t, build_dual(t), cg_rho.witness)
    base = dict(graph_id=item.graph_id, family=item.family, n=g.n)
    records.append(
        ScanRecord(check="tokunaga-4cycle", kind="theorem",
                   holds=not problems, details={"problems": problems}, **base)
    )
    records.append(
        ScanRecord(check="lift-packing-size", kind="theorem",
                   holds=len(lifted) == cg_rho.value,
                   bound=bound_str(cg_rho.value),
                   details={"lifted": list(lifted)}, **base)
    )
    return records


def _exp_records_biconvex(item: ScanItem, budget: int) -> list[ScanRecord]:
    g = decode_graph6(item.graph6)
    return check_biconvex_bound(g, _item_ordering(item), item.graph_id, budget)


def _experiment_worker(args: tuple[str, ScanItem, int, dict]) -> list[ScanRecord]:
    kind, item, budget, params = args
    try:
        if kind == "bicubic":
            return _exp_records_bicubic(item, budget)
        if kind == "tight":
            return _exp_records_tight(item, budget, params["k"])
        if kind == "mop":
            return _exp_records_mop(item, budget)
        if kind == "biconvex":
            return _exp_records_biconvex(item, budget)
    except BudgetExceeded as exc:
        g = decode_graph6(item.graph6)
        return [
            ScanRecord(graph_id=item.graph_id, family=item.family, n=g.n,
                       check="solver-budget", kind="info", holds=None,
                       details={"quantity": exc.quantity,
                                "range": [exc.lower, exc.upper]})
        ]
    raise ValueError(f"unknown experiment job kind {kind!r}")


def _experiment_jobs(name: str, corpus: Sequence[str] | None,
                     budget: int) -> list[tuple[str, ScanItem, int, dict]]:
    jobs: list[tuple[str, ScanItem, int, dict]] = []
    if name == "bicubic-small":
        for n in (6, 8, 10, 12):
            for i, g in enumerate(enumerate_bicubic(n)):
                item = make_item(f"bicubic-{n}-{i}", "bicubic-exhaustive", g)
                jobs.append(("bicubic", item, budget, {}))
        if corpus:
            for i, line in enumerate(corpus):
                g = decode_graph6(line.strip())
                item = make_item(f"bicubic-corpus-{i}", "bicubic-corpus", g)
                jobs.append(("bicubic", item, budget, {}))
    elif name == "tight-family":
        for k in range(1, 7):
            g, ordering = gen_tight_family(k)
            item = make_item(f"tight-{k}", "biconvex-tight", g, ordering)
            jobs.append(("tight", item, budget, {"k": k}))
    elif name == "mop-theorem4":
        for s in range(200):
            n = 4 + s % 15
            item = make_item(f"mop-{s}", "mop", gen_random_mop(n, s))
            jobs.append(("mop", item, budget, {}))
    elif name == "biconvex-theorem12":
        for s in range(200):
            nx = 2 + s % 9
            ny = 2 + (s // 9) % 9
            g, ordering = gen_random_biconvex(nx, ny, s)
            item = make_item(f"biconvex-{s}", "biconvex", g, ordering)
            jobs.append(("biconvex", item, budget, {}))
    else:
        raise ValueError(f"unknown experiment {name!r}")
    return jobs


# Accepted ids for the reproduce command; kept stable as external interface.
EXPERIMENTS = ("bicubic-small", "tight-family", "mop-theorem4",
               "biconvex-theorem12")


def run_experiment(name: str, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                   corpus: Sequence[str] | None = None) -> list[ScanRecord]:
    """Re-run one of the canned verification experiments end to end."""
    work = _experiment_jobs(name, corpus, budget)
    if jobs <= 1:
        outcomes = [_experiment_worker(w) for w in work]
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            outcomes = list(pool.imap(_experiment_worker, work, chunksize=1))
    return [r for out in outcomes for r in out]
