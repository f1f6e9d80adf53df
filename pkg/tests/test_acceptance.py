"""Acceptance gate: one test and one printed PASS/FAIL line per headline
guarantee.  The lines are written with output capture suspended so they
show up in any pytest run."""

import itertools
import random
import warnings

import pytest

from domguard.graph import (
    Graph,
    is_chordal,
    is_k1t_free,
    split_partition,
)
from domguard.families import (
    enumerate_claw_free_split,
    random_2split,
    random_3split_k14free,
    random_3split_typed,
    random_claw_free_split,
)
from domguard.oracle import medn_feasible, medn_oracle, gamma_exact
from domguard.reductions import (
    ThreeDMInstance,
    X3CInstance,
    build_gp2,
    build_gp3,
    build_gp5,
    reduce_3dm,
    reduce_x3c,
    threedm_perfect_matching,
    x3c_exact_cover,
)
from domguard.reductions import (
    test_gp3_eternal_correspondence as gp3_correspondence_report,
)
from domguard.splitsolve import (
    NEITHER,
    TYPE_I,
    TYPE_II,
    solve_k13_free,
    solve_k14_2split,
    solve_k14_3split,
)
from domguard.strategy import (
    strategy_3dm,
    strategy_k14_2split,
    strategy_x3c,
    verify_closure,
)


_CAPSYS = None


@pytest.fixture(autouse=True)
def _capture_handle(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _report(name, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    line = f"[acceptance] {name}: {tag}{suffix}"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)
    assert ok, f"{name}{suffix}"


# every graph on at most 3 vertices, up to isomorphism
SMALL_GRAPHS = [
    Graph(1),
    Graph(2), Graph(2, [(0, 1)]),
    Graph(3), Graph(3, [(0, 1)]), Graph(3, [(0, 1), (1, 2)]),
    Graph(3, [(0, 1), (1, 2), (0, 2)]),
]

FIG_COVER = X3CInstance(3, [(0, 1, 2), (3, 4, 5), (1, 2, 4),
                            (6, 7, 8), (5, 6, 7)])
FIG_MATCHING = ThreeDMInstance(2, [(0, 0, 0), (0, 1, 0), (1, 0, 1)])

# reduce_x3c / reduce_3dm outputs produced anywhere in this module are
# funneled through these gates (structural-gate criterion)
_X3C_OUTPUTS = []
_3DM_OUTPUTS = []


def checked_reduce_x3c(inst):
    built = reduce_x3c(inst)
    _X3C_OUTPUTS.append(built)
    return built


def checked_reduce_3dm(inst):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        built, ct = reduce_3dm(inst)
    _3DM_OUTPUTS.append((built, ct))
    return built, ct


def test_claw_free_solver_equivalence():
    mismatches = 0
    count = 0
    for n in range(2, 10):
        for g in enumerate_claw_free_split(n):
            if g.is_complete():
                continue
            p = split_partition(g)
            if solve_k13_free(g, p) != medn_oracle(g):
                mismatches += 1
            count += 1
    exhaustive = count
    r = random.Random(131)
    randoms = 0
    while randoms < 500:
        g = random_claw_free_split(r.randint(4, 11), r)
        if g.is_complete():
            continue
        p = split_partition(g)
        if solve_k13_free(g, p) != medn_oracle(g):
            mismatches += 1
        randoms += 1
    _report("claw-free split solver == oracle", mismatches == 0,
            f"{exhaustive} exhaustive + {randoms} random, "
            f"{mismatches} mismatches")


def test_2split_solver_and_strategies():
    r = random.Random(132)
    mismatches = 0
    unproven = 0
    for _ in range(200):
        g = random_2split(r.randint(6, 11), r, require_claw=True)
        p = split_partition(g)
        k, _ri = solve_k14_2split(g, p)
        if k != medn_oracle(g):
            mismatches += 1
            continue
        s = strategy_k14_2split(g, p)
        if s.k != k or not verify_closure(g, s):
            unproven += 1
    _report("2-split solver == oracle, strategies closure-proven",
            mismatches == 0 and unproven == 0,
            f"200 instances, {mismatches} mismatches, {unproven} unproven")


def test_3split_solver_typed_and_x_invariance():
    r = random.Random(133)
    instances = []
    for kind in (TYPE_I, TYPE_II, NEITHER):
        for _ in range(10):
            instances.append(random_3split_typed(r, kind))
    while len(instances) < 100:
        g = random_3split_k14free(r.randint(7, 11), r)
        p = split_partition(g)
        if p is not None and p.deltaI == 3:
            instances.append((g, p))

    mismatches = 0
    x_variant = 0
    seen = {TYPE_I: 0, TYPE_II: 0, NEITHER: 0}
    for g, p in instances:
        v, ex = solve_k14_3split(g, p)
        seen[ex["Q_type"]] += 1
        if v != medn_oracle(g):
            mismatches += 1
            continue
        xs = [c for c in p.clique
              if len(g.adj[c] & set(p.independent)) == 3]
        if len({solve_k14_3split(g, p, x=x)[0] for x in xs}) != 1:
            x_variant += 1
    typed_ok = all(seen[k] >= 10 for k in seen)
    _report("3-split solver == oracle, typed coverage, x-invariance",
            mismatches == 0 and x_variant == 0 and typed_ok,
            f"{len(instances)} instances, types {dict(seen)}, "
            f"{mismatches} mismatches, {x_variant} x-variant")


def test_pendant_path_formulas():
    bad = []
    for g in SMALL_GRAPHS:
        gp2 = build_gp2(g)
        if gamma_exact(gp2.graph) != g.n:
            bad.append(("gp2", g.n))
        gp3 = build_gp3(g)
        if gamma_exact(gp3.graph) != g.n or medn_oracle(gp3.graph) != 2 * g.n:
            bad.append(("gp3", g.n))
        gp5 = build_gp5(g)
        if medn_oracle(gp5.graph) != 3 * g.n:
            bad.append(("gp5", g.n))
    _report("pendant-path construction formulas", not bad,
            f"{len(SMALL_GRAPHS)} base graphs" + (f", failures {bad}" if bad else ""))


def _x3c_instances():
    """10 instances with exact covers and 10 provably without, q <= 3."""
    with_cover = [
        X3CInstance(1, [(0, 1, 2)]),
        X3CInstance(2, [(0, 1, 3), (2, 4, 5)]),
        X3CInstance(2, [(0, 1, 2), (3, 4, 5)]),
        X3CInstance(2, [(0, 1, 2), (3, 4, 5), (1, 2, 3)]),
        X3CInstance(2, [(0, 2, 4), (1, 3, 5), (0, 1, 2)]),
        X3CInstance(3, [(0, 1, 2), (3, 4, 5), (6, 7, 8)]),
        X3CInstance(3, [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 4, 8)]),
        FIG_COVER,
        X3CInstance(3, [(0, 3, 6), (1, 4, 7), (2, 5, 8), (0, 1, 2)]),
        X3CInstance(3, [(0, 1, 8), (2, 3, 4), (5, 6, 7), (0, 1, 2)]),
    ]
    without = [
        # every triple hits element 0 or misses some element entirely
        X3CInstance(2, [(0, 1, 2), (0, 3, 4), (0, 2, 5)]),
        X3CInstance(2, [(0, 1, 2), (2, 3, 4), (1, 2, 5)]),
        X3CInstance(2, [(0, 1, 3), (1, 2, 3), (0, 2, 3)]),
        X3CInstance(2, [(0, 1, 2), (1, 2, 3), (2, 3, 4)]),
        X3CInstance(2, [(3, 4, 5), (2, 4, 5), (1, 4, 5), (0, 4, 5)]),
        X3CInstance(3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8)]),
        X3CInstance(3, [(0, 1, 2), (2, 3, 4), (4, 5, 6), (6, 7, 8)]),
        X3CInstance(3, [(0, 1, 2), (3, 4, 5), (5, 6, 7), (4, 6, 8)]),
        X3CInstance(3, [(1, 2, 3), (4, 5, 6), (6, 7, 8), (2, 3, 4)]),
        X3CInstance(3, [(0, 1, 2), (1, 2, 3), (3, 4, 5), (5, 6, 7),
                        (2, 7, 8)]),
    ]
    for inst in with_cover:
        assert x3c_exact_cover(inst) is not None
    for inst in without:
        assert x3c_exact_cover(inst) is None
    return with_cover, without


def test_exact_cover_correspondence():
    with_cover, without = _x3c_instances()
    bad_iff = 0
    unproven = 0
    for inst in with_cover + without:
        built = checked_reduce_x3c(inst)
        feasible = medn_oracle(built.graph) <= inst.q + 2
        if feasible != built.predictions["has_cover"]:
            bad_iff += 1
        if built.predictions["has_cover"]:
            s = strategy_x3c(built.graph, x3c_exact_cover(inst))
            if not verify_closure(built.graph, s):
                unproven += 1
    fig = checked_reduce_x3c(FIG_COVER)
    fig_value = medn_oracle(fig.graph)
    _report("exact-3-cover correspondence",
            bad_iff == 0 and unproven == 0 and fig_value == 5,
            f"{len(with_cover) + len(without)} instances, "
            f"{bad_iff} iff failures, {unproven} unproven, "
            f"17-vertex example value {fig_value}")


def test_3d_matching_correspondence():
    # p=2, q=1: every triple is by itself a perfect matching, and any pair
    # of triples covering all elements must be disjoint, so no p=2, q=1
    # instance lacks a perfect matching.  The "without" half of the iff is
    # therefore vacuous at this size; the smallest no-matching instances
    # have q=2 and one is checked below in its place.
    ok = True
    details = []
    # over a 1-element ground set every triple is (0,0,0), so the only
    # p=2, q=1 instance repeats it; it trivially has a perfect matching
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        p2q1 = ThreeDMInstance(1, [(0, 0, 0), (0, 0, 0)])
    assert threedm_perfect_matching(p2q1) is not None
    built, _ = checked_reduce_3dm(p2q1)
    k = built.predictions["k"]
    if not (medn_feasible(built.graph, k)
            and not medn_feasible(built.graph, k - 1)):
        ok = False
    details.append(f"p=2,q=1 value = 2p+q+2 = {k}")

    # a p=2, q=1 instance without a perfect matching does not exist (any
    # single triple already is one), so the "no matching implies > k" half
    # is checked on the smallest instance lacking one, which has q=2
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        no_pm = ThreeDMInstance(2, [(0, 0, 0), (0, 1, 1)])
    assert threedm_perfect_matching(no_pm) is None
    built_no, _ = checked_reduce_3dm(no_pm)
    k_no = built_no.predictions["k"]
    # the uncovered element is an isolated vertex, so go through the
    # component-aware oracle rather than single-component feasibility
    if medn_oracle(built_no.graph) <= k_no:
        ok = False
    details.append(f"no-matching q=2 value > {k_no}")

    # 36-vertex three-triple instance: upper bound machine-checked by
    # strategy closure at k=10; the matching lower bound is beyond full
    # oracle scale (C(36,10) configs) and is not re-derived here.
    built_fig, _ = checked_reduce_3dm(FIG_MATCHING)
    s = strategy_3dm(built_fig.graph,
                     threedm_perfect_matching(FIG_MATCHING))
    rep = verify_closure(built_fig.graph, s)
    if s.k != 10 or not rep:
        ok = False
    details.append(f"36-vertex closure at k=10 over {rep.visited} configs")

    _report("3D-matching correspondence", ok, "; ".join(details))


def test_structural_gates():
    # gates for every construction produced in this module, plus a fresh
    # batch; reduce_3dm raises internally if chordality / the clique-tree
    # path property fail, so reaching here already implies those held
    extra = [
        X3CInstance(1, [(0, 1, 2)]),
        X3CInstance(2, [(0, 1, 2), (3, 4, 5), (0, 1, 5)]),
        FIG_COVER,
    ]
    for inst in extra:
        checked_reduce_x3c(inst)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for inst in [ThreeDMInstance(1, [(0, 0, 0)]), FIG_MATCHING]:
            checked_reduce_3dm(inst)

    x3c_bad = 0
    for built in _X3C_OUTPUTS:
        p = split_partition(built.graph)
        if p is None or not is_k1t_free(built.graph, 5):
            x3c_bad += 1
    dm_bad = 0
    for built, ct in _3DM_OUTPUTS:
        if not is_chordal(built.graph) or not ct.path_property:
            dm_bad += 1
    _report("structural gates on all reduction outputs",
            x3c_bad == 0 and dm_bad == 0,
            f"{len(_X3C_OUTPUTS)} cover graphs, "
            f"{len(_3DM_OUTPUTS)} matching graphs")


def test_invariant_suite_bulk():
    from domguard.graph import connected_components, is_connected
    from domguard.matching import (
        brute_force_max_matching_size,
        max_cardinality_matching,
    )
    from domguard.oracle import alpha_exact, edn_oracle

    r = random.Random(138)
    failures = []
    for i in range(1000):
        n = r.randint(1, 9)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if r.random() < r.choice((0.15, 0.3, 0.5, 0.8))])
        gam, m, a = gamma_exact(g), medn_oracle(g), alpha_exact(g)
        if not gam <= m <= a:
            failures.append((i, "sandwich"))
        if i % 4 == 0:
            e = edn_oracle(g)
            if not (m <= e and a <= e):
                failures.append((i, "sandwich-edn"))
        if (not g.is_complete()
                and any(len(g.adj[v]) == n - 1 for v in g.vertices)
                and m != 2):
            failures.append((i, "universal-vertex"))
        comps = connected_components(g)
        if len(comps) > 1:
            total = sum(medn_oracle(g.induced(sorted(c))[0]) for c in comps)
            if m != total:
                failures.append((i, "additivity"))
        if len(max_cardinality_matching(n, g.edges)) != \
                brute_force_max_matching_size(n, g.edges):
            failures.append((i, "matching"))
        if i % 2 == 0:
            best = max((len(vs) for sz in range(n + 1)
                        for vs in itertools.combinations(range(n), sz)
                        if all(not g.has_edge(x, y)
                               for x, y in itertools.combinations(vs, 2))),
                       default=0)
            if a != best:
                failures.append((i, "alpha"))
    _report("invariant suite on 1000 random graphs", not failures,
            f"failures: {failures[:5]}" if failures else "n <= 9")


def test_single_guard_pendant_correspondence():
    bad = []
    for g in SMALL_GRAPHS:
        for k in range(1, g.n + 1):
            rep = gp3_correspondence_report(g, k)
            if not rep["equivalent"]:
                bad.append((g.n, k))
    _report("single-guard pendant-path correspondence", not bad,
            "all bases n <= 3, k in 1..n")
