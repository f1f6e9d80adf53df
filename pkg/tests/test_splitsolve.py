import random

import pytest

from domguard.graph import (
    Graph,
    NotApplicableError,
    claw_free_split_check,
    split_partition,
)
from domguard.families import (
    enumerate_claw_free_split,
    random_2split,
    random_3split_k14free,
    random_claw_free_split,
)
from domguard.oracle import medn_oracle
from domguard.splitsolve import (
    NEITHER,
    TYPE_I,
    TYPE_II,
    build_Q,
    classify_Q,
    solve_k13_free,
    solve_k14_2split,
    solve_k14_3split,
    solve_split_auto,
)


class TestClawFree:
    def test_exhaustive_small(self):
        for n in range(2, 8):
            for g in enumerate_claw_free_split(n):
                if g.is_complete():
                    continue
                p = split_partition(g)
                assert p is not None and claw_free_split_check(g, p)
                assert solve_k13_free(g, p) == medn_oracle(g)

    def test_random_larger(self, rng):
        for _ in range(80):
            g = random_claw_free_split(rng.randint(4, 10), rng)
            if g.is_complete():
                continue
            p = split_partition(g)
            assert solve_k13_free(g, p) == medn_oracle(g)

    def test_deltaI_two_is_always_two(self, rng):
        # claw-free with Delta^I = 2: the answer is 2 regardless of |I|
        for _ in range(40):
            g = random_claw_free_split(rng.randint(5, 10), rng)
            p = split_partition(g)
            if p.deltaI == 2 and claw_free_split_check(g, p):
                assert solve_k13_free(g, p) == 2

    def test_rejects_claw(self):
        claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
        p = split_partition(claw)
        with pytest.raises(NotApplicableError):
            solve_k13_free(claw, p)


class TestTwoSplit:
    def test_random_matches_oracle(self, rng):
        for _ in range(60):
            # the matching formula is for graphs that do contain a claw;
            # claw-free Delta^I = 2 graphs are the other theorem's case
            g = random_2split(rng.randint(6, 10), rng, require_claw=True)
            p = split_partition(g)
            if p.deltaI != 2:
                p = _partition_with_deltaI(g, 2)
            if p is None:
                continue
            k, ri = solve_k14_2split(g, p)
            assert k == medn_oracle(g)
            assert k == len(ri.L) + len(ri.Iprime) + 1

    def test_packing_gap_regression(self):
        # the matching formula says 3 here, but two guards can rotate; the
        # packing gate must trip and hand the instance to the exact oracle
        g = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 5), (0, 6),
                      (1, 2), (1, 3), (1, 4), (1, 5),
                      (2, 3), (2, 4), (3, 4), (3, 6)])
        p = split_partition(g)
        v, ri = solve_k14_2split(g, p)
        assert ri.method == "oracle"
        assert v == medn_oracle(g) == 2

    def test_gate_fallback_matches_oracle(self, rng):
        from domguard.strategy import strategy_k14_2split, verify_closure

        found = 0
        for _ in range(300):
            g = random_2split(rng.randint(6, 10), rng, require_claw=True)
            p = split_partition(g)
            k, ri = solve_k14_2split(g, p)
            if ri.method != "oracle":
                continue
            found += 1
            assert k == medn_oracle(g)
            assert verify_closure(g, strategy_k14_2split(g, p))
            if found >= 3:
                break

    def test_rejects_wrong_deltaI(self, rng):
        g = random_claw_free_split(7, rng)
        p = split_partition(g)
        if p.deltaI != 2:
            with pytest.raises(NotApplicableError):
                solve_k14_2split(g, p)


def _partition_with_deltaI(g, d):
    from domguard.graph import all_split_partitions

    for p in all_split_partitions(g):
        if p.deltaI == d:
            return p
    return None


class TestThreeSplit:
    def test_random_matches_oracle(self, rng):
        for _ in range(40):
            g = random_3split_k14free(rng.randint(7, 10), rng)
            p = split_partition(g)
            if p.deltaI != 3:
                continue
            v, ex = solve_k14_3split(g, p)
            assert v == medn_oracle(g), ex

    def test_typed_instances(self):
        from domguard.families import random_3split_typed

        r = random.Random(7)
        for kind in (TYPE_I, TYPE_II, NEITHER):
            for _ in range(4):
                g, p = random_3split_typed(r, kind)
                v, ex = solve_k14_3split(g, p)
                assert ex["Q_type"] == kind
                assert v == medn_oracle(g), ex

    def test_x_choice_invariant(self, rng):
        # the theorem's answer must not depend on which x is removed
        for _ in range(15):
            g = random_3split_k14free(rng.randint(7, 9), rng)
            p = split_partition(g)
            if p.deltaI != 3:
                continue
            xs = [v for v in p.clique
                  if len(g.adj[v] & set(p.independent)) == 3]
            vals = {solve_k14_3split(g, p, x=x)[0] for x in xs}
            assert len(vals) == 1

    def test_packing_gap_regression(self):
        # the structured-config argument has no packing vertex for one
        # label here; the solver must fall back to the exact oracle
        edges = [[0, 1], [0, 2], [0, 3], [0, 4], [0, 5], [0, 6], [0, 7],
                 [1, 2], [1, 3], [1, 4], [1, 5], [1, 9], [1, 10],
                 [2, 3], [2, 4], [2, 6], [2, 8], [2, 10],
                 [3, 4], [3, 6], [3, 8], [3, 9],
                 [4, 7], [4, 9], [4, 10]]
        g = Graph(11, [tuple(e) for e in edges])
        p = split_partition(g)
        v, ex = solve_k14_3split(g, p, x=0)
        assert v == medn_oracle(g) == 4
        assert ex["boundary"] == "oracle"

    def test_rotation_counterexample_is_plus_one(self):
        # symmetric design: 4 I-vertices, every clique vertex sees 3 of
        # them; Q is Neither yet one extra guard suffices by rotating
        nbhds = [{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}]
        c = 4
        edges = [(a, b) for a in range(c) for b in range(a + 1, c)]
        for j, nb in enumerate(nbhds):
            for i in nb:
                edges.append((j, c + i))
        g = Graph(c + 4, edges)
        p = split_partition(g)
        v, ex = solve_k14_3split(g, p)
        assert ex["Q_type"] == NEITHER
        assert v == medn_oracle(g)
        assert ex.get("boundary") == "plus-one"


class TestAuto:
    def test_complete_and_star(self):
        k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert solve_split_auto(k4) == (1, "complete")
        star = Graph(5, [(0, i) for i in range(1, 5)])
        assert solve_split_auto(star) == (2, "star")

    def test_dispatch_matches_oracle(self, rng):
        for _ in range(40):
            choice = rng.randint(0, 2)
            n = rng.randint(5, 9)
            if choice == 0:
                g = random_claw_free_split(n, rng)
            elif choice == 1:
                g = random_2split(max(n, 6), rng)
            else:
                g = random_3split_k14free(max(n, 7), rng)
            v, method = solve_split_auto(g)
            assert v == medn_oracle(g), method

    def test_non_split_rejected(self):
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(NotApplicableError):
            solve_split_auto(c4)


class TestClassifyQ:
    def test_classification_consistent(self, rng):
        for _ in range(30):
            g = random_3split_k14free(rng.randint(7, 9), rng)
            p = split_partition(g)
            if p.deltaI != 3:
                continue
            x = min(v for v in p.clique
                    if len(g.adj[v] & set(p.independent)) == 3)
            assert classify_Q(build_Q(g, p, x)) in (TYPE_I, TYPE_II, NEITHER)
