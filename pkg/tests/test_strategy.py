import json
import random

import pytest

from domguard.graph import Graph, GraphError, NotApplicableError, split_partition
from domguard.families import (
    random_2split,
    random_3split_k14free,
    random_claw_free_split,
)
from domguard.oracle import is_dominating, medn_oracle
from domguard.strategy import (
    DefenderSession,
    apply_moves,
    interactive_defender,
    region_strategy,
    strategy_from_json,
    strategy_k13,
    strategy_k14_2split,
    strategy_k14_3split,
    synthesize_strategy,
    verify_closure,
)


def g_path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


class TestMoves:
    def test_apply_moves(self):
        cfg = frozenset({0, 2})
        assert apply_moves(cfg, [(0, 1), (2, 3)]) == frozenset({1, 3})

    def test_apply_rejects_collision(self):
        with pytest.raises(ValueError):
            apply_moves(frozenset({0, 2}), [(0, 1), (2, 1)])

    def test_apply_rejects_missing_guard(self):
        with pytest.raises(ValueError):
            apply_moves(frozenset({0}), [(3, 2)])


class TestSynthesized:
    def test_path_p4(self):
        g = g_path(4)
        s = synthesize_strategy(g, medn_oracle(g))
        rep = verify_closure(g, s)
        assert rep.proven and rep.counterexample is None
        assert rep.visited >= 1

    def test_infeasible_k_raises(self):
        with pytest.raises(NotApplicableError):
            synthesize_strategy(g_path(5), 2)

    def test_sun_graph(self):
        # 3-sun: triangle 0,1,2 plus pendant triangle corners
        g = Graph(6, [(0, 1), (1, 2), (0, 2),
                      (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
        s = synthesize_strategy(g, medn_oracle(g))
        assert verify_closure(g, s)


class TestClawFreeStrategies:
    def test_random_closure(self, rng):
        for _ in range(15):
            g = random_claw_free_split(rng.randint(4, 8), rng)
            if g.is_complete():
                continue
            p = split_partition(g)
            s = strategy_k13(g, p)
            assert s.k == medn_oracle(g)
            assert verify_closure(g, s)


class TestTwoSplitStrategies:
    def test_random_closure(self, rng):
        for _ in range(10):
            g = random_2split(rng.randint(6, 9), rng, require_claw=True)
            p = split_partition(g)
            if p.deltaI != 2:
                continue
            s = strategy_k14_2split(g, p)
            assert s.k == medn_oracle(g)
            assert verify_closure(g, s)


class TestThreeSplitStrategies:
    def test_random_closure(self, rng):
        for _ in range(8):
            g = random_3split_k14free(rng.randint(7, 9), rng)
            p = split_partition(g)
            if p.deltaI != 3:
                continue
            s = strategy_k14_3split(g, p)
            assert s.k == medn_oracle(g)
            assert verify_closure(g, s)

    def test_typed_closure(self):
        from domguard.families import random_3split_typed

        r = random.Random(99)
        for kind in ("type-I", "type-II", "neither"):
            g, p = random_3split_typed(r, kind)
            s = strategy_k14_3split(g, p)
            assert verify_closure(g, s)


class TestVerifierCatchesErrors:
    def test_corrupted_rule_found(self):
        g = g_path(4)
        s = synthesize_strategy(g, medn_oracle(g))
        good_respond = s.respond
        calls = {"n": 0}

        def bad_respond(cfg, r):
            calls["n"] += 1
            if calls["n"] == 3:
                return []  # refuse to move: attacked vertex stays empty
            return good_respond(cfg, r)

        s.respond = bad_respond
        rep = verify_closure(g, s)
        assert not rep.proven
        assert rep.counterexample is not None

    def test_non_dominating_initial(self):
        g = g_path(5)
        s = synthesize_strategy(g, medn_oracle(g))
        s.initial = frozenset({0, 1, 2})
        rep = verify_closure(g, s)
        assert not rep.proven

    def test_illegal_move_found(self):
        g = g_path(4)
        s = synthesize_strategy(g, medn_oracle(g))
        s.respond = lambda cfg, r: [(v, r) for v in cfg if v != r][:1]
        rep = verify_closure(g, s)
        assert not rep.proven


class TestRegionStrategy:
    def test_disjoint_cliques(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        s = region_strategy(g, [{0, 1, 2}, {3, 4, 5}])
        assert s.k == 2
        assert verify_closure(g, s)

    def test_rejects_non_clique_region(self):
        g = g_path(4)
        with pytest.raises((NotApplicableError, ValueError)):
            region_strategy(g, [{0, 1, 2, 3}])


class TestSerialization:
    def test_synthesized_roundtrip(self):
        g = g_path(5)
        s = synthesize_strategy(g, 3)
        obj = s.to_json()
        s2 = strategy_from_json(g, json.loads(json.dumps(obj)))
        assert s2.k == 3
        assert verify_closure(g, s2)

    def test_base_floater_roundtrip(self, rng):
        g = random_2split(8, rng, require_claw=True)
        p = split_partition(g)
        if p.deltaI != 2:
            g = random_2split(8, rng, require_claw=True)
            p = split_partition(g)
        s = strategy_k14_2split(g, p)
        s2 = strategy_from_json(g, s.to_json())
        assert s2.k == s.k
        assert verify_closure(g, s2)

    def test_regions_roundtrip(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        s = region_strategy(g, [{0, 1, 2}, {3, 4, 5}])
        s2 = strategy_from_json(g, s.to_json())
        assert verify_closure(g, s2)

    def test_bad_payload_rejected(self):
        g = g_path(4)
        with pytest.raises(GraphError):
            strategy_from_json(g, {"kind": "regions"})
        with pytest.raises(GraphError):
            strategy_from_json(g, {"kind": "no-such-kind", "k": 2,
                                   "initial": [0, 2]})


class TestDefenderSession:
    def test_oracle_mode_star(self):
        g = Graph(5, [(0, i) for i in range(1, 5)])
        sess = DefenderSession(g, k=2)
        for r in (1, 2, 3, 4, 1, 3):
            sess.attack(r)
            assert r in sess.config
            assert is_dominating(g, sess.config)
        assert len(sess.history) == 6

    def test_oracle_mode_long_run(self, rng):
        g = g_path(5)
        sess = DefenderSession(g, k=3)
        for _ in range(100):
            r = rng.randrange(5)
            sess.attack(r)
            assert r in sess.config and is_dominating(g, sess.config)

    def test_infeasible_k_refused(self):
        with pytest.raises(NotApplicableError):
            DefenderSession(g_path(5), k=2)

    def test_strategy_mode(self, rng):
        g = random_2split(8, rng, require_claw=True)
        p = split_partition(g)
        s = strategy_k14_2split(g, p)
        sess = DefenderSession(g, strategy=s)
        for _ in range(30):
            r = rng.randrange(g.n)
            sess.attack(r)
            assert r in sess.config

    def test_attack_out_of_range(self):
        sess = DefenderSession(g_path(4), k=2)
        with pytest.raises(ValueError):
            sess.attack(17)

    def test_interactive_wrapper(self):
        sess = interactive_defender(g_path(5), k=3)
        moves = sess.attack(0)
        assert isinstance(moves, list)
