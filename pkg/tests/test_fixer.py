"""Tests for pack, guess enumeration, the fixing pass and the FAS-parameterized solvers"""

import logging
import random
import time

import pytest

from bracketfix.app.generators import gen_instance, gen_tournament
from bracketfix.arborescence import WorkForest, is_binomial_arborescence, is_partial_ba
from bracketfix.exact import dp_solve, oracle_solve
from bracketfix.fas import minimum_fas
from bracketfix.fixer import (
    augment_demands,
    check_round_conflicts,
    iter_height_guesses,
    iter_parent_guesses,
    pack,
    run_fixing_pass,
    sanity_check_guess,
    solve_fpt,
    solve_with_rounds,
    solve_xp,
    verify_sba,
)
from bracketfix.models.errors import PreconditionViolated, PropertyOneViolated, RoundConflict, TooLarge
from bracketfix.models.schemas import Seeding
from bracketfix.tournament import check_solution, simulate, validate_instance

from conftest import acyclic, binomial_arcs, make_instance, upset_instance


def small_instances(count):
    """Seeded instances small enough for the full guess enumeration"""
    for seed in range(count):
        rng = random.Random(seed)
        n = rng.choice((4, 8))
        k = rng.randint(0, 2 if n == 4 else 1)
        d = rng.randint(0, min(3, n - 1))
        mode = "yes" if seed % 2 == 0 else "uniform"
        yield validate_instance(gen_instance(n, k, d, mode=mode, seed=seed))


def upset_demand_instances(count, sizes, max_k):
    """Instances whose demands contain every arc of the minimum feedback arc set"""
    for seed in range(count):
        rng = random.Random(seed)
        n = rng.choice(sizes)
        k = rng.randint(1, max_k)
        d = rng.randint(min(k, n - 1), min(k + 3, n - 1))
        yield validate_instance(gen_instance(n, k, d, mode="upsets", seed=seed))


def assert_fixer_agrees(inst):
    """XP matches the subset DP; FPT matches XP whenever every upset loser loses a demand"""
    seeding = solve_xp(inst)
    assert (seeding is not None) == (dp_solve(inst) is not None)
    if seeding is not None:
        assert check_solution(inst, seeding).ok
    fs = minimum_fas(inst.tournament)
    if inst.trivially_no or fs.heads <= inst.lose:
        assert (solve_fpt(inst, fs=fs) is not None) == (seeding is not None)


class TrackedForest(WorkForest):
    """WorkForest that checks the packing invariants after every join"""

    def __init__(self, vertices, arcs, players):
        super().__init__(vertices, arcs)
        self.players = set(players)
        self.total = self.root_total()
        self.joins = 0

    def root_total(self):
        return sum(self.beta(v) for v in self.players if self.parent(v) is None)

    def add_arc(self, x, y):
        super().add_arc(x, y)
        self.joins += 1
        assert self.root_total() == self.total
        for v in self.players:
            if self.parent(v) is None:
                assert self.beta(v) & (self.beta(v) - 1) == 0


def pack_mixed_heights(seed):
    """Pack binomial trees of random heights below j, built on disjoint vertex blocks"""
    rng = random.Random(seed)
    n = 32
    j = rng.randint(0, 4)
    arcs, players = [], []
    offset = total = 0
    while total < 1 << j or (offset + (1 << j) <= n and rng.random() < 0.5):
        h = rng.randint(0, max(j - 1, 0))
        arcs += binomial_arcs(h, offset)
        players.append(offset)
        offset += 1 << h
        total += 1 << h
    sigma = list(range(n))
    rng.shuffle(sigma)
    q = TrackedForest(range(n), arcs, players)
    _, root = pack(q, players, j, sigma)
    assert q.joins <= len(players) - 1
    assert q.parent(root) is None
    assert q.beta(root) == 1 << j
    assert is_partial_ba(q, root, set(), {}, j)
    assert is_binomial_arborescence(q, root)
    assert all(q.parent(v) is None for v in range(offset, n))


class TestPack:
    def test_four_singletons(self):
        q = WorkForest(range(4))
        q, root = pack(q, [0, 1, 2, 3], 2, (0, 1, 2, 3))
        assert root == 0
        assert set(q.arcs()) == {(0, 1), (2, 3), (0, 2)}
        assert q.beta(0) == 4

    def test_uses_strength_order(self):
        q = WorkForest(range(4))
        _, root = pack(q, [0, 1, 2, 3], 2, (3, 2, 1, 0))
        assert root == 3
        assert set(q.arcs()) == {(3, 2), (1, 0), (3, 1)}

    def test_returns_existing_root_of_target_size(self):
        q = WorkForest(range(4), [(0, 1)])
        _, root = pack(q, [0, 2, 3], 1, (0, 1, 2, 3))
        assert root == 0
        assert q.parent(2) is None

    def test_sizes_short(self):
        with pytest.raises(PreconditionViolated):
            pack(WorkForest(range(4)), [0, 1], 2, (0, 1, 2, 3))

    def test_rejects_vertex_with_parent(self):
        q = WorkForest(range(4), [(0, 1)])
        with pytest.raises(PreconditionViolated):
            pack(q, [1, 2, 3], 1, (0, 1, 2, 3))

    def test_rejects_oversized_root(self):
        q = WorkForest(range(4), [(0, 1), (0, 2)], fixed={0: 2})
        with pytest.raises(PreconditionViolated):
            pack(q, [0, 3], 1, (0, 1, 2, 3))

    @pytest.mark.parametrize("seed", range(8))
    def test_conserves_guessed_size(self, seed):
        rng = random.Random(seed)
        n = 16
        sigma = list(range(n))
        rng.shuffle(sigma)
        q = WorkForest(range(n))
        players = rng.sample(range(n), rng.randint(8, 16))
        _, root = pack(q, players, 3, sigma)
        assert q.beta(root) == 8
        assert q.parent(root) is None
        assert all(q.parent(v) is None for v in range(n) if v not in players)

    @pytest.mark.parametrize("seed", range(25))
    def test_mixed_heights(self, seed):
        pack_mixed_heights(seed)

    @pytest.mark.slow
    def test_mixed_heights_sweep(self):
        for seed in range(1000):
            pack_mixed_heights(seed)


class TestGuesses:
    def test_parent_guesses(self):
        inst = upset_instance()
        guesses = list(iter_parent_guesses(inst, {0, 3}))
        assert guesses == [{0: 3, 3: 1}, {0: 3, 3: 2}, {0: 3, 3: None}]

    def test_at_most_one_parentless(self):
        inst = make_instance(acyclic(4).with_reversed([(0, 3)]))
        for guess in iter_parent_guesses(inst, {0, 3}):
            assert sum(1 for p in guess.values() if p is None) <= 1

    def test_augment(self):
        inst = upset_instance()
        assert augment_demands(inst, {0: 3, 3: 1}) == {(3, 0), (1, 3)}
        assert augment_demands(inst, {0: 3, 3: None}) == {(3, 0)}

    def test_height_guesses_respect_demand_order(self):
        guesses = list(iter_height_guesses([0, 3], 2, [(3, 0), (1, 3)]))
        assert guesses == [{0: 0, 3: 1}, {0: 0, 3: 2}, {0: 1, 3: 2}]

    def test_height_guesses_bottom(self):
        guesses = list(iter_height_guesses([0, 3], 2, [(3, 0)], bottom=3))
        assert guesses == [{0: 0, 3: 2}, {0: 1, 3: 2}]

    def test_height_guesses_siblings_differ(self):
        for g in iter_height_guesses([1, 2], 2, [(0, 1), (0, 2)]):
            assert g[1] != g[2]

    def test_height_guesses_pinned(self):
        guesses = list(iter_height_guesses([1, 2], 2, [], pinned={1: 1}))
        assert all(g[1] == 1 for g in guesses)
        assert len(guesses) == 3

    def test_sanity_check(self):
        assert sanity_check_guess([(0, 1)], set(), {}, {0: 1, 1: 0, 2: 0, 3: 0}, 4)
        assert not sanity_check_guess([(0, 1)], set(), {}, {0: 1, 1: 1, 2: 0, 3: 0}, 4)
        assert not sanity_check_guess([(0, 1), (0, 2)], set(), {}, {0: 1, 1: 0, 2: 0, 3: 0}, 4)
        assert not sanity_check_guess([], set(), {}, {0: 2, 1: 2, 2: 0, 3: 0}, 4)
        assert not sanity_check_guess([], {0}, {0: 1}, {0: 1, 1: 0, 2: 0, 3: 0}, 4, bottom=0)


class TestFixingPass:
    def test_no_demands(self):
        inst = make_instance(acyclic(4))
        fs = minimum_fas(inst.tournament)
        sba = run_fixing_pass(inst, set(), fs, {})
        assert sba is not None
        assert sba.arc_set() == {(0, 1), (2, 3), (0, 2)}

    def test_worked_example(self):
        demands = {(0, 1), (0, 2), (1, 3)}
        inst = make_instance(acyclic(4), demands)
        sba = run_fixing_pass(inst, demands, minimum_fas(inst.tournament), {})
        assert sba.arc_set() == demands

    def test_overestimate_is_rejected(self):
        inst = make_instance(acyclic(4))
        fs = minimum_fas(inst.tournament)
        assert run_fixing_pass(inst, set(), fs, {}, estimate={0: 3, 1: 0, 2: 0, 3: 0}) is None

    def test_cyclic_augmentation_is_rejected(self):
        t = acyclic(4).with_reversed([(0, 2)])
        inst = make_instance(t, [(0, 1), (1, 2)])
        fs = minimum_fas(t)
        g = {v: 0 for v in fs.feedback_vertices}
        assert run_fixing_pass(inst, {(0, 1), (1, 2), (2, 0)}, fs, g) is None

    def test_verify_sba(self):
        inst = make_instance(acyclic(4), [(0, 1)], rounds={(0, 1): 0})
        sba, _ = simulate(inst.tournament, Seeding(order=(0, 1, 2, 3)))
        assert verify_sba(inst, inst.demands, sba)
        late, _ = simulate(inst.tournament, Seeding(order=(0, 2, 1, 3)))
        assert not verify_sba(inst, inst.demands, late)
        assert not verify_sba(inst, {(2, 3), (0, 3)}, sba)


class TestSolvers:
    def test_upset_is_fixed(self):
        inst = upset_instance()
        seeding = solve_xp(inst)
        sba, _ = simulate(inst.tournament, seeding)
        assert sba.arc_set() == {(3, 0), (1, 3), (1, 2)}

    def test_upset_fpt(self):
        inst = upset_instance()
        seeding = solve_fpt(inst)
        assert check_solution(inst, seeding).ok

    def test_fpt_needs_demand_parents_on_upset_losers(self):
        inst = make_instance(acyclic(4).with_reversed([(0, 3)]))
        with pytest.raises(PropertyOneViolated):
            solve_fpt(inst)

    @pytest.mark.parametrize(
        "solver", [oracle_solve, dp_solve, solve_xp, solve_fpt], ids=["oracle", "dp", "xp", "fpt"]
    )
    def test_repeated_loser_is_no_without_search(self, solver, caplog):
        inst = make_instance(acyclic(4), [(0, 3), (1, 3)])
        caplog.set_level(logging.INFO, logger="bracketfix")
        assert solver(inst) is None
        assert "trivially no" in caplog.text
        assert "fixing passes" not in caplog.text

    def test_acyclic_no_instance(self):
        # 0 plays at most two matches
        inst = make_instance(acyclic(4), [(0, 1), (0, 2), (0, 3)])
        assert solve_xp(inst) is None
        assert dp_solve(inst) is None

    def test_guards(self):
        inst = upset_instance()
        with pytest.raises(TooLarge):
            solve_xp(inst, max_n=2)
        with pytest.raises(TooLarge):
            solve_xp(inst, max_k=0)

    def test_xp_matches_dp(self):
        for inst in small_instances(40):
            assert_fixer_agrees(inst)

    def test_fpt_matches_xp_when_applicable(self):
        ran = 0
        for inst in small_instances(60):
            fs = minimum_fas(inst.tournament)
            if inst.trivially_no or not fs.heads <= inst.lose:
                continue
            ran += 1
            expected = solve_xp(inst, fs=fs) is not None
            assert (solve_fpt(inst, fs=fs) is not None) == expected
            assert (dp_solve(inst) is not None) == expected
        assert ran > 0

    def test_fpt_on_demanded_upsets(self):
        for inst in upset_demand_instances(20, sizes=(4, 8), max_k=2):
            assert minimum_fas(inst.tournament).arcs <= inst.demands
            seeding = solve_fpt(inst)
            assert (seeding is not None) == (dp_solve(inst) is not None)
            assert (seeding is not None) == (solve_xp(inst) is not None)

    @pytest.mark.slow
    def test_fpt_on_demanded_upsets_sweep(self):
        for inst in upset_demand_instances(50, sizes=(8, 16), max_k=3):
            assert (solve_fpt(inst) is not None) == (dp_solve(inst) is not None)

    @pytest.mark.slow
    def test_xp_matches_dp_sweep(self):
        for seed in range(200):
            rng = random.Random(seed)
            n = rng.choice((4, 8, 16))
            mode = "yes" if seed % 2 == 0 else "uniform"
            inst = validate_instance(gen_instance(n, rng.randint(0, 3), rng.randint(1, min(4, n - 1)), mode=mode, seed=seed))
            assert_fixer_agrees(inst)

    @pytest.mark.slow
    def test_thirty_two_players_one_upset(self):
        inst = validate_instance(gen_instance(32, 1, 8, mode="yes", seed=3))
        start = time.perf_counter()
        seeding = solve_xp(inst)
        assert time.perf_counter() - start < 120
        assert check_solution(inst, seeding).ok


class TestRounds:
    def test_loser_plays_later(self):
        inst = make_instance(acyclic(4), [(0, 1), (1, 2)], rounds={(0, 1): 0, (1, 2): 1})
        with pytest.raises(RoundConflict):
            check_round_conflicts(inst)

    def test_two_wins_in_one_round(self):
        inst = make_instance(acyclic(4), [(0, 1), (0, 2)], rounds={(0, 1): 0, (0, 2): 0})
        with pytest.raises(RoundConflict):
            solve_with_rounds(inst)

    def test_too_many_wins_before_loss(self):
        inst = make_instance(acyclic(4), [(0, 1), (1, 2)], rounds={(0, 1): 0})
        with pytest.raises(RoundConflict):
            solve_xp(inst)

    def test_consistent_pins(self):
        inst = make_instance(acyclic(4), [(0, 1), (0, 2)], rounds={(0, 1): 1, (0, 2): 0})
        check_round_conflicts(inst)
        seeding = solve_with_rounds(inst)
        assert check_solution(inst, seeding).ok

    def test_pinned_upset(self):
        inst = make_instance(acyclic(4).with_reversed([(0, 3)]), [(3, 0)], rounds={(3, 0): 0})
        seeding = solve_with_rounds(inst, fpt=True)
        _, matches = simulate(inst.tournament, seeding)
        assert any(m.arc == (3, 0) and m.round == 0 for m in matches)

    def test_unreachable_round(self):
        # 3 beats nobody but 0, so it cannot reach 0 in the final
        inst = make_instance(acyclic(4).with_reversed([(0, 3)]), [(3, 0)], rounds={(3, 0): 1})
        check_round_conflicts(inst)
        assert solve_with_rounds(inst) is None
        assert oracle_solve(inst) is None
        assert dp_solve(inst) is None

    def test_realized_rounds_are_honoured(self):
        for seed in range(100):
            rng = random.Random(seed)
            n = rng.choice((4, 8))
            t = gen_tournament(n, rng.randint(0, 2 if n == 4 else 1), rng)
            order = list(range(n))
            rng.shuffle(order)
            _, matches = simulate(t, Seeding(order=tuple(order)))
            chosen = rng.sample(matches, rng.randint(1, n - 1))
            inst = make_instance(t, [m.arc for m in chosen], rounds={m.arc: m.round for m in chosen})
            seeding = solve_with_rounds(inst)
            assert seeding is not None
            report = check_solution(inst, seeding)
            assert report.ok
            assert not report.round_violations

    def test_matches_oracle(self):
        for seed in range(100):
            rng = random.Random(seed)
            n = rng.choice((4, 8))
            k = rng.randint(0, 2 if n == 4 else 1)
            raw = gen_instance(n, k, rng.randint(1, min(3, n - 1)), mode="uniform", seed=seed, with_rounds=True)
            inst = validate_instance(raw)
            expected = oracle_solve(inst) is not None
            try:
                seeding = solve_with_rounds(inst)
            except RoundConflict:
                assert not expected
                continue
            assert (seeding is not None) == expected
            if seeding is not None:
                assert check_solution(inst, seeding).ok
