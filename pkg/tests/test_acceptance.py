"""Acceptance suite: every top-level guarantee checked at its stated scale.

Each test prints one PASS line when its criterion holds (run with -s to see
them); any violation fails the test with a counterexample in the message.
All comparisons between bounds are exact rational comparisons, never float.
"""

import math
import random
from fractions import Fraction
from itertools import combinations

from cliquebounds import (
    Graph,
    Justification,
    OracleLimits,
    SeededTieBreak,
    build_beta_sequence,
    certify_alpha_bound,
    certify_beta_bound,
    clique_number_exact,
    clique_number_naive,
    complement,
    independence_number_exact,
    is_delta_set,
    phi_exact,
    wei_bound,
    wei_independence_bound,
    wei_weight,
)
from cliquebounds.generators import complete_multipartite, cycle, gnp, petersen, turan
from cliquebounds.report import SweepConfig, run_sweep

from helpers import all_graphs, seeded_gnp_ensemble

K3_PLUS_3K1 = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2)])

ENSEMBLE_SEED = 20240517
SMALL_SEED = 916501
SWEEP_SEED = 271828


def _passed(line: str) -> None:
    print(f"ACCEPTANCE {line}: PASS")


def test_c01_wei_inequality_on_random_ensemble():
    violations = 0
    for g, n, p in seeded_gnp_ensemble(1000, ENSEMBLE_SEED, 2, 16):
        if not clique_number_exact(g) >= wei_bound(g):
            violations += 1
    assert violations == 0
    _passed("1 clique number dominates W(G) on 1000 G(n,p) instances")


def test_c02_independence_form_and_duality():
    for g, n, p in seeded_gnp_ensemble(1000, ENSEMBLE_SEED, 2, 16):
        assert independence_number_exact(g) >= wei_independence_bound(g), (n, p)
        assert wei_independence_bound(g) == wei_bound(complement(g)), (n, p)
    _passed("2 independence form and complement duality on 1000 instances")


def _nonempty_subsets(n):
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def test_c03_delta_sets_weigh_at_most_one():
    checked = 0
    for n in range(1, 5):
        for g in all_graphs(n):
            for s in _nonempty_subsets(n):
                if is_delta_set(g, s):
                    assert wei_weight(g, s) <= 1, (g, s)
                    checked += 1
    rng = random.Random(SMALL_SEED)
    for n in range(1, 7):
        for _ in range(200):
            g = gnp(n, rng.choice([0.2, 0.5, 0.8]), rng.randrange(2**32))
            for s in _nonempty_subsets(n):
                if is_delta_set(g, s):
                    assert wei_weight(g, s) <= 1, (g, s)
                    checked += 1
    assert checked > 0
    _passed("3 delta-sets weigh at most 1 (exhaustive small + 1200 random graphs)")


def _medium_ensemble(count=300):
    yield from seeded_gnp_ensemble(count, ENSEMBLE_SEED + 1, 1, 10)


def test_c04_phi_dominates_wei():
    for g, n, p in _medium_ensemble():
        assert phi_exact(g) >= wei_bound(g), (n, p)
    _passed("4 phi(G) >= W(G) exactly on 300 instances up to n=10")


def test_c05_alpha_certificate_chain():
    for g, n, p in _medium_ensemble():
        phi = phi_exact(g)
        omega = clique_number_exact(g)
        for seed in range(5):
            cert = certify_alpha_bound(g, SeededTieBreak(seed))
            if cert.justification is Justification.THEOREM_1:
                assert phi <= cert.r <= omega, (n, p, seed)
                assert cert.r >= cert.wei_value, (n, p, seed)
            else:
                assert cert.justification is Justification.CLIQUE_ONLY
                assert cert.r == 1
    _passed("5 theorem-1 certificates satisfy phi <= r <= omega and r >= W(G)")


def test_c06_beta_certificates_and_degree_sum():
    for g, n, p in _medium_ensemble():
        for seed in range(5):
            seq = build_beta_sequence(g, SeededTieBreak(seed))
            degree_sum = sum(g.degrees[v] for v in seq.vertices)
            assert degree_sum <= (seq.r - 1) * g.n, (n, p, seed)
            cert = certify_beta_bound(g, SeededTieBreak(seed))
            assert cert.r >= cert.wei_value, (n, p, seed)
    _passed("6 maximal beta-sequences satisfy the degree-sum bound; r >= W(G)")


def test_c07_turan_equality_family():
    limits = OracleLimits(max_n_phi=15)
    for r in range(2, 6):
        for n in range(r, 16):
            if n % r:
                continue
            g = turan(n, r)
            wei = wei_bound(g)
            assert wei == Fraction(r), (n, r)
            assert phi_exact(g, limits) == r, (n, r)
            assert clique_number_exact(g) == r, (n, r)
    _passed("7 Turan graphs with r | n achieve W = phi = omega = r exactly")


def test_c08_strict_improvement_witness_and_sweep():
    cert = certify_alpha_bound(K3_PLUS_3K1)
    wei = wei_bound(K3_PLUS_3K1)
    assert wei == Fraction(5, 4)
    assert math.ceil(wei) == 2
    assert cert.r == 3 > 2
    result = run_sweep(SweepConfig(n=12, p=0.3, count=200, seed=SWEEP_SEED))
    assert result.improved_count > 0
    _passed(
        "8 K3+3K1 improves on ceil(W); sweep improvement fraction "
        f"{result.fraction:.2f} > 0 (seed {SWEEP_SEED})"
    )


def test_c09_fixture_values():
    c5 = cycle(5)
    assert wei_bound(c5) == Fraction(5, 3)
    assert phi_exact(c5) == 2
    assert clique_number_exact(c5) == 2
    assert certify_alpha_bound(c5).r == 2
    assert certify_beta_bound(c5).r == 2

    pet = petersen()
    assert wei_bound(pet) == Fraction(10, 7)
    assert clique_number_exact(pet) == 2

    octahedron = complete_multipartite([2, 2, 2])
    assert wei_bound(octahedron) == Fraction(3)
    assert phi_exact(octahedron) == 3
    assert clique_number_exact(octahedron) == 3
    _passed("9 fixture values for C5, Petersen, K_{2,2,2} all exact")


def test_c10_oracle_self_validation():
    rng = random.Random(ENSEMBLE_SEED + 2)
    for _ in range(500):
        n = rng.randint(1, 7)
        g = gnp(n, rng.choice([0.2, 0.5, 0.8]), rng.randrange(2**32))
        assert clique_number_exact(g) == clique_number_naive(g)
    _passed("10 branch-and-bound agrees with the naive subset oracle (500 instances)")
