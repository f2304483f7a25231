"""Acceptance gate: one test per published correctness criterion.

Each test prints a single `ACCEPTANCE <name>: PASS|FAIL` line (outside
pytest's capture) and then asserts, so the gate status is readable straight
off a `pytest -v` run.
"""

import json
import subprocess
import sys
import time
from itertools import product

import numpy as np
import pytest

from spinpaths.chain import (
    ChainGeometry,
    bethe_ground_state,
    build_sector_hamiltonian,
    enumerate_bethe_sets,
    ground_state_energy_closed_form,
    hopping_power,
    sector_basis,
)
from spinpaths.correlators import (
    equality_of_sums_report,
    multi_particle_g_detailed,
    persistence_exact,
    persistence_spectral,
    trig_path_count,
)
from spinpaths.partitions import (
    boxed_partitions,
    lambda_to_mu,
    mu_to_lambda,
)
from spinpaths.paths import count_random_turns_paths, enumerate_nests
from spinpaths.qpoly import (
    macmahon_count,
    macmahon_z,
    q_binomial_extended,
    qpoly_matrix_det,
)
from spinpaths.schur import (
    cauchy_binet_closed,
    cauchy_binet_enum,
    projection_average_q,
    schur_determinant,
    schur_from_monomials,
    schur_monomials,
)

RNG = np.random.default_rng(2026)


def report(capsys, name, ok):
    with capsys.disabled():
        print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def random_point(n):
    return RNG.normal(size=n) + 1j * RNG.normal(size=n)


def test_01_coordinate_dictionary(capsys):
    """Coordinates (8,5,3,2) on the 4-walker chain map to shape (5,3,2,2)."""
    start = time.perf_counter()
    ok = (mu_to_lambda((8, 5, 3, 2)) == (5, 3, 2, 2)
          and lambda_to_mu((5, 3, 2, 2), 4) == (8, 5, 3, 2))
    ok = ok and (time.perf_counter() - start) < 0.5
    report(capsys, "01-coordinate-dictionary", ok)


def test_02_nest_step_vector(capsys):
    """Nests of shape (6,3,3,1) with 4 walkers include step counts (4,3,3,3)."""
    vectors = {nest.step_counts for nest in enumerate_nests((6, 3, 3, 1), 4)}
    report(capsys, "02-nest-step-vector", (4, 3, 3, 3) in vectors)


def test_03_schur_dual_oracle(capsys):
    """Determinant vs tableau evaluation, all shapes of weight <= 8 in <= 4
    variables, 20 random complex points each, 1e-10 relative."""
    ok = True
    for nvar in range(1, 5):
        for lam in boxed_partitions(nvar, 8):
            if sum(lam) > 8:
                continue
            monomials = schur_monomials(lam, nvar)
            for _ in range(20):
                x = random_point(nvar)
                d = schur_determinant(lam, x)
                e = schur_from_monomials(monomials, x)
                if abs(d - e) > 1e-10 * max(1.0, abs(e)):
                    ok = False
    report(capsys, "03-schur-dual-oracle", ok)


def test_04_cauchy_binet(capsys):
    """Boxed Schur-pair sum vs determinant closed form, 1e-9 relative,
    n <= 4 variables, box depth <= 5, 20 trials, one hitting x*y = 1."""
    ok = True
    for trial in range(20):
        nvar = int(RNG.integers(1, 5))
        depth = int(RNG.integers(0, 6))          # box width bound
        shift = int(RNG.integers(0, 3))
        length = depth + shift
        x = random_point(nvar)
        y = random_point(nvar)
        if trial == 0:
            y[0] = 1.0 / x[0]                     # removable singularity
        a = cauchy_binet_enum(x, y, length, shift)
        b = cauchy_binet_closed(x, y, length, shift)
        if abs(a - b) > 1e-9 * max(1.0, abs(a)):
            ok = False
    report(capsys, "04-cauchy-binet", ok)


def test_05_q_identity_chain(capsys):
    """Schur pair sum at q-powers == shifted q-binomial determinant ==
    shifted box generating function, exact polynomials, N <= 3, box <= 3."""
    ok = True
    for nvar in range(1, 4):
        for depth in range(0, 4):
            for shift in range(0, 3):
                m = nvar - 1 + depth + shift
                if m < 1:
                    continue
                lhs = projection_average_q(nvar, m, shift)
                mat = [[q_binomial_extended(2 * nvar + i - 1, nvar + j - 1)
                        for j in range(1, depth + 1)]
                       for i in range(1, depth + 1)]
                exponent = shift * nvar ** 2 + (nvar * depth * (1 - depth)) // 2
                mid = qpoly_matrix_det(mat).shifted(exponent)
                rhs = macmahon_z(nvar, depth).shifted(shift * nvar ** 2)
                if not (lhs == mid == rhs):
                    ok = False
    report(capsys, "05-q-identity-chain", ok)


def brute_force_boxed_plane_partitions(n, k):
    count = 0
    for flat in product(range(k + 1), repeat=n * n):
        arr = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(arr[i][j] >= arr[i][j + 1]
               for i in range(n) for j in range(n - 1)) and \
           all(arr[i][j] >= arr[i + 1][j]
               for i in range(n - 1) for j in range(n)):
            count += 1
    return count


def test_06_box_counting(capsys):
    """Closed-form boxed plane-partition counts vs brute force, N,K <= 3."""
    ok = True
    for n in range(1, 4):
        for k in range(0, 4):
            if macmahon_count(n, k) != brute_force_boxed_plane_partitions(n, k):
                ok = False
    ok = ok and macmahon_count(2, 2) == 20
    report(capsys, "06-box-counting", ok)


def test_07_path_count_triple(capsys):
    """Hop-matrix power == exact walker DP == rounded trigonometric sum,
    M <= 6, N <= 3, up to 8 steps."""
    ok = True
    for m in range(1, 7):
        # single walker: all three routes entrywise
        for k in range(0, 9):
            power = hopping_power(m, k)
            geom = ChainGeometry(m, 1)
            for j in range(m + 1):
                for l in range(m + 1):
                    dp = count_random_turns_paths((j,), (l,), k, m)
                    if power[j, l] != dp:
                        ok = False
                    if trig_path_count(geom, (j,), (l,), k) != dp:
                        ok = False
        # more walkers: DP vs trigonometric sum on sampled endpoint pairs
        for n in (2, 3):
            if n > m:
                continue
            geom = ChainGeometry(m, n)
            basis = sector_basis(geom)
            for k in range(0, 9):
                for _ in range(4):
                    j = basis[RNG.integers(len(basis))]
                    l = basis[RNG.integers(len(basis))]
                    dp = count_random_turns_paths(j, l, k, m)
                    if trig_path_count(geom, j, l, k) != dp:
                        ok = False
    report(capsys, "07-path-count-triple", ok)


def test_08_determinant_vs_spectral(capsys):
    """Many-walker generating function: one-walker determinant route vs
    momentum-subset spectral sum, 1e-9, N = 2,3, M <= 5, 10 random times."""
    ok = True
    for n in (2, 3):
        for m in range(n, 6):
            geom = ChainGeometry(m, n)
            basis = sector_basis(geom)
            for _ in range(10):
                t = float(RNG.uniform(0.0, 1.0))
                j = basis[RNG.integers(len(basis))]
                l = basis[RNG.integers(len(basis))]
                res = multi_particle_g_detailed(geom, j, l, t)
                if res.route_residuals and \
                        res.route_residuals["det_vs_spectral"] > 1e-9:
                    ok = False
    report(capsys, "08-determinant-vs-spectral", ok)


def test_09_equality_of_sums(capsys):
    """Trigonometric sum == weighted walker count, all M <= 5, N <= 2,
    exclusion shift <= 2, up to 6 steps; plus an M = 6, N = 3 spot check."""
    ok = True
    for m in range(1, 6):
        for n in range(1, 3):
            if n > m:
                continue
            geom = ChainGeometry(m, n)
            for shift in range(0, min(2, geom.k_cap) + 1):
                for steps in range(0, 7):
                    if not equality_of_sums_report(geom, shift, steps)["pass"]:
                        ok = False
    spot = equality_of_sums_report(ChainGeometry(6, 3), 1, 4)
    ok = ok and spot["pass"] and spot["rhs"] == 204386
    report(capsys, "09-equality-of-sums", ok)


def test_10_momentum_spectrum(capsys):
    """Momentum-set energies match dense diagonalization to 1e-8 for
    M <= 7 and every walker number; ground energy matches the closed form."""
    ok = True
    for m in range(1, 8):
        for n in range(0, m + 2):
            geom = ChainGeometry(m, n)
            dense = np.sort(np.linalg.eigvalsh(build_sector_hamiltonian(geom)))
            fromsets = np.sort([s.energy for s in enumerate_bethe_sets(geom)])
            if not np.allclose(dense, fromsets, atol=1e-8):
                ok = False
            if 1 <= n <= m:
                ground = bethe_ground_state(geom).energy
                closed = ground_state_energy_closed_form(geom)
                if abs(ground - closed) > 1e-10 or \
                        abs(ground - dense[0]) > 1e-8:
                    ok = False
    report(capsys, "10-momentum-spectrum", ok)


def test_11_persistence(capsys):
    """Projected-evolution ratio: spectral formula vs dense diagonalization
    to 1e-8 for M <= 6, N <= 2, shift <= 2, t in {0, 0.5, 1}; the
    unprojected ratio equals 1 to 1e-10."""
    ok = True
    for m in range(1, 7):
        for n in range(1, 3):
            if n > m:
                continue
            geom = ChainGeometry(m, n)
            for shift in range(0, min(2, geom.k_cap) + 1):
                for t in (0.0, 0.5, 1.0):
                    sp = persistence_spectral(geom, shift, t)
                    ex = persistence_exact(geom, shift, t)
                    if abs(sp - ex) > 1e-8 * max(1.0, abs(ex)):
                        ok = False
                    if shift == 0 and abs(sp - 1.0) > 1e-10:
                        ok = False
    report(capsys, "11-persistence", ok)


def run_cli(argv):
    return subprocess.run([sys.executable, "-m", "spinpaths.cli", *argv],
                          capture_output=True, text=True)


def test_12_cli_contract(capsys):
    """Every verb is byte-identical across repeated runs; exit codes follow
    the 0/1/2/3 contract (ok / check failed / bad input / size cap)."""
    verbs = [
        ["schur", "--shape", "2,1", "--vars", "3", "--at-ones"],
        ["paths", "--count", "--start", "1,0", "--end", "2,0",
         "--steps", "4", "--m", "4"],
        ["chain-spectrum", "--m", "4", "--n", "2"],
        ["correlator", "--kind", "persistence", "--m", "4", "--n", "2",
         "--string-n", "1", "--t", "0.5"],
        ["verify", "cauchy-binet", "--n", "3", "--trials", "5", "--seed", "3"],
        ["sweep", "macmahon", "--box-n", "1..3", "--box-k", "0..3"],
    ]
    ok = True
    for argv in verbs:
        a, b = run_cli(argv), run_cli(argv)
        if a.returncode != 0 or a.stdout != b.stdout or a.stderr != b.stderr:
            ok = False
    bad = run_cli(["schur", "--shape", "1,2", "--vars", "2", "--at-ones"])
    ok = ok and bad.returncode == 2
    capped = run_cli(["chain-spectrum", "--m", "40", "--n", "20"])
    ok = ok and capped.returncode == 3

    # exit 1 is the only code not reachable from healthy inputs; drive the
    # dispatcher with a stubbed failing check to pin the contract
    from spinpaths import cli as climod

    original = climod.VERIFIERS["macmahon"]
    try:
        climod.VERIFIERS["macmahon"] = lambda args: [
            {"identity": "macmahon", "pass": False, "residual": 1.0}]
        code = climod.main(["verify", "macmahon"])
    finally:
        climod.VERIFIERS["macmahon"] = original
    ok = ok and code == 1
    report(capsys, "12-cli-contract", ok)
