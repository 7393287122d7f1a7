"""End-to-end acceptance checks, one per criterion, each with a wall-clock limit.

Every test prints a single ``PASS``/``FAIL`` line (with elapsed time) straight
to the terminal, then asserts.
"""
import random
import time
from contextlib import contextmanager

import pytest

from evoalg.algebra import is_ideal, is_nilpotent, subspace_product
from evoalg.classify import dually_atomistic_structural
from evoalg.corpus import (
    e2m_direct_sum,
    e_n1,
    e_n2,
    ek,
    ex3_2_eightdim,
    ex3_two_maximal_nilradicals,
    ex4_phi_nonzero,
    ex4_snil_sq_not_ideal,
    ex5_dually_atomistic,
    ex_nil_ne_snil,
)
from evoalg.finite import FiniteEngine
from evoalg.frattini import frattini_ideal, frattini_subalgebra, phi_free_necessary
from evoalg.lattice import build_lattice, dually_atomistic
from evoalg.radicals import nilradical_if_exists, sn_series, snil
from evoalg.report import analyze
from evoalg.scalars import GF, QQ
from evoalg.tk import ann_of_derived, tk_frattini, tk_nilradical
from evoalg.verify import random_tk, run_suite


@contextmanager
def criterion(capsys, number, title, limit):
    """Time the block and print one result line; failures inside still print FAIL."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit}s)")
    assert within, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def test_c1_eightdim_series(capsys):
    with criterion(capsys, 1, "8-dim example: N^1 and snil exact", 1.0):
        E = ex3_2_eightdim()
        report = analyze(E)
        series = sn_series(E)
        N1 = E.span([[-1, 1, 0, 0, 0, 0, 0, 0], [2, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, 0]])
        S = N1.add_vectors([[0, 0, 0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 0, 0, 1, 1]])
        assert series.terms[0] == N1
        assert series.snil == S and series.terms[1] == S
        assert series.n1.rows == N1.rows and series.snil.rows == S.rows  # canonical bases, not just equal spans
        assert report["snil"] == S.to_strings()
        assert report["sn_series"]["terms"][0] == N1.to_strings()


def test_c2_tk_oracle_equality(capsys):
    with criterion(capsys, 2, "T_K nilradical formula = kernel form on 500 instances", 10.0):
        rng = random.Random(2024)
        fields = [QQ, GF(5)]
        for i in range(500):
            F = fields[i % 2]
            n = rng.randint(2, 6)
            E = random_tk(F, n, rng)
            N = tk_nilradical(E)
            assert N == ann_of_derived(E), E.matrix
            assert is_ideal(E, N) and is_nilpotent(E, N) and N.codim == 1


def test_c3_two_maximal_nilpotent_ideals(capsys):
    with criterion(capsys, 3, "two maximal nilpotent ideals, brute force over F_5", 5.0):
        E = ex3_two_maximal_nilradicals()
        N1 = E.span([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]])
        N2 = E.span([[0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]])
        for N in (N1, N2):
            assert is_ideal(E, N) and is_nilpotent(E, N)
        assert is_ideal(E, N1 + N2) and not is_nilpotent(E, N1 + N2)
        assert snil(E).is_zero()
        F = ex3_two_maximal_nilradicals(GF(5))
        maximal = FiniteEngine(F).maximal_nilpotent_ideals()
        expected = {F.span([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]]), F.span([[0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]])}
        assert len(maximal) == 2 and set(maximal) == expected


def test_c4_frattini_brute_force_vs_closed_form(capsys):
    with criterion(capsys, 4, "T_K Frattini brute force = closed form, 200 samples", 60.0):
        rng = random.Random(4)
        zero_cases = 0
        for i in range(200):
            F = GF(3) if i % 2 == 0 else GF(5)
            E = random_tk(F, rng.randint(2, 4), rng)
            Fr, phi = tk_frattini(E)
            assert frattini_subalgebra(E) == Fr, E.matrix
            assert frattini_ideal(E) == phi, E.matrix
            zero_cases += Fr.is_zero()
        assert 0 < zero_cases < 200  # both branches of the closed form occur


def test_c5_phi_nonzero_example(capsys):
    with criterion(capsys, 5, "phi(E) = span{e1,e2} over F_5, necessary conditions pass", 5.0):
        E = ex4_phi_nonzero(GF(5))
        assert frattini_ideal(E) == E.span([[1, 0, 0], [0, 1, 0]])
        nec = phi_free_necessary(E)
        assert nec.bnil_eq_ann
        assert nec.snil_sq_ideal and nec.snil_eq_asoc1
        assert nec.passes


LISTED_DA = [
    [[1, 0, 0]],
    [[0, 1, 0]],
    [[1, 1, 0]],
    [[1, 1, 2]],
    [[1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, 1, 2]],
    [[0, 1, 0], [1, 0, 2]],
    [[0, 0, 1], [1, 1, 0]],
]


def test_c6_dually_atomistic_example(capsys):
    with criterion(capsys, 6, "dually atomistic example over F_5 with the 8 listed subalgebras", 5.0):
        E = ex5_dually_atomistic(GF(5))
        lat = build_lattice(E)
        listed = {E.span(rows) for rows in LISTED_DA}
        proper = {U for U in lat.nodes if not U.is_zero() and not U.is_full()}
        assert dually_atomistic(E)
        assert listed == proper
        for p in (3, 7):
            G = ex5_dually_atomistic(GF(p))
            nodes = {U for U in build_lattice(G).nodes if not U.is_zero() and not U.is_full()}
            listed_p = {G.span(rows) for rows in LISTED_DA}
            extra = len(nodes - listed_p)
            with capsys.disabled():
                print(
                    f"  F_{p}: {len(nodes)} proper nonzero subalgebras, listed present: {listed_p <= nodes}, "
                    f"extra: {extra}, dually atomistic: {dually_atomistic(G)}"
                )


def test_c7_dual_atomicity_family(capsys):
    with criterion(capsys, 7, "dual atomicity of E_2(1,-1), E_n1, E_n2 and friends over F_3", 30.0):
        F = GF(3)
        yes = [ek(2, [1, -1], F)] + [e_n1(n, F) for n in (2, 3, 4)]
        no = [e_n2(n, F) for n in (2, 3, 4)] + [ek(2, [1, -1, 0], F), e2m_direct_sum(2, F)]
        for E in yes:
            assert dually_atomistic(E) and dually_atomistic_structural(E) is True
        for E in no:
            assert not dually_atomistic(E) and dually_atomistic_structural(E) is False


def test_c8_property_suite(capsys):
    with criterion(capsys, 8, "property suite, dim 3 over F_3, 200 samples", 120.0):
        rep = run_suite(3, 3, 200, seed=0)
        required = {
            "sum_stability",
            "nilpotency_characterization",
            "frattini_in_derived",
            "dually_atomistic_phi_free",
            "supersolvable_maximal_codim1",
            "quotient_multiplicativity",
            "grassmann",
        }
        assert required <= set(rep.checks), rep.checks
        assert rep.passed, rep.summary()


def test_c9_negative_cases(capsys):
    with criterion(capsys, 9, "snil^2 not an ideal; nil != snil", 1.0):
        E = ex4_snil_sq_not_ideal()
        S = snil(E)
        S2 = subspace_product(E, S, S)
        assert S2 == E.span([[1, 1, 0, 0, 0]])
        assert not is_ideal(E, S2)
        G = ex_nil_ne_snil()
        v = nilradical_if_exists(G)
        assert v.status == "not_maximal"
        assert v.snil.is_zero()
