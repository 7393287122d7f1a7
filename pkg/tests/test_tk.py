import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from evoalg import linalg
from evoalg.algebra import EvolutionAlgebra, annihilator, derived, is_ideal, is_nilpotent
from evoalg.corpus import ek, e2m_direct_sum
from evoalg.errors import NotTK
from evoalg.finite import FiniteEngine
from evoalg.scalars import GF, QQ
from evoalg.tk import (
    ann_of_derived,
    canonicalize_tk,
    detect_tk,
    split_over_annihilator,
    tk_frattini,
    tk_nilradical,
)
from evoalg.verify import random_tk


def check_form(E, form):
    """g_i^2 computed in E equals the canonical row expressed in the g basis."""
    canon = form.canonical_matrix()
    for i, g in enumerate(form.basis):
        assert E.multiply(g, g) == form.from_canonical(canon[i])
    assert all(form.lambdas[j] for j in range(form.k))
    assert form.lambdas[0] == 1
    assert sum(form.lambdas[: form.k]) == 0
    for i in range(form.n):
        for j in range(i + 1, form.n):
            assert not any(E.multiply(form.basis[i], form.basis[j]))


def test_detect():
    assert detect_tk(ek(2, [1, -1]))
    assert detect_tk(ek(3, [1, -1, 0]))
    assert not detect_tk(EvolutionAlgebra.zero_algebra(QQ, 2))
    assert not detect_tk(e2m_direct_sum(2))  # E^2 has dimension 2
    assert not detect_tk(EvolutionAlgebra.from_rows(QQ, [[1, 0], [0, 0]]))  # not solvable


def test_canonical_form_examples():
    E = ek(3, [1, 1, -2])
    form = canonicalize_tk(E)
    assert (form.n, form.k) == (3, 3)
    check_form(E, form)
    assert tk_nilradical(E) == E.span([[1, 0, Fraction(1, 2)], [0, 1, Fraction(1, 2)]])

    Z = ek(3, [1, -1, 0])
    form = canonicalize_tk(Z)
    assert form.k == 2
    check_form(Z, form)
    assert tk_nilradical(Z) == Z.span([[1, 1, 0], [0, 0, 1]])


def test_canonical_form_over_gf5():
    # w = e1 + 2 e2, e1^2 = e2^2 = w, e3^2 = 3w: e3 lies outside supp(w) yet squares into it
    E = EvolutionAlgebra.from_rows(GF(5), [[1, 2, 0], [1, 2, 0], [3, 1, 0]])
    assert detect_tk(E)
    form = canonicalize_tk(E)
    check_form(E, form)
    assert form.k == 2 and form.lambdas[2] != 0


def test_not_tk_raises():
    with pytest.raises(NotTK):
        canonicalize_tk(EvolutionAlgebra.zero_algebra(QQ, 2))
    with pytest.raises(NotTK):
        tk_frattini(e2m_direct_sum(2))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 5), st.sampled_from([QQ, GF(3), GF(5), GF(7)]))
def test_random_tk_canonical_form(seed, n, F):
    E = random_tk(F, n, random.Random(seed))
    assert detect_tk(E)
    form = canonicalize_tk(E)
    check_form(E, form)
    N = tk_nilradical(E, form)
    assert N == ann_of_derived(E)
    assert N.dim == E.dim - 1
    assert is_ideal(E, N) and is_nilpotent(E, N)
    K, ann = split_over_annihilator(E, form)
    assert (K + ann).is_full() and (K & ann).is_zero()


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (5, 3), (3, 4)])
def test_nilradical_matches_brute_force(p, n):
    rng = random.Random(p * 100 + n)
    for _ in range(15):
        E = random_tk(GF(p), n, rng)
        maximal = FiniteEngine(E).maximal_nilpotent_ideals()
        assert maximal == [tk_nilradical(E)]


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2), (5, 3), (3, 4)])
def test_frattini_matches_brute_force(p, n):
    rng = random.Random(p * 1000 + n)
    for _ in range(15):
        E = random_tk(GF(p), n, rng)
        eng = FiniteEngine(E)
        F_closed, phi_closed = tk_frattini(E)
        assert eng.to_subspace(eng.frattini_fsub()) == F_closed
        assert phi_closed == F_closed


def test_frattini_closed_form_cases():
    assert tk_frattini(ek(2, [1, -1])) == (ek(2, [1, -1]).zero(),) * 2
    # ann has codimension 2 here, so F = 0 even with an annihilator summand
    E = ek(2, [1, -1, 0])
    assert annihilator(E).codim == 2 and tk_frattini(E)[0].is_zero()
    E = ek(3, [1, 1, -2])
    F, phi = tk_frattini(E)
    assert F == derived(E) == phi


def test_ann_of_derived():
    E = ek(2, [1, -1])
    A = ann_of_derived(E)
    for x in A.rows:
        for w in derived(E).rows:
            assert not any(E.multiply(x, w))
    # on T_K with w = e1 + e2, x w = (x1 - x2)(e1 + e2)
    assert A == E.span([[1, 1]])
    assert ann_of_derived(EvolutionAlgebra.zero_algebra(QQ, 2)).is_full()


def test_from_and_to_canonical_are_inverse():
    E = random_tk(QQ, 4, random.Random(9))
    form = canonicalize_tk(E)
    for i in range(4):
        y = linalg.unit_vector(QQ, 4, i)
        assert form.to_canonical_coords(form.from_canonical(y)) == y
