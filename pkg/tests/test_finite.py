import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from evoalg import linalg
from evoalg.algebra import EvolutionAlgebra, is_ideal, is_nilpotent, is_subalgebra
from evoalg.corpus import ek
from evoalg.errors import BudgetExceeded, NotFiniteField
from evoalg.finite import (
    DEFAULT_BUDGET,
    FiniteEngine,
    count_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    rref_mod,
)
from evoalg.scalars import GF, QQ
from evoalg.verify import random_algebra


def distinct_spans(p, n):
    """Subspaces of GF(p)^n as frozensets of points, spanned by every pair of vectors."""
    pts = list(product(range(p), repeat=n))
    seen = set()
    for u in pts:
        for v in pts:
            span = frozenset(tuple((a * x + b * y) % p for x, y in zip(u, v)) for a in range(p) for b in range(p))
            seen.add(span)
    return seen


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 5) == 6
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(3, 2, 3) == 13
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 4, 3) == 0
    assert count_subspaces(3, 3) == 28
    assert count_subspaces(5, 2) == 8


@pytest.mark.parametrize("p,n", [(3, 2), (5, 2), (3, 3)])
def test_subspace_count_matches_point_sets(p, n):
    # every subspace of dimension <= 2 is spanned by two vectors
    low = distinct_spans(p, n)
    expected = sum(gaussian_binomial(n, k, p) for k in range(min(n, 2) + 1))
    assert len(low) == expected
    E = EvolutionAlgebra.zero_algebra(GF(p), n)
    subs = list(enumerate_subspaces(E))
    assert len(subs) == count_subspaces(p, n)
    assert len(set(subs)) == len(subs)


@settings(max_examples=150)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.integers(1, 4), st.data())
def test_rref_mod_matches_linalg(p, r, c, data):
    rows = [[data.draw(st.integers(-20, 20)) for _ in range(c)] for _ in range(r)]
    F = GF(p)
    expected = linalg.Subspace.span(F, c, rows)
    assert tuple(tuple(x.v for x in row) for row in expected.rows) == rref_mod(rows, p)


def test_budget_and_field_errors():
    with pytest.raises(NotFiniteField):
        FiniteEngine(EvolutionAlgebra.zero_algebra(QQ, 2))
    with pytest.raises(BudgetExceeded):
        FiniteEngine(EvolutionAlgebra.zero_algebra(GF(5), 5))
    with pytest.raises(BudgetExceeded):
        FiniteEngine(EvolutionAlgebra.zero_algebra(GF(3), 3), budget=27)
    assert count_subspaces(3, 5) <= DEFAULT_BUDGET < count_subspaces(3, 6)


def test_engine_predicates_match_exact_predicates():
    rng = random.Random(7)
    for _ in range(20):
        E = random_algebra(GF(3), 3, rng, sparse=True)
        eng = FiniteEngine(E)
        for s in eng.space:
            U = eng.to_subspace(s)
            assert eng.is_subalgebra(s) == is_subalgebra(E, U)
            assert eng.is_ideal(s) == is_ideal(E, U)
            if eng.is_ideal(s):
                assert eng.is_nilpotent(s) == is_nilpotent(E, U)


def test_e2_subalgebras_gf5():
    E = ek(2, [1, -1], GF(5))
    eng = FiniteEngine(E)
    subs = set(eng.to_subspace(s) for s in eng.subalgebras())
    assert subs == {E.zero(), E.whole(), E.span([[1, 1]]), E.span([[1, -1]])}
    assert set(eng.maximal_subalgebras()) == {E.span([[1, 1]]), E.span([[1, -1]])}
    assert eng.to_subspace(eng.frattini_fsub()).is_zero()


def test_frattini_of_zero_algebra_is_zero():
    eng = FiniteEngine(EvolutionAlgebra.zero_algebra(GF(3), 2))
    assert len(eng.maximal_fsubs()) == 4
    assert eng.frattini_fsub().dim == 0


def test_lookup_unknown_mask():
    eng = FiniteEngine(EvolutionAlgebra.zero_algebra(GF(3), 1))
    with pytest.raises(KeyError):
        eng.lookup(0b110)
