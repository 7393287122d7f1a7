"""Named algebras: the standard families and a set of worked examples."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .algebra import EvolutionAlgebra, direct_sum
from .errors import EvoAlgError
from .scalars import QQ, Field


def ek(k: int, lambdas: Sequence, field: Field = QQ) -> EvolutionAlgebra:
    """E_k(lambda_1, ..., lambda_n): e_i^2 = lambda_i (e_1 + ... + e_k)."""
    n = len(lambdas)
    if not 1 <= k <= n:
        raise EvoAlgError(f"need 1 <= k <= n, got k={k}, n={n}")
    lam = [field(x) for x in lambdas]
    return EvolutionAlgebra.from_rows(field, [[l if j < k else 0 for j in range(n)] for l in lam])


def e_n1(n: int, field: Field = QQ) -> EvolutionAlgebra:
    """e_1^2 = e_1, all other squares zero."""
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    return EvolutionAlgebra.from_rows(field, rows)


def e_n2(n: int, field: Field = QQ) -> EvolutionAlgebra:
    """e_1^2 = e_2, all other squares zero (n >= 2)."""
    if n < 2:
        raise EvoAlgError("E_n2 needs n >= 2")
    rows = [[0] * n for _ in range(n)]
    rows[0][1] = 1
    return EvolutionAlgebra.from_rows(field, rows)


def e2m_direct_sum(m: int, field: Field = QQ) -> EvolutionAlgebra:
    """Direct sum of m copies of E_2(1,-1)."""
    block = ek(2, [1, -1], field)
    E = block
    for _ in range(m - 1):
        E = direct_sum(E, block)
    return E


def ex3_two_maximal_nilradicals(field: Field = QQ) -> EvolutionAlgebra:
    """e1^2 = -e2^2 = e3 + e4, e3^2 = -e4^2 = e1 + e2."""
    return EvolutionAlgebra.from_rows(
        field, [[0, 0, 1, 1], [0, 0, -1, -1], [1, 1, 0, 0], [-1, -1, 0, 0]]
    )


def ex3_2_eightdim(field: Field = QQ) -> EvolutionAlgebra:
    return EvolutionAlgebra.from_rows(
        field,
        [
            [1, 1, 1, 0, 0, 0, 0, 0],
            [1, 1, 1, 0, 0, 0, 0, 0],
            [-2, -2, -2, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, -1, 0, 0, 1, 1, 0, 0],
            [4, 0, 2, 0, -1, -1, 0, 0],
            [1, 1, 1, 0, 0, 0, 1, 1],
            [0, 0, 0, 0, 0, 0, -1, -1],
        ],
    )


def ex_nil_ne_snil(field: Field = QQ) -> EvolutionAlgebra:
    """e1^2 = -e2^2 = e1 + e2 + e3 + e4, e3^2 = -e4^2 = e1 + e2."""
    return EvolutionAlgebra.from_rows(
        field, [[1, 1, 1, 1], [-1, -1, -1, -1], [1, 1, 0, 0], [-1, -1, 0, 0]]
    )


def ex4_snil_sq_not_ideal(field: Field = QQ) -> EvolutionAlgebra:
    """e1^2 = -e2^2 = e1+e2+e3, e3^2 = 0, e4^2 = e1+...+e5, e5^2 = -e3-e4-e5."""
    return EvolutionAlgebra.from_rows(
        field,
        [
            [1, 1, 1, 0, 0],
            [-1, -1, -1, 0, 0],
            [0, 0, 0, 0, 0],
            [1, 1, 1, 1, 1],
            [0, 0, -1, -1, -1],
        ],
    )


def ex4_phi_nonzero(field: Field = QQ) -> EvolutionAlgebra:
    """e1^2 = -e2^2 = e1 + e2, e3^2 = e2."""
    return EvolutionAlgebra.from_rows(field, [[1, 1, 0], [-1, -1, 0], [0, 1, 0]])


def ex5_dually_atomistic(field: Field = QQ) -> EvolutionAlgebra:
    """e1^2 = e1, e2^2 = e2, e3^2 = 1/4 e1 + 1/4 e2 + e3 (1/4 read in the field)."""
    q = field(Fraction(1, 4))
    return EvolutionAlgebra.from_rows(field, [[1, 0, 0], [0, 1, 0], [q, q, 1]])


# name -> (builder, parameter names)
CORPUS: dict[str, tuple[Callable[..., EvolutionAlgebra], tuple[str, ...]]] = {
    "ex3_two_maximal_nilradicals": (ex3_two_maximal_nilradicals, ()),
    "ex3_2_eightdim": (ex3_2_eightdim, ()),
    "ex_nil_ne_snil": (ex_nil_ne_snil, ()),
    "ex4_snil_sq_not_ideal": (ex4_snil_sq_not_ideal, ()),
    "ex4_phi_nonzero": (ex4_phi_nonzero, ()),
    "ex5_dually_atomistic": (ex5_dually_atomistic, ()),
    "ek": (ek, ("k", "lambdas")),
    "e_n1": (e_n1, ("n",)),
    "e_n2": (e_n2, ("n",)),
    "e2m_direct_sum": (e2m_direct_sum, ("m",)),
}


def build(name: str, field: Field = QQ, **params) -> EvolutionAlgebra:
    if name not in CORPUS:
        raise EvoAlgError(f"unknown example {name!r}; choose from {', '.join(CORPUS)}")
    fn, names = CORPUS[name]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise EvoAlgError(f"example {name!r} needs {', '.join(missing)}")
    return fn(*(params[p] for p in names), field=field)
