"""The family T_K: solvable, non-nilpotent evolution algebras with E^2 one-dimensional.

Every member has a natural basis ``g_1, ..., g_n`` with
``g_i^2 = lambda_i (g_1 + ... + g_k)``, ``k >= 2``, ``lambda_1 .. lambda_k`` all
nonzero and summing to zero.  :func:`canonicalize_tk` finds such a basis and
normalises ``lambda_1 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import (
    EvolutionAlgebra,
    annihilator,
    derived,
    is_nilpotent,
    is_solvable,
)
from .errors import NotTK
from .linalg import Subspace, Vector
from .scalars import Scalar


@dataclass(frozen=True)
class TKForm:
    n: int
    k: int
    lambdas: tuple[Scalar, ...]
    basis: tuple[Vector, ...]  # row i: canonical g_i in input coordinates
    to_canonical: tuple[Vector, ...]  # inverse of ``basis``

    def canonical_matrix(self) -> tuple[Vector, ...]:
        one = self.lambdas[0] ** 0
        zero = one * 0
        head = tuple(one if j < self.k else zero for j in range(self.n))
        return tuple(tuple(lam * h for h in head) for lam in self.lambdas)

    def canonical_algebra(self, field) -> EvolutionAlgebra:
        return EvolutionAlgebra(field, self.canonical_matrix())

    def from_canonical(self, y) -> Vector:
        return linalg.mat_vec(tuple(y), self.basis)

    def to_canonical_coords(self, x) -> Vector:
        return linalg.mat_vec(tuple(x), self.to_canonical)


def detect_tk(E: EvolutionAlgebra) -> bool:
    D = derived(E)
    if D.dim != 1:
        return False
    return is_solvable(E) and not is_nilpotent(E)


def canonicalize_tk(E: EvolutionAlgebra) -> TKForm:
    """Natural basis change to E_k(1, lambda_2, ..., lambda_n) with lambda_1..lambda_k != 0."""
    if not detect_tk(E):
        raise NotTK("algebra is not in T_K")
    F, n = E.field, E.dim
    D = derived(E)
    w = D.rows[0]
    p = D.pivots[0]
    coef = [E.matrix[i][p] for i in range(n)]  # e_i^2 = coef_i * w
    T = [i for i in range(n) if w[i]]
    lam = {i: (w[i] * w[i] * coef[i] if w[i] else coef[i]) for i in range(n)}
    nz = [i for i in T if lam[i]]
    zr = [i for i in T if not lam[i]]
    rest = [i for i in range(n) if not w[i]]
    order = nz + zr + rest

    # f_i = w_i e_i on supp(w) makes w = sum of the f_i there
    def f(i):
        return linalg.scale(w[i] if w[i] else F.one, E.basis_vector(i))

    lam1 = lam[nz[0]]
    inv = 1 / lam1
    first = f(nz[0])
    for i in zr:
        first = linalg.add(first, f(i))
    basis = [linalg.scale(inv, first)] + [linalg.scale(inv, f(i)) for i in order[1:]]
    lambdas = tuple(lam[i] * inv for i in order)
    to_canon = linalg.inverse(F, basis)
    return TKForm(n, len(nz), lambdas, tuple(basis), tuple(to_canon))


def tk_nilradical(E: EvolutionAlgebra, form: TKForm | None = None) -> Subspace:
    """span{lambda_j g_1 - lambda_1 g_j (2 <= j <= k), g_{k+1}, ..., g_n}, in input coordinates."""
    form = form or canonicalize_tk(E)
    F, n, k, lam = E.field, form.n, form.k, form.lambdas
    gens = []
    for j in range(1, k):
        y = [F.zero] * n
        y[0] = lam[j]
        y[j] = -lam[0]
        gens.append(y)
    for j in range(k, n):
        gens.append(linalg.unit_vector(F, n, j))
    return E.span(form.from_canonical(y) for y in gens)


def ann_of_derived(E: EvolutionAlgebra) -> Subspace:
    """{x : x E^2 = 0}, as the left kernel of the stacked maps x -> x w."""
    D = derived(E)
    if D.is_zero():
        return E.whole()
    rows = []
    for i in range(E.dim):
        r: list[Scalar] = []
        for w in D.rows:
            r.extend(linalg.scale(w[i], E.matrix[i]))
        rows.append(r)
    return linalg.left_kernel(E.field, rows)


def tk_frattini(E: EvolutionAlgebra) -> tuple[Subspace, Subspace]:
    """(F(E), phi(E)) from the closed form: 0 if ann has codimension 2, else E^2."""
    if not detect_tk(E):
        raise NotTK("algebra is not in T_K")
    if annihilator(E).codim == 2:
        return E.zero(), E.zero()
    D = derived(E)
    return D, D


def split_over_annihilator(E: EvolutionAlgebra, form: TKForm | None = None) -> tuple[Subspace, Subspace]:
    form = form or canonicalize_tk(E)
    K = E.span(g for g, lam in zip(form.basis, form.lambdas) if lam)
    return K, annihilator(E)
