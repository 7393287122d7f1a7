"""Finite-dimensional evolution algebras relative to a fixed natural basis.

Coordinates are always taken in the natural basis ``e_0, ..., e_{n-1}``
(0-based in code; reports print ``e1 ... en``).  Row ``i`` of the structure
matrix holds the coordinates of ``e_i^2``; distinct basis vectors multiply to
zero.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, MixedFields, NotAnIdeal, NotASubalgebra
from .linalg import Subspace, Vector
from .scalars import Field, Scalar


@dataclass(frozen=True)
class EvolutionAlgebra:
    field: Field
    matrix: tuple[Vector, ...]

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "EvolutionAlgebra":
        n = len(rows)
        mat = tuple(field.vector(r) for r in rows)
        for r in mat:
            if len(r) != n:
                raise DimensionMismatch(f"structure matrix is not square ({n} rows, row of length {len(r)})")
        return cls(field, mat)

    @classmethod
    def zero_algebra(cls, field: Field, n: int) -> "EvolutionAlgebra":
        return cls(field, tuple(linalg.zero_vector(field, n) for _ in range(n)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def square(self, i: int) -> Vector:
        """Coordinates of e_i^2."""
        return self.matrix[i]

    def basis_vector(self, i: int) -> Vector:
        return linalg.unit_vector(self.field, self.dim, i)

    def vector(self, coords) -> Vector:
        v = self.field.vector(coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.dim}")
        return v

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        """uv = sum_i u_i v_i e_i^2."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("operand length differs from algebra dimension")
        out = [self.field.zero] * self.dim
        for a, b, row in zip(u, v, self.matrix):
            if a and b:
                c = a * b
                out = [o + c * x for o, x in zip(out, row)]
        return tuple(out)

    def span(self, vectors) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def coordinate(self, indices) -> Subspace:
        return Subspace.coordinate(self.field, self.dim, indices)

    @cached_property
    def nonzero_squares(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.matrix) if any(r))

    def is_abelian(self) -> bool:
        return not self.nonzero_squares

    def __str__(self):
        lines = []
        for i, row in enumerate(self.matrix):
            terms = [f"{c}*e{j + 1}" if c != 1 else f"e{j + 1}" for j, c in enumerate(row) if c]
            lines.append(f"e{i + 1}^2 = " + (" + ".join(terms) if terms else "0"))
        return "\n".join(lines)


def multiply(E: EvolutionAlgebra, u, v) -> Vector:
    return E.multiply(u, v)


def support(v: Sequence[Scalar]) -> frozenset[int]:
    return linalg.support(v)


def support_subspace(U: Subspace) -> frozenset[int]:
    return U.support()


def annihilator(E: EvolutionAlgebra) -> Subspace:
    """span{e_i : e_i^2 = 0}."""
    return E.coordinate(i for i in range(E.dim) if i not in set(E.nonzero_squares))


def subspace_product(E: EvolutionAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of all products uv, u in U, v in V (pairs of basis vectors suffice)."""
    if U.is_zero() or V.is_zero():
        return E.zero()
    prods = []
    if U is V or U == V:
        rows = U.rows
        for i, a in enumerate(rows):
            for b in rows[i:]:
                prods.append(E.multiply(a, b))
    else:
        for a in U.rows:
            for b in V.rows:
                prods.append(E.multiply(a, b))
    return E.span(prods)


def derived(E: EvolutionAlgebra) -> Subspace:
    """E^2 = span{e_i^2}."""
    return E.span(E.matrix)


def ideal_product(E: EvolutionAlgebra, U: Subspace) -> Subspace:
    """E.U, which for an evolution algebra equals span{e_k^2 : k in supp(U)}."""
    return E.span(E.matrix[k] for k in sorted(U.support()))


def is_subalgebra(E: EvolutionAlgebra, U: Subspace) -> bool:
    rows = U.rows
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if E.multiply(a, b) not in U:
                return False
    return True


def is_ideal(E: EvolutionAlgebra, U: Subspace) -> bool:
    # e_k . u = u_k e_k^2, so E.U is spanned by the squares over supp(U)
    return all(E.matrix[k] in U for k in U.support())


def is_basic_ideal(E: EvolutionAlgebra, U: Subspace) -> bool:
    return is_ideal(E, U) and U == E.coordinate(U.support())


def support_closure(E: EvolutionAlgebra, U: Subspace) -> Subspace:
    return E.coordinate(U.support())


def generated_ideal(E: EvolutionAlgebra, vectors) -> Subspace:
    """Smallest ideal containing ``vectors``."""
    J = E.span(vectors)
    while True:
        nxt = J.add_vectors(E.matrix[k] for k in sorted(J.support()))
        if nxt == J:
            return J
        J = nxt


def largest_ideal_in(E: EvolutionAlgebra, U: Subspace) -> Subspace:
    """Largest ideal of E inside U: keep x in K with x_k e_k^2 in K, until stable."""
    K = U
    while True:
        good = [k for k in range(E.dim) if E.matrix[k] in K]
        nxt = K & E.coordinate(good)
        if nxt == K:
            return K
        K = nxt


class PowerKind(enum.Enum):
    RIGHT = "right"  # U^<k+1> = U^<k> U
    PRINCIPAL = "principal"  # U^{k+1} = sum_i U^i U^{k+1-i}
    DERIVED = "derived"  # U^(k+1) = U^(k) U^(k)


def power_sequence(E: EvolutionAlgebra, U: Subspace, kind: PowerKind, max_k: int) -> list[Subspace]:
    """The first ``max_k`` terms (index 1..max_k) of the chosen power chain of ``U``."""
    if not is_subalgebra(E, U):
        raise NotASubalgebra("power sequences need a subalgebra")
    terms = [U]
    while len(terms) < max_k:
        last = terms[-1]
        if last.is_zero():
            terms.append(last)
            continue
        if kind is PowerKind.RIGHT:
            nxt = subspace_product(E, last, U)
        elif kind is PowerKind.DERIVED:
            nxt = subspace_product(E, last, last)
        else:
            k = len(terms)
            nxt = E.zero()
            for i in range(1, k + 1):
                nxt = nxt + subspace_product(E, terms[i - 1], terms[k - i])
        terms.append(nxt)
    return terms


def is_nilpotent(E: EvolutionAlgebra, U: Subspace | None = None) -> bool:
    """Right powers of U (default: E) reach 0 within dim(U)+1 steps."""
    U = E.whole() if U is None else U
    if not is_subalgebra(E, U):
        raise NotASubalgebra("nilpotency is defined for subalgebras")
    P = U
    for _ in range(U.dim + 1):
        if P.is_zero():
            return True
        nxt = subspace_product(E, P, U)
        if nxt == P:
            return False
        P = nxt
    return P.is_zero()


def is_solvable(E: EvolutionAlgebra, U: Subspace | None = None) -> bool:
    U = E.whole() if U is None else U
    if not is_subalgebra(E, U):
        raise NotASubalgebra("solvability is defined for subalgebras")
    P = U
    for _ in range(U.dim + 1):
        if P.is_zero():
            return True
        nxt = subspace_product(E, P, P)
        if nxt == P:
            return False
        P = nxt
    return P.is_zero()


@dataclass(frozen=True)
class Quotient:
    """E/I presented on the images of the kept natural basis vectors."""

    parent: EvolutionAlgebra
    ideal: Subspace
    kept: tuple[int, ...]
    algebra: EvolutionAlgebra
    proj: tuple[Vector, ...]  # row j: quotient coordinates of the image of e_j

    def project(self, v: Sequence[Scalar]) -> Vector:
        if not self.kept:
            return ()
        return linalg.mat_vec(tuple(v), self.proj)

    def lift(self, w: Sequence[Scalar]) -> Vector:
        """The preimage of ``w`` supported on the kept indices."""
        out = [self.parent.field.zero] * self.parent.dim
        for c, i in zip(w, self.kept):
            out[i] = c
        return tuple(out)

    def preimage(self, W: Subspace) -> Subspace:
        return self.ideal.add_vectors(self.lift(r) for r in W.rows)

    def image(self, U: Subspace) -> Subspace:
        return Subspace.span(self.parent.field, len(self.kept), (self.project(r) for r in U.rows))


def quotient(E: EvolutionAlgebra, I: Subspace) -> Quotient:
    if not is_ideal(E, I):
        raise NotAnIdeal("can only take the quotient by an ideal")
    F, n = E.field, E.dim
    kept: list[int] = []
    acc = I
    for i in range(n):
        e = E.basis_vector(i)
        if e not in acc:
            kept.append(i)
            acc = acc.add_vectors([e])
    m = len(kept)
    if m == 0:
        empty = EvolutionAlgebra(F, ())
        return Quotient(E, I, (), empty, tuple(() for _ in range(n)))
    # rows of C: basis of I followed by the kept unit vectors; v = x C
    C = list(I.rows) + [E.basis_vector(i) for i in kept]
    Cinv = linalg.inverse(F, C)
    d = I.dim
    proj = tuple(tuple(row[d:]) for row in Cinv)
    mat = tuple(linalg.mat_vec(E.matrix[i], proj) for i in kept)
    return Quotient(E, I, tuple(kept), EvolutionAlgebra(F, mat), proj)


def direct_sum(E1: EvolutionAlgebra, E2: EvolutionAlgebra) -> EvolutionAlgebra:
    if E1.field != E2.field:
        raise MixedFields(f"{E1.field} and {E2.field}")
    z = E1.field.zero
    n1, n2 = E1.dim, E2.dim
    rows = [tuple(r) + (z,) * n2 for r in E1.matrix]
    rows += [(z,) * n1 + tuple(r) for r in E2.matrix]
    return EvolutionAlgebra(E1.field, tuple(rows))


def restrict_to(E: EvolutionAlgebra, indices: Sequence[int]) -> EvolutionAlgebra:
    """The basic subalgebra span{e_i : i in indices} as an algebra on its own.

    Caller guarantees closure (e.g. a basic ideal)."""
    idx = list(indices)
    return EvolutionAlgebra(E.field, tuple(tuple(E.matrix[i][j] for j in idx) for i in idx))


def embed(E: EvolutionAlgebra, indices: Sequence[int], v: Sequence[Scalar]) -> Vector:
    out = [E.field.zero] * E.dim
    for i, c in zip(indices, v):
        out[i] = c
    return tuple(out)


@dataclass(frozen=True)
class OneDimIdeals:
    """All one-dimensional ideals: every line inside ``inside`` plus ``lines``."""

    inside: Subspace
    lines: tuple[Subspace, ...] = dc_field(default=())

    def exists(self) -> bool:
        return not self.inside.is_zero() or bool(self.lines)


def one_dim_ideals(E: EvolutionAlgebra) -> OneDimIdeals:
    W = annihilator(E)
    lines: list[Subspace] = []
    seen = set()
    for k in E.nonzero_squares:
        L = E.span([E.matrix[k]])
        if L in seen:
            continue
        seen.add(L)
        if L.rows[0] in W:
            continue
        if is_ideal(E, L):
            lines.append(L)
    return OneDimIdeals(W, tuple(lines))


def _first_line(E: EvolutionAlgebra, odi: OneDimIdeals) -> Subspace:
    if odi.lines:
        return odi.lines[0]
    return E.span([odi.inside.rows[0]])


def supersolvable_flag(E: EvolutionAlgebra) -> list[Subspace] | None:
    """A complete flag of ideals 0 < I_1 < ... < I_n = E, or None.

    Quotients of supersolvable algebras are supersolvable, so any choice of
    one-dimensional ideal can be extended: no backtracking is needed and the
    answer is exact over every field.
    """
    if E.dim == 0:
        return [E.zero()]
    odi = one_dim_ideals(E)
    if not odi.exists():
        return None
    L = _first_line(E, odi)
    Q = quotient(E, L)
    sub = supersolvable_flag(Q.algebra)
    if sub is None:
        return None
    return [E.zero()] + [Q.preimage(W) for W in sub]


def is_supersolvable(E: EvolutionAlgebra) -> bool:
    return supersolvable_flag(E) is not None
