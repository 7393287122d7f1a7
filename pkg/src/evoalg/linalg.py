"""Exact linear algebra over a :class:`~evoalg.scalars.Field`.

Vectors are tuples of scalars; matrices are sequences of such rows.  Every
subspace is stored by its reduced row echelon basis, so two subspaces are
equal exactly when their canonical bases are.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MixedFields
from .scalars import Field, Scalar

Vector = tuple
Matrix = Sequence[Sequence[Scalar]]


def zero_vector(field: Field, n: int) -> Vector:
    z = field.zero
    return (z,) * n


def unit_vector(field: Field, n: int, i: int) -> Vector:
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(n))


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def is_zero(v: Vector) -> bool:
    return not any(v)


def support(v: Vector) -> frozenset[int]:
    return frozenset(i for i, a in enumerate(v) if a)


def rref_pivots(rows: Iterable[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped.

    Pivot choice: leftmost column with a nonzero entry among the unfinished
    rows, taking the first such row top-down.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = 1 / row[c]
        if inv != 1:
            row = m[r] = [inv * a for a in row]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    other = m[i]
                    m[i] = [a - f * b for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows: Matrix) -> list[list[Scalar]]:
    """Canonical RREF of ``rows``, keeping the original row count (zero rows at the bottom)."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    red, _ = rref_pivots(rows)
    z = rows[0][0] * 0 if rows[0] else None
    return red + [[z] * len(rows[0]) for _ in range(len(rows) - len(red))]


def rank(rows: Matrix) -> int:
    return len(rref_pivots(rows)[1])


def kernel_vectors(field: Field, rows: Matrix, ncols: int) -> list[Vector]:
    """Basis of the right null space {x : rows . x = 0}."""
    red, pivots = rref_pivots(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def kernel(field: Field, rows: Matrix, ncols: int | None = None) -> "Subspace":
    if ncols is None:
        ncols = len(rows[0])
    return Subspace.span(field, ncols, kernel_vectors(field, rows, ncols))


def left_kernel(field: Field, rows: Matrix) -> "Subspace":
    """{x : x . rows = 0}, i.e. dependencies among the rows."""
    nrows = len(rows)
    if nrows == 0:
        return Subspace.zero(field, 0)
    cols = list(zip(*rows))
    return kernel(field, cols, nrows)


def mat_vec(v: Vector, m: Matrix) -> Vector:
    """Row vector times matrix."""
    ncols = len(m[0])
    out = [v[0] * 0] * ncols if v else []
    for a, row in zip(v, m):
        if a:
            out = [o + a * b for o, b in zip(out, row)]
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> list[Vector]:
    return [mat_vec(row, b) for row in a]


def identity(field: Field, n: int) -> list[Vector]:
    return [unit_vector(field, n, i) for i in range(n)]


def inverse(field: Field, m: Matrix) -> list[Vector]:
    n = len(m)
    aug = [list(r) + list(e) for r, e in zip(m, identity(field, n))]
    red, pivots = rref_pivots(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [tuple(r[n:]) for r in red]


def _check(a: "Subspace", b: "Subspace") -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"ambient dimensions {a.n} and {b.n}")
    if a.field != b.field:
        raise MixedFields(f"{a.field} and {b.field}")


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field**n`` held by its canonical RREF basis."""

    field: Field
    n: int
    rows: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        vecs = [field.vector(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in dimension {n}")
        red, piv = rref_pivots(vecs)
        return cls(field, n, tuple(tuple(r) for r in red), tuple(piv))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, tuple(identity(field, n)), tuple(range(n)))

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        """span{e_i : i in indices}."""
        idx = sorted(set(indices))
        return cls(field, n, tuple(unit_vector(field, n, i) for i in idx), tuple(idx))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.n - len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.n

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Representative of ``v + self`` vanishing on every pivot coordinate."""
        v = list(v)
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.n}")
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        _check(self, other)
        return all(r in self for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __lt__(self, other: "Subspace") -> bool:
        return other.contains(self) and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        _check(self, other)
        if not other.rows:
            return self
        if not self.rows:
            return other
        return Subspace.span(self.field, self.n, self.rows + other.rows)

    def add_vectors(self, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        if not vecs:
            return self
        return Subspace.span(self.field, self.n, self.rows + tuple(vecs))

    def __and__(self, other: "Subspace") -> "Subspace":
        _check(self, other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.field, self.n)
        if other.is_full():
            return self
        if self.is_full():
            return other
        # other = {x : y.x = 0 for y in eqs}; solve for coefficients on self.rows
        eqs = kernel_vectors(self.field, other.rows, self.n)
        system = [[sum((y[j] * r[j] for j in range(self.n)), self.field.zero) for r in self.rows] for y in eqs]
        coeffs = kernel_vectors(self.field, system, self.dim)
        return Subspace.span(self.field, self.n, (mat_vec(c, self.rows) for c in coeffs))

    def support(self) -> frozenset[int]:
        s: set[int] = set()
        for r in self.rows:
            s.update(i for i, a in enumerate(r) if a)
        return frozenset(s)

    def restrict(self, v: Sequence[Scalar], indices: Iterable[int]) -> Vector:
        """Coordinate projection of ``v`` onto span{e_i : i in indices}."""
        keep = set(indices)
        z = self.field.zero
        return tuple(a if i in keep else z for i, a in enumerate(v))

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ``v`` in the canonical basis; ``v`` must lie in the subspace."""
        if v not in self:
            raise ValueError("vector not in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def to_strings(self) -> list[list[str]]:
        return [[self.field.fmt(a) for a in r] for r in self.rows]

    def __repr__(self):
        body = ", ".join("(" + ", ".join(str(a) for a in r) + ")" for r in self.rows)
        return f"Subspace[{self.field}^{self.n}]({body})"


def span(field: Field, n: int, vectors) -> Subspace:
    return Subspace.span(field, n, vectors)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def reduce_mod(s: Subspace, v: Sequence[Scalar]) -> Vector:
    return s.reduce(v)
