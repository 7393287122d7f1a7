"""Brute force over a prime field: enumerate every subspace of GF(p)^n.

This module deliberately avoids :mod:`evoalg.linalg`.  Vectors are tuples of
ints in ``[0, p)``, each vector has an integer code ``sum v_i p^i`` and a
subspace is held both by its RREF rows and by the bitmask of the codes of all
its points.  Containment and intersection of subspaces are then bitwise
operations, which keeps the enumeration honest as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .algebra import EvolutionAlgebra
from .errors import BudgetExceeded, NotFiniteField
from .linalg import Subspace

# admits GF(3)^5 (2664 subspaces), GF(5)^4 (1120) and GF(7)^4 (3652)
DEFAULT_BUDGET = 4000


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(q: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def rref_mod(rows, p: int) -> tuple[tuple[int, ...], ...]:
    """Canonical RREF over GF(p) with zero rows dropped."""
    m = [[a % p for a in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [a * inv % p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return tuple(tuple(x) for x in m[:r])


@dataclass(frozen=True)
class FSub:
    rows: tuple[tuple[int, ...], ...]
    mask: int

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __le__(self, other: "FSub") -> bool:
        return self.mask & ~other.mask == 0


def _points(rows, p: int, n: int) -> list[tuple[int, ...]]:
    pts = [(0,) * n]
    for r in rows:
        pts = [tuple((a + c * b) % p for a, b in zip(x, r)) for x in pts for c in range(p)]
    return pts


@lru_cache(maxsize=16)
def _all_subspaces(p: int, n: int) -> tuple[FSub, ...]:
    """Every subspace of GF(p)^n, ordered by dimension, pivot set, free entries."""
    weights = [p**i for i in range(n)]
    out = []
    for k in range(n + 1):
        for piv in combinations(range(n), k):
            slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
            for vals in product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(piv):
                    rows[r][pc] = 1
                for (r, c), a in zip(slots, vals):
                    rows[r][c] = a
                rows_t = tuple(tuple(r) for r in rows)
                mask = 0
                for x in _points(rows_t, p, n):
                    mask |= 1 << sum(a * w for a, w in zip(x, weights))
                out.append(FSub(rows_t, mask))
    return tuple(out)


def _require_finite(E: EvolutionAlgebra) -> int:
    if not E.field.is_finite:
        raise NotFiniteField(f"brute force needs a prime field, got {E.field}")
    return E.field.p


def _check_budget(p: int, n: int, budget: int) -> None:
    total = count_subspaces(p, n)
    if total > budget:
        raise BudgetExceeded(f"GF({p})^{n} has {total} subspaces, budget is {budget}")


def enumerate_subspaces(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    p = _require_finite(E)
    _check_budget(p, E.dim, budget)
    for s in _all_subspaces(p, E.dim):
        yield Subspace.span(E.field, E.dim, s.rows)


class FiniteEngine:
    """Subalgebras, ideals and nilpotent ideals of E found by exhaustion."""

    def __init__(self, E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET):
        self.p = p = _require_finite(E)
        self.n = n = E.dim
        _check_budget(p, n, budget)
        self.E = E
        self.M = [[int(a) for a in row] for row in E.matrix]
        self.weights = [p**i for i in range(n)]
        self.space = _all_subspaces(p, n)
        self._subalgebras: list[FSub] | None = None
        self._maximal: list[FSub] | None = None

    # -- arithmetic on int vectors --
    def code(self, v) -> int:
        return sum(a * w for a, w in zip(v, self.weights))

    def mul(self, u, v) -> tuple[int, ...]:
        out = [0] * self.n
        for i in range(self.n):
            c = u[i] * v[i] % self.p
            if c:
                row = self.M[i]
                out = [(o + c * b) % self.p for o, b in zip(out, row)]
        return tuple(out)

    def has(self, s: FSub, v) -> bool:
        return bool(s.mask >> self.code(v) & 1)

    def support(self, s: FSub) -> set[int]:
        return {i for r in s.rows for i, a in enumerate(r) if a}

    # -- predicates --
    def is_subalgebra(self, s: FSub) -> bool:
        rows = s.rows
        for i, a in enumerate(rows):
            for b in rows[i:]:
                if not self.has(s, self.mul(a, b)):
                    return False
        return True

    def is_ideal(self, s: FSub) -> bool:
        return all(self.has(s, self.M[k]) for k in self.support(s))

    def is_nilpotent(self, s: FSub) -> bool:
        P = s.rows
        for _ in range(len(s.rows) + 1):
            if not P:
                return True
            nxt = rref_mod([self.mul(a, b) for a in P for b in s.rows], self.p)
            if nxt == P:
                return False
            P = nxt
        return not P

    # -- enumerations --
    def subalgebras(self) -> list[FSub]:
        if self._subalgebras is None:
            self._subalgebras = [s for s in self.space if self.is_subalgebra(s)]
        return self._subalgebras

    def ideals(self) -> list[FSub]:
        return [s for s in self.space if self.is_ideal(s)]

    def nilpotent_ideals(self) -> list[FSub]:
        return [s for s in self.ideals() if self.is_nilpotent(s)]

    def maximal_fsubs(self) -> list[FSub]:
        if self._maximal is None:
            proper = [s for s in self.subalgebras() if s.dim < self.n]
            self._maximal = [a for a in proper if not any(a.mask != b.mask and a <= b for b in proper)]
        return self._maximal

    def to_subspace(self, s: FSub) -> Subspace:
        return Subspace.span(self.E.field, self.n, s.rows)

    def maximal_subalgebras(self) -> list[Subspace]:
        return [self.to_subspace(s) for s in self.maximal_fsubs()]

    def maximal_nilpotent_ideals(self) -> list[Subspace]:
        nil = self.nilpotent_ideals()
        top = [a for a in nil if not any(a.mask != b.mask and a <= b for b in nil)]
        return [self.to_subspace(s) for s in top]

    def lookup(self, mask: int) -> FSub:
        for s in self.space:
            if s.mask == mask:
                return s
        raise KeyError("mask is not a subspace")

    def frattini_fsub(self) -> FSub:
        """Intersection of the maximal subalgebras; the whole space if there are none."""
        full = self.space[-1].mask
        m = full
        for s in self.maximal_fsubs():
            m &= s.mask
        return self.lookup(m)
