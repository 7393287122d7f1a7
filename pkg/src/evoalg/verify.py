"""Seeded random algebras and a cross-check suite run over a prime field.

Each property compares two independently computed answers (closed form
against exhaustion, or a structural identity) and records every mismatch.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import (
    EvolutionAlgebra,
    derived,
    is_nilpotent,
    is_supersolvable,
    quotient,
)
from .corpus import ek
from .finite import DEFAULT_BUDGET, FiniteEngine
from .frattini import largest_ideal_in
from .lattice import dually_atomistic
from .radicals import is_nilpotent_ideal_characterized, sn_series
from .scalars import Field
from .tk import ann_of_derived, tk_frattini, tk_nilradical

# over the rationals, random entries are drawn from this range
Q_RANGE = (-3, 3)


def random_scalar(F: Field, rng: random.Random):
    if F.is_finite:
        return F(rng.randrange(F.p))
    return F(rng.randint(*Q_RANGE))


def random_nonzero(F: Field, rng: random.Random):
    while True:
        a = random_scalar(F, rng)
        if a:
            return a


def random_algebra(F: Field, n: int, rng: random.Random, sparse: bool = False) -> EvolutionAlgebra:
    """Uniform structure matrix; with ``sparse`` each row is zeroed with probability 1/2."""
    rows = [[random_scalar(F, rng) for _ in range(n)] for _ in range(n)]
    if sparse:
        rows = [r if rng.random() < 0.5 else [F.zero] * n for r in rows]
    return EvolutionAlgebra.from_rows(F, rows)


def random_tk(F: Field, n: int, rng: random.Random) -> EvolutionAlgebra:
    """A random member of T_K of dimension n >= 2, written in a scrambled natural basis."""
    k = rng.randint(2, n)
    while True:
        lam = [random_nonzero(F, rng) for _ in range(k - 1)]
        last = -sum(lam, F.zero)
        if last:
            break
    lam.append(last)
    lam += [random_scalar(F, rng) for _ in range(n - k)]
    C = ek(k, lam, F)
    ann = [i for i in range(n) if not lam[i]]
    # g_i = s_i e_sigma(i) + (annihilator part when e_sigma(i) is not in ann)
    perm = list(range(n))
    rng.shuffle(perm)
    basis = []
    for i in range(n):
        g = list(linalg.scale(random_nonzero(F, rng), C.basis_vector(perm[i])))
        if perm[i] not in ann:
            for a in ann:
                g[a] = random_scalar(F, rng)
        basis.append(tuple(g))
    inv = linalg.inverse(F, basis)
    rows = [linalg.mat_vec(C.multiply(g, g), inv) for g in basis]
    return EvolutionAlgebra.from_rows(F, rows)


def random_subspace(F: Field, n: int, rng: random.Random) -> linalg.Subspace:
    d = rng.randint(0, n)
    return linalg.span(F, n, [[random_scalar(F, rng) for _ in range(n)] for _ in range(d)])


@dataclass
class Violation:
    prop: str
    sample: int
    matrix: list
    detail: str = ""


@dataclass
class VerifyReport:
    samples: int
    checks: dict[str, int] = dc_field(default_factory=dict)
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        lines = [f"{name}: {count} checks" for name, count in sorted(self.checks.items())]
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        lines.append(f"{self.samples} samples: {status}")
        for v in self.violations[:20]:
            lines.append(f"  {v.prop} sample {v.sample}: {v.detail} {v.matrix}")
        return "\n".join(lines)


def _check(rep: VerifyReport, name: str, ok: bool, i: int, E: EvolutionAlgebra, detail: str = "") -> None:
    rep.checks[name] = rep.checks.get(name, 0) + 1
    if not ok:
        rep.violations.append(Violation(name, i, [[str(a) for a in r] for r in E.matrix], detail))


def check_algebra(rep: VerifyReport, i: int, E: EvolutionAlgebra, rng: random.Random, budget: int) -> None:
    eng = FiniteEngine(E, budget)
    series = sn_series(E)
    S = series.snil

    # nilpotency characterization and sum stability, over every ideal
    for I in eng.ideals():
        U = eng.to_subspace(I)
        nil = eng.is_nilpotent(I)
        _check(rep, "nilpotency_characterization", is_nilpotent_ideal_characterized(E, U, series) == nil, i, E)
        if nil:
            _check(rep, "sum_stability", is_nilpotent(E, U + S), i, E, str(U))

    # Frattini subalgebra inside E^2, equal for nilpotent E
    Fr = eng.to_subspace(eng.frattini_fsub())
    D = derived(E)
    ok = D.contains(Fr) and (Fr == D or not is_nilpotent(E))
    _check(rep, "frattini_in_derived", ok, i, E)

    # dual atomicity forces phi(E) = 0
    if dually_atomistic(E, budget):
        _check(rep, "dually_atomistic_phi_free", largest_ideal_in(E, Fr).is_zero(), i, E)

    # supersolvable algebras have only codimension-one maximal subalgebras
    if is_supersolvable(E):
        _check(rep, "supersolvable_maximal_codim1", all(s.dim == E.dim - 1 for s in eng.maximal_fsubs()), i, E)

    # quotient map is multiplicative
    for I in eng.ideals():
        U = eng.to_subspace(I)
        Q = quotient(E, U)
        u = [random_scalar(E.field, rng) for _ in range(E.dim)]
        v = [random_scalar(E.field, rng) for _ in range(E.dim)]
        ok = Q.project(E.multiply(u, v)) == Q.algebra.multiply(Q.project(u), Q.project(v))
        _check(rep, "quotient_multiplicativity", ok, i, E, str(U))

    # Grassmann identity on random subspaces
    A, B = random_subspace(E.field, E.dim, rng), random_subspace(E.field, E.dim, rng)
    _check(rep, "grassmann", (A + B).dim + (A & B).dim == A.dim + B.dim, i, E)


def check_tk(rep: VerifyReport, i: int, E: EvolutionAlgebra, budget: int) -> None:
    eng = FiniteEngine(E, budget)
    nil = tk_nilradical(E)
    _check(rep, "tk_nilradical_oracle", nil == ann_of_derived(E), i, E)
    _check(rep, "tk_nilradical_unique_maximal", eng.maximal_nilpotent_ideals() == [nil], i, E)
    Fr, phi = tk_frattini(E)
    bf = eng.to_subspace(eng.frattini_fsub())
    _check(rep, "tk_frattini_closed_form", Fr == bf and phi == largest_ideal_in(E, bf), i, E)


def run_suite(dim: int, p: int, samples: int, seed: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    F = Field(p)
    rng = random.Random(seed)
    rep = VerifyReport(samples)
    for i in range(samples):
        E = random_algebra(F, dim, rng, sparse=bool(i % 2))
        check_algebra(rep, i, E, rng, budget)
        if dim >= 2:
            check_tk(rep, i, random_tk(F, dim, rng), budget)
    return rep
