"""Frattini subalgebra F(E), Frattini ideal phi(E) and phi-freeness criteria.

F(E) is computed by exhaustion over prime fields only.  Over other fields
the criteria below decide phi-freeness where a closed form exists.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    EvolutionAlgebra,
    annihilator,
    derived,
    embed,
    is_ideal,
    is_nilpotent,
    largest_ideal_in,
    restrict_to,
    subspace_product,
)
from .errors import TheoremViolation
from .finite import DEFAULT_BUDGET, FiniteEngine
from .linalg import Subspace
from .radicals import asoc1, basic_nilradical, one_dim_abelian_ideals, sn_series
from .tk import canonicalize_tk


def maximal_subalgebras(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    return FiniteEngine(E, budget).maximal_subalgebras()


def frattini_subalgebra(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    eng = FiniteEngine(E, budget)
    return eng.to_subspace(eng.frattini_fsub())


def frattini_ideal(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace:
    return largest_ideal_in(E, frattini_subalgebra(E, budget))


def check_f_in_derived(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> bool:
    """F(E) lies in E^2, with equality when E is nilpotent."""
    F = frattini_subalgebra(E, budget)
    D = derived(E)
    if not D.contains(F):
        return False
    if is_nilpotent(E):
        return F == D
    return True


@dataclass(frozen=True)
class PhiFreeNecessary:
    bnil_eq_ann: bool
    snil_sq_ideal: bool
    snil_eq_asoc1: bool | None  # only evaluated when snil^2 is an ideal

    @property
    def passes(self) -> bool:
        return self.bnil_eq_ann and self.snil_eq_asoc1 is not False


def phi_free_necessary(E: EvolutionAlgebra) -> PhiFreeNecessary:
    """Two necessary conditions for phi(E) = 0; a failure certifies phi(E) != 0."""
    bnil_ok = basic_nilradical(E) == annihilator(E)
    S = sn_series(E).snil
    S2 = subspace_product(E, S, S)
    sq_ideal = is_ideal(E, S2)
    eq = (S == asoc1(E)) if sq_ideal else None
    return PhiFreeNecessary(bnil_ok, sq_ideal, eq)


def snil_ab_check(E: EvolutionAlgebra) -> bool:
    """snil = asoc1, cross-checked against (snil^2 = 0 and snil = N^1)."""
    series = sn_series(E)
    S = series.snil
    direct = S == asoc1(E)
    other = subspace_product(E, S, S).is_zero() and S == series.n1
    if direct != other:
        raise TheoremViolation("snil = asoc1 disagrees with snil^2 = 0 and snil = N^1")
    return direct


@dataclass(frozen=True)
class FullSupportVerdict:
    applicable: bool
    phi_free: bool | None = None
    m: int | None = None
    ann: Subspace | None = None
    K: Subspace | None = None  # sum of the E_2(1,-1) summands, K + ann = E


def phi_free_full_support(E: EvolutionAlgebra) -> FullSupportVerdict:
    series = sn_series(E)
    S = series.snil
    if S.support() != frozenset(range(E.dim)):
        return FullSupportVerdict(False)
    free = subspace_product(E, S, S).is_zero() and S == series.n1
    if not free:
        return FullSupportVerdict(True, False)
    ann = annihilator(E)
    gens = []
    records = one_dim_abelian_ideals(E).tk_records
    for rec in records:
        idx = sorted(rec.J.support())
        form = canonicalize_tk(restrict_to(E, idx))
        if form.k != 2:
            raise TheoremViolation("summand of a phi-free algebra is not E_2(1,-1)")
        gens.extend(embed(E, idx, g) for g in form.basis[:2])
    K = E.span(gens)
    if K.dim != 2 * len(records) or not (K & ann).is_zero() or not (K + ann).is_full():
        raise TheoremViolation("phi-free algebra does not split as K + ann(E)")
    return FullSupportVerdict(True, True, len(records), ann, K)
