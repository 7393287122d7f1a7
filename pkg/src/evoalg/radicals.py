"""Annihilating series, basic nilradical, one-dimensional abelian ideals and
the supersolvable nilpotent series N^1 <= N^2 <= ... whose limit is snil(E).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .algebra import (
    EvolutionAlgebra,
    annihilator,
    embed,
    generated_ideal,
    is_ideal,
    is_nilpotent,
    largest_ideal_in,
    subspace_product,
)
from .errors import BudgetExceeded, NotAnIdeal, TheoremViolation
from .linalg import Subspace, Vector
from .scalars import Scalar


def _normalize(v: Sequence[Scalar]) -> Vector:
    lead = next(a for a in v if a)
    inv = 1 / lead
    return tuple(inv * a for a in v)


# --- upper annihilating series ------------------------------------------------


@dataclass(frozen=True)
class AnnSeries:
    terms: tuple[Subspace, ...]

    @property
    def stabilized_at(self) -> int:
        return len(self.terms)

    @property
    def last(self) -> Subspace:
        return self.terms[-1]


def upper_annihilating_series(E: EvolutionAlgebra) -> AnnSeries:
    """ann^1 = ann(E), ann^i = span{e_k : e_k^2 in ann^(i-1)} until it stabilises."""
    terms = [annihilator(E)]
    while True:
        prev = terms[-1]
        nxt = E.coordinate(k for k in range(E.dim) if E.matrix[k] in prev)
        if nxt == prev:
            return AnnSeries(tuple(terms))
        terms.append(nxt)


def basic_nilradical(E: EvolutionAlgebra) -> Subspace:
    return upper_annihilating_series(E).last


# --- one-dimensional abelian ideals ------------------------------------------


@dataclass(frozen=True)
class TKRecord:
    """A line span{w} = J^2 for the basic ideal J = span{e_i : i in supp(w)}, J in T_K."""

    w: Vector
    J: Subspace


@dataclass(frozen=True)
class AbelianLines:
    ann_part: Subspace
    tk_records: tuple[TKRecord, ...]


def one_dim_abelian_ideals(E: EvolutionAlgebra) -> AbelianLines:
    # a line outside ann(E) containing some k with e_k^2 != 0 must be span{e_k^2}
    ann = annihilator(E)
    records = []
    seen = set()
    for k in E.nonzero_squares:
        w = _normalize(E.matrix[k])
        if w in seen:
            continue
        seen.add(w)
        L = E.span([w])
        supp = linalg.support(w)
        if not any(E.matrix[i] for i in supp):
            continue  # w lies in the annihilator
        if not all(E.matrix[i] in L for i in supp):
            continue
        if any(E.multiply(w, w)):
            continue
        records.append(TKRecord(w, E.coordinate(supp)))
    return AbelianLines(ann, tuple(records))


def asoc1(E: EvolutionAlgebra) -> Subspace:
    """Sum of all one-dimensional abelian ideals."""
    lines = one_dim_abelian_ideals(E)
    return lines.ann_part.add_vectors(r.w for r in lines.tk_records)


# --- supersolvable nilpotent series ------------------------------------------


@dataclass(frozen=True)
class ClassRecord:
    """One collinearity class of squares modulo the previous term."""

    members: tuple[int, ...]
    w: Vector
    alphas: tuple[Scalar, ...]  # e_k^2 = alpha_k w  (mod previous term), k in members
    accepted: bool
    reason: str
    nil_lift: Subspace | None


@dataclass(frozen=True)
class SeriesStep:
    term: Subspace
    gamma: tuple[int, ...]
    classes: tuple[ClassRecord, ...]


@dataclass(frozen=True)
class SNSeries:
    steps: tuple[SeriesStep, ...]
    flag: tuple[Subspace, ...]  # complete flag of ideals of E from 0 up to snil

    @property
    def terms(self) -> tuple[Subspace, ...]:
        return tuple(s.term for s in self.steps)

    @property
    def stabilized_at(self) -> int:
        return len(self.steps)

    @property
    def snil(self) -> Subspace:
        return self.steps[-1].term

    @property
    def n1(self) -> Subspace:
        return self.steps[0].term


def _classify(E: EvolutionAlgebra, N: Subspace, members: list[int], w: Vector, alphas, C: set[int]) -> ClassRecord:
    supp = linalg.support(w)
    if not supp <= C:
        return ClassRecord(tuple(members), w, alphas, False, "support meets previous term", None)
    if all(E.matrix[k] in N for k in supp):
        return ClassRecord(tuple(members), w, alphas, False, "image lies in the quotient annihilator", None)
    L = N.add_vectors([w])
    if not all(E.matrix[k] in L for k in supp):
        return ClassRecord(tuple(members), w, alphas, False, "not an ideal modulo previous term", None)
    if E.multiply(w, w) not in N:
        return ClassRecord(tuple(members), w, alphas, False, "square not in previous term", None)
    # nil of the quotient T_K ideal = {x on supp(w) : x w in N}
    idx = sorted(supp)
    rows = [N.reduce(linalg.scale(w[i], E.matrix[i])) for i in idx]
    ker = linalg.left_kernel(E.field, rows)
    lift = E.span(embed(E, idx, x) for x in ker.rows)
    return ClassRecord(tuple(members), w, alphas, True, "", lift)


def _step(E: EvolutionAlgebra, N: Subspace) -> SeriesStep:
    C = set(range(E.dim)) - N.support()
    gamma = tuple(k for k in sorted(C) if E.matrix[k] in N)
    groups: dict[Vector, list[int]] = {}
    reps: dict[Vector, list[Scalar]] = {}
    for k in sorted(C):
        r = N.reduce(E.matrix[k])
        if not any(r):
            continue
        w = _normalize(r)
        groups.setdefault(w, []).append(k)
        lead = next(a for a in r if a)
        reps.setdefault(w, []).append(lead)
    classes = tuple(
        _classify(E, N, groups[w], w, tuple(reps[w]), C) for w in sorted(groups, key=lambda w: groups[w][0])
    )
    term = N.add_vectors(E.basis_vector(k) for k in gamma)
    for c in classes:
        if c.accepted:
            term = term + c.nil_lift
    return SeriesStep(term, gamma, classes)


def _extend_flag(E: EvolutionAlgebra, flag: list[Subspace], target: Subspace, candidates: list[Vector]) -> None:
    A = flag[-1]
    pending = list(candidates)
    while A != target:
        for i, v in enumerate(pending):
            if v in A:
                continue
            B = A.add_vectors([v])
            if is_ideal(E, B):
                flag.append(B)
                A = B
                del pending[i]
                break
        else:
            raise TheoremViolation("series step is not E-supersolvable")


def sn_series(E: EvolutionAlgebra) -> SNSeries:
    """The E-supersolvable nilpotent series, iterated until it stabilises."""
    N = E.zero()
    steps: list[SeriesStep] = []
    flag = [N]
    while True:
        step = _step(E, N)
        if steps and step.term == N:
            break
        cands = [E.basis_vector(k) for k in step.gamma]
        for c in step.classes:
            if c.accepted:
                cands.append(c.w)
                cands.extend(c.nil_lift.rows)
        _extend_flag(E, flag, step.term, cands)
        steps.append(step)
        if step.term == N:
            break
        N = step.term
    return SNSeries(tuple(steps), tuple(flag))


def snil(E: EvolutionAlgebra) -> Subspace:
    return sn_series(E).snil


def is_nilpotent_ideal_characterized(E: EvolutionAlgebra, I: Subspace, series: SNSeries | None = None) -> bool:
    """Nilpotency of an ideal I via the largest series term N^k inside I.

    I is nilpotent iff some right power I^<l> lies in N^k and the coordinate
    projection of I onto supp(N^k) stays inside N^k.
    """
    if not is_ideal(E, I):
        raise NotAnIdeal("characterization applies to ideals")
    series = series or sn_series(E)
    Nk = E.zero()
    for t in series.terms:
        if I.contains(t):
            Nk = t
    P = I
    reached = False
    for _ in range(I.dim + 1):
        if Nk.contains(P):
            reached = True
            break
        P = subspace_product(E, P, I)
    if not reached and not Nk.contains(P):
        return False
    keep = Nk.support()
    return all(Nk.restrict(w, keep) in Nk for w in I.rows)


# --- nilradical ---------------------------------------------------------------


@dataclass(frozen=True)
class NilradicalVerdict:
    status: str  # "exists" | "not_maximal" | "undetermined"
    snil: Subspace
    subspace: Subspace | None  # the nilradical, or a nilpotent ideal strictly above snil
    method: str


def nilradical_if_exists(E: EvolutionAlgebra, budget: int | None = None) -> NilradicalVerdict:
    """Decide whether snil(E) is the nilradical.

    Over a prime field within budget every nilpotent ideal is enumerated.
    Otherwise :func:`nilradical_structural` is used, which may be undetermined.
    """
    if E.field.is_finite:
        from .finite import DEFAULT_BUDGET, FiniteEngine

        S = snil(E)
        try:
            maximal = FiniteEngine(E, DEFAULT_BUDGET if budget is None else budget).maximal_nilpotent_ideals()
        except BudgetExceeded:
            maximal = None
        if maximal is not None:
            above = [M for M in maximal if M.contains(S) and M != S]
            if above:
                return NilradicalVerdict("not_maximal", S, above[0], "exhaustive enumeration")
            if maximal != [S]:
                raise TheoremViolation("snil is maximal nilpotent but not the unique maximal one")
            return NilradicalVerdict("exists", S, S, "exhaustive enumeration")
    return nilradical_structural(E)


def nilradical_structural(E: EvolutionAlgebra) -> NilradicalVerdict:
    """Field-independent rules.

    Every maximal nilpotent ideal M contains snil (M + snil is nilpotent) and
    projects into snil on supp(snil).  So M lies in the largest ideal K inside
    snil + span{e_k : k outside supp(snil)}.  K = snil means snil is maximal;
    a nilpotent K is the unique maximal nilpotent ideal.
    """
    from .tk import detect_tk, tk_nilradical

    S = snil(E)
    if detect_tk(E):
        nil = tk_nilradical(E)
        if nil != S:
            raise TheoremViolation("snil differs from the T_K nilradical")
        return NilradicalVerdict("exists", S, nil, "T_K closed form")
    if S.is_full():
        return NilradicalVerdict("exists", S, S, "algebra is nilpotent")
    if S.codim == 1:
        return NilradicalVerdict("exists", S, S, "codimension one, algebra not nilpotent")
    outside = set(range(E.dim)) - S.support()
    K = largest_ideal_in(E, S + E.coordinate(outside))
    if K == S:
        return NilradicalVerdict("exists", S, S, "no ideal above snil passes the support test")
    if is_nilpotent(E, K):
        return NilradicalVerdict("not_maximal", S, K, "largest admissible ideal is nilpotent, so it is nil(E)")
    A = _central_tower(E, S, K)
    if A != S:
        return NilradicalVerdict("not_maximal", S, A, "ideal whose powers fall into snil")
    witness = _extension_search(E, S, K)
    if witness is not None:
        return NilradicalVerdict("not_maximal", S, witness, "ideal closure search")
    return NilradicalVerdict("undetermined", S, None, "no nilpotent extension found")


def _central_tower(E: EvolutionAlgebra, S: Subspace, K: Subspace) -> Subspace:
    """Limit of A_0 = S, A_(i+1) = {x in K : x E in A_i}.

    x E = span{x_k e_k^2}, so the condition is linear: x_k = 0 whenever
    e_k^2 is not in A_i.  The limit A is an ideal with A^<l> inside S for
    some l, and it lies in K, so it is nilpotent.
    """
    A = S
    while True:
        nxt = K & E.coordinate(k for k in range(E.dim) if E.matrix[k] in A)
        nxt = nxt + S
        if nxt == A:
            return A
        A = nxt


def _extension_search(E: EvolutionAlgebra, S: Subspace, K: Subspace) -> Subspace | None:
    """A nilpotent ideal strictly between S and K generated by S and one vector, if any."""
    cands: list[Vector] = list(K.rows)
    for k in range(E.dim):
        cands.append(E.basis_vector(k))
    for k in E.nonzero_squares:
        cands.append(S.reduce(E.matrix[k]))
    seen = set()
    for v in cands:
        if v in S or v not in K:
            continue
        J = generated_ideal(E, list(S.rows) + [v])
        if J in seen:
            continue
        seen.add(J)
        if is_nilpotent(E, J):
            return J
    return None
