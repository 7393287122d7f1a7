"""Almost abelian evolution algebras and the structural dual-atomicity test.

An algebra is almost abelian when it is non-abelian and has an abelian ideal
of codimension one.  Such an algebra is almost basic abelian (the ideal can
be taken spanned by natural basis vectors), nilpotent, or in T_K with an
annihilator of codimension two.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .algebra import EvolutionAlgebra, annihilator
from .linalg import Vector
from .radicals import snil
from .tk import canonicalize_tk, detect_tk


class VerdictKind(enum.Enum):
    ABELIAN = "Abelian"
    ALMOST_BASIC_ABELIAN = "AlmostBasicAbelian"
    NILPOTENT_ALMOST_ABELIAN = "NilpotentAlmostAbelian"
    TK_CODIM_TWO = "TKCodimTwo"
    NOT_ALMOST_ABELIAN = "NotAlmostAbelian"


@dataclass(frozen=True)
class ClassificationVerdict:
    kind: VerdictKind
    canonical: str | None = None  # "E_n1" or "E_n2" for almost basic abelian algebras
    basis: tuple[Vector, ...] | None = None  # natural basis realising the normal form
    ideal: linalg.Subspace | None = None  # an abelian ideal of codimension one
    dually_atomistic: bool | None = None
    phi_free: bool | None = None
    evidence: str = ""

    @property
    def almost_abelian(self) -> bool:
        return self.kind not in (VerdictKind.ABELIAN, VerdictKind.NOT_ALMOST_ABELIAN)


def almost_abelian_classify(E: EvolutionAlgebra) -> ClassificationVerdict:
    n = E.dim
    ann = annihilator(E)
    active = list(E.nonzero_squares)
    if not active:
        return ClassificationVerdict(VerdictKind.ABELIAN, evidence="all squares vanish")
    if len(active) == 1:
        return _basic_case(E, active[0], ann)
    if len(active) == 2:
        p, k = active
        sp, sk = E.matrix[p], E.matrix[k]
        # a non-basic abelian hyperplane contains ann and the line (1, alpha) in coordinates p, k,
        # which forces e_p^2 = -alpha^2 e_k^2 and E^2 = span{e_k^2} inside the hyperplane
        lead = next(j for j, a in enumerate(sk) if a)
        ratio = sp[lead] / sk[lead]
        if linalg.scale(ratio, sk) == sp:
            root = E.field.sqrt(-ratio)
            if root is not None:
                for alpha in (root, -root):
                    if sk[k] == alpha * sk[p]:
                        y = [E.field.zero] * n
                        y[p], y[k] = E.field.one, alpha
                        H = E.span([tuple(y)] + [E.basis_vector(i) for i in range(n) if i not in (p, k)])
                        if not sk[p] and not sk[k]:
                            return ClassificationVerdict(
                                VerdictKind.NILPOTENT_ALMOST_ABELIAN, ideal=H, evidence="E^2 inside ann(E)"
                            )
                        return ClassificationVerdict(
                            VerdictKind.TK_CODIM_TWO, ideal=H, evidence="T_K with ann(E) of codimension 2"
                        )
        return ClassificationVerdict(VerdictKind.NOT_ALMOST_ABELIAN, evidence="no abelian hyperplane ideal")
    return ClassificationVerdict(VerdictKind.NOT_ALMOST_ABELIAN, evidence="ann(E) has codimension >= 3")


def _basic_case(E: EvolutionAlgebra, a: int, ann) -> ClassificationVerdict:
    n = E.dim
    alpha = E.matrix[a]
    others = [E.basis_vector(j) for j in range(n) if j != a]
    if alpha[a]:
        c = 1 / (alpha[a] * alpha[a])
        x = linalg.scale(c, alpha)  # x^2 = x
        basis = (x, *others)
        return ClassificationVerdict(
            VerdictKind.ALMOST_BASIC_ABELIAN, "E_n1", basis, ann, evidence="idempotent built from e_a^2"
        )
    first = next(j for j, v in enumerate(alpha) if v)
    rest = [E.basis_vector(j) for j in range(n) if j not in (a, first)]
    basis = (E.basis_vector(a), tuple(alpha), *rest)
    return ClassificationVerdict(
        VerdictKind.ALMOST_BASIC_ABELIAN, "E_n2", basis, ann, evidence="e_a^2 lies in ann(E)"
    )


def is_e21m1(E: EvolutionAlgebra) -> bool:
    """E is isomorphic to E_2(1,-1)."""
    if E.dim != 2 or not detect_tk(E):
        return False
    return canonicalize_tk(E).k == 2


def dually_atomistic_structural(E: EvolutionAlgebra) -> bool | None:
    """Dual atomicity decided from structure, for almost abelian or full-support-snil algebras."""
    if E.is_abelian():
        return True
    verdict = almost_abelian_classify(E)
    full = snil(E).support() == frozenset(range(E.dim))
    if not verdict.almost_abelian and not full:
        return None
    return is_e21m1(E) or verdict.canonical == "E_n1"
