"""The full analysis pipeline, assembled into a JSON-ready dict.

Natural basis indices in the report are 1-based (e_1, ..., e_n); every
subspace is given by its canonical RREF rows.
"""
from __future__ import annotations

import time

from .algebra import EvolutionAlgebra, annihilator, supersolvable_flag
from .classify import almost_abelian_classify, dually_atomistic_structural
from .errors import BudgetExceeded
from .finite import DEFAULT_BUDGET
from .frattini import (
    frattini_subalgebra,
    largest_ideal_in,
    maximal_subalgebras,
    phi_free_full_support,
    phi_free_necessary,
    snil_ab_check,
)
from .io import algebra_to_dict, subspace_rows
from .radicals import asoc1, nilradical_if_exists, sn_series, upper_annihilating_series
from .tk import canonicalize_tk, detect_tk, tk_frattini, tk_nilradical

SKIPPED_FIELD = "skipped: requires prime field"


def _vec(F, v):
    return [F.fmt(a) for a in v]


def _series_section(E: EvolutionAlgebra) -> dict:
    s = sn_series(E)
    F = E.field
    steps = []
    for i, st in enumerate(s.steps, 1):
        steps.append(
            {
                "term": i,
                "gamma": [k + 1 for k in st.gamma],
                "classes": [
                    {
                        "members": [k + 1 for k in c.members],
                        "w": _vec(F, c.w),
                        "alphas": _vec(F, c.alphas),
                        "accepted": c.accepted,
                        "reason": c.reason,
                        "nil_lift": subspace_rows(c.nil_lift),
                    }
                    for c in st.classes
                ],
                "rows": subspace_rows(st.term),
            }
        )
    return {"terms": [subspace_rows(t) for t in s.terms], "certificates": steps, "flag_dims": [U.dim for U in s.flag]}


def _tk_section(E: EvolutionAlgebra):
    if not detect_tk(E):
        return None
    F = E.field
    form = canonicalize_tk(E)
    Fr, phi = tk_frattini(E)
    return {
        "n": form.n,
        "k": form.k,
        "lambdas": _vec(F, form.lambdas),
        "basis": [_vec(F, g) for g in form.basis],
        "nilradical": subspace_rows(tk_nilradical(E, form)),
        "frattini_subalgebra": subspace_rows(Fr),
        "frattini_ideal": subspace_rows(phi),
    }


def _brute_section(E: EvolutionAlgebra, budget: int):
    if not E.field.is_finite:
        return SKIPPED_FIELD
    try:
        Fr = frattini_subalgebra(E, budget)
        return {
            "field": str(E.field),
            "maximal_subalgebras": [subspace_rows(M) for M in maximal_subalgebras(E, budget)],
            "frattini_subalgebra": subspace_rows(Fr),
            "frattini_ideal": subspace_rows(largest_ideal_in(E, Fr)),
        }
    except BudgetExceeded as exc:
        return {"error": f"budget exceeded: {exc}"}


def analyze(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET, timings: bool = False) -> dict:
    clock: dict[str, float] = {}

    def timed(name, fn, *args):
        t = time.perf_counter()
        out = fn(*args)
        clock[name] = round(time.perf_counter() - t, 6)
        return out

    report: dict = {"algebra": algebra_to_dict(E)}
    report["annihilator"] = subspace_rows(annihilator(E))
    ann_series = timed("bnil", upper_annihilating_series, E)
    report["bnil"] = {
        "series": [subspace_rows(t) for t in ann_series.terms],
        "stabilized_at": ann_series.stabilized_at,
        "rows": subspace_rows(ann_series.last),
    }
    series = timed("sn_series", _series_section, E)
    report["sn_series"] = series
    report["snil"] = series["terms"][-1]
    report["asoc1"] = subspace_rows(timed("asoc1", asoc1, E))
    flag = timed("supersolvable", supersolvable_flag, E)
    report["supersolvable"] = {
        "verdict": flag is not None,
        "flag": None if flag is None else [subspace_rows(U) for U in flag],
    }
    report["tk"] = timed("tk", _tk_section, E)
    nv = timed("nilradical", nilradical_if_exists, E, budget)
    report["nilradical"] = {"status": nv.status, "rows": subspace_rows(nv.subspace), "method": nv.method}
    nec = phi_free_necessary(E)
    full = phi_free_full_support(E)
    report["phi_free"] = {
        "necessary": {
            "bnil_eq_ann": nec.bnil_eq_ann,
            "snil_sq_ideal": nec.snil_sq_ideal,
            "snil_eq_asoc1": nec.snil_eq_asoc1,
            "passes": nec.passes,
        },
        "snil_eq_asoc1": snil_ab_check(E),
        "full_support": {
            "applicable": full.applicable,
            "phi_free": full.phi_free,
            "m": full.m,
            "ann": subspace_rows(full.ann),
        },
        "brute_force": timed("frattini", _brute_section, E, budget),
    }
    verdict = almost_abelian_classify(E)
    report["classification"] = {
        "kind": verdict.kind.value,
        "canonical": verdict.canonical,
        "basis": None if verdict.basis is None else [_vec(E.field, v) for v in verdict.basis],
        "evidence": verdict.evidence,
        "dually_atomistic_structural": dually_atomistic_structural(E),
    }
    if timings:
        report["timings"] = clock
    return report

