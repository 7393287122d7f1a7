"""Command line entry point ``evoalg``.

Exit codes: 0 ok, 1 input error, 2 budget exceeded, 3 property-suite failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus
from .classify import almost_abelian_classify, dually_atomistic_structural
from .errors import BudgetExceeded, EvoAlgError
from .finite import DEFAULT_BUDGET
from .frattini import frattini_subalgebra, largest_ideal_in, maximal_subalgebras, phi_free_full_support
from .io import dumps, load_algebra, subspace_rows
from .lattice import build_lattice, dually_atomistic_witness, lattice_to_dot
from .report import analyze
from .scalars import QQ, Field
from .verify import Q_RANGE, run_suite

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_SUITE = 0, 1, 2, 3


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    E = load_algebra(args.file)
    _emit(analyze(E, args.budget, timings=args.timings), args.out)
    return EXIT_OK


def cmd_frattini(args) -> int:
    E = load_algebra(args.file)
    F = frattini_subalgebra(E, args.budget)
    _emit(
        {
            "field": str(E.field),
            "maximal_subalgebras": [subspace_rows(M) for M in maximal_subalgebras(E, args.budget)],
            "frattini_subalgebra": subspace_rows(F),
            "frattini_ideal": subspace_rows(largest_ideal_in(E, F)),
        }
    )
    return EXIT_OK


def cmd_lattice(args) -> int:
    E = load_algebra(args.file)
    lat = build_lattice(E, args.budget)
    with open(args.dot, "w") as fh:
        fh.write(lattice_to_dot(lat))
    witness = dually_atomistic_witness(E, args.budget)
    _emit(
        {
            "field": str(E.field),
            "nodes": len(lat.nodes),
            "maximal": len(lat.maximal),
            "dually_atomistic": witness is None,
            "counterexample": subspace_rows(witness),
        }
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    E = load_algebra(args.file)
    v = almost_abelian_classify(E)
    full = phi_free_full_support(E)
    out = {
        "kind": v.kind.value,
        "canonical": v.canonical,
        "basis": None if v.basis is None else [[E.field.fmt(a) for a in b] for b in v.basis],
        "abelian_hyperplane_ideal": subspace_rows(v.ideal),
        "evidence": v.evidence,
        "dually_atomistic_structural": dually_atomistic_structural(E),
        "phi_free_full_support": full.phi_free if full.applicable else None,
    }
    if E.field.is_finite:
        try:
            out["dually_atomistic_brute_force"] = dually_atomistic_witness(E, args.budget) is None
        except BudgetExceeded as exc:
            out["dually_atomistic_brute_force"] = f"budget exceeded: {exc}"
    _emit(out)
    return EXIT_OK


def _parse_lambdas(text: str):
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise EvoAlgError(f"bad --lambdas {text!r}") from exc


def cmd_examples(args) -> int:
    F = Field(args.field) if args.field else QQ
    params = {"n": args.n, "k": args.k, "m": args.m}
    if args.lambdas is not None:
        params["lambdas"] = _parse_lambdas(args.lambdas)
    E = corpus.build(args.name, F, **params)
    text = dumps(E)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    Field(args.field)  # rejects 2 and composites
    rep = run_suite(args.dim, args.field, args.samples, args.seed, args.budget)
    print(rep.summary())
    return EXIT_OK if rep.passed else EXIT_SUITE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="evoalg", description="Structure of finite-dimensional evolution algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max number of subspaces to enumerate")

    p = sub.add_parser("analyze", help="full structural report as JSON")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (non-deterministic)")
    budget(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("frattini", help="maximal subalgebras, F(E) and phi(E) over a prime field")
    p.add_argument("file")
    budget(p)
    p.set_defaults(func=cmd_frattini)

    p = sub.add_parser("lattice", help="subalgebra lattice as DOT, plus dual atomicity")
    p.add_argument("file")
    p.add_argument("--dot", required=True)
    budget(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("classify", help="almost abelian classification")
    p.add_argument("file")
    budget(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("examples", help="write a named algebra file")
    p.add_argument("name", choices=sorted(corpus.CORPUS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--lambdas", help="comma separated, e.g. 1,1,-2")
    p.add_argument("--field", type=int, help="prime p (default: rationals)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser(
        "verify",
        help="cross-check suite on seeded random algebras",
        description="Random structure matrices have uniform entries in GF(p); every other sample "
        "zeroes each row with probability 1/2. Over the rationals entries would be drawn from "
        f"[{Q_RANGE[0]}, {Q_RANGE[1]}], but the suite needs a prime field.",
    )
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", type=int, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    budget(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"evoalg: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (EvoAlgError, OSError) as exc:
        print(f"evoalg: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
