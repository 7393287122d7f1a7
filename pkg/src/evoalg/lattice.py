"""Subalgebra lattice over a prime field, dual atomicity and DOT export."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import EvolutionAlgebra
from .finite import DEFAULT_BUDGET, FiniteEngine, FSub
from .linalg import Subspace


@dataclass(frozen=True)
class SubalgebraLattice:
    algebra: EvolutionAlgebra
    nodes: tuple[Subspace, ...]  # ordered by dimension, then canonical basis
    maximal: tuple[int, ...]
    cover_edges: tuple[tuple[int, int], ...]  # (lower, upper)

    def index(self, U: Subspace) -> int:
        return self.nodes.index(U)


def _covers(subs: list[FSub]) -> list[tuple[int, int]]:
    edges = []
    for j, b in enumerate(subs):
        below = sorted((i for i, a in enumerate(subs) if a.dim < b.dim and a <= b), key=lambda i: -subs[i].dim)
        found: list[int] = []
        for i in below:
            if not any(subs[i] <= subs[c] for c in found):
                found.append(i)
        edges.extend((i, j) for i in sorted(found))
    return sorted(edges)


def build_lattice(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> SubalgebraLattice:
    eng = FiniteEngine(E, budget)
    subs = eng.subalgebras()
    pos = {s.mask: i for i, s in enumerate(subs)}
    maximal = tuple(sorted(pos[s.mask] for s in eng.maximal_fsubs()))
    nodes = tuple(eng.to_subspace(s) for s in subs)
    return SubalgebraLattice(E, nodes, maximal, tuple(_covers(subs)))


def dually_atomistic_witness(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> Subspace | None:
    """A proper subalgebra that is not an intersection of maximal subalgebras, or None."""
    eng = FiniteEngine(E, budget)
    maximal = eng.maximal_fsubs()
    for s in eng.subalgebras():
        if s.dim == E.dim:
            continue
        m = eng.space[-1].mask
        for t in maximal:
            if s <= t:
                m &= t.mask
        if m != s.mask:
            return eng.to_subspace(s)
    return None


def dually_atomistic(E: EvolutionAlgebra, budget: int = DEFAULT_BUDGET) -> bool:
    return dually_atomistic_witness(E, budget) is None


def _label(U: Subspace) -> str:
    if U.is_zero():
        return "0"
    rows = " ".join("(" + ",".join(U.field.fmt(a) for a in r) + ")" for r in U.rows)
    return f"dim {U.dim}\\n{rows}"


def lattice_to_dot(lat: SubalgebraLattice) -> str:
    lines = ["digraph subalgebras {", "  rankdir=BT;", "  node [shape=box];"]
    maximal = set(lat.maximal)
    for i, U in enumerate(lat.nodes):
        extra = ", style=bold" if i in maximal else ""
        lines.append(f'  n{i} [label="{_label(U)}"{extra}];')
    for a, b in lat.cover_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
