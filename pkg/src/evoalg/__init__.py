"""Exact structure theory of finite-dimensional evolution algebras.

Nilradicals (basic, supersolvable, T_K closed form), the abelian socle,
Frattini subalgebra and ideal, phi-freeness and dual atomicity, over the
rationals and over prime fields GF(p), p odd.
"""
from .algebra import (
    EvolutionAlgebra,
    annihilator,
    derived,
    direct_sum,
    generated_ideal,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    is_supersolvable,
    quotient,
    supersolvable_flag,
)
from .classify import ClassificationVerdict, VerdictKind, almost_abelian_classify, dually_atomistic_structural
from .errors import BudgetExceeded, EvoAlgError, NotFiniteField, NotTK, ParseError, TheoremViolation
from .frattini import (
    check_f_in_derived,
    frattini_ideal,
    frattini_subalgebra,
    largest_ideal_in,
    maximal_subalgebras,
    phi_free_full_support,
    phi_free_necessary,
    snil_ab_check,
)
from .lattice import SubalgebraLattice, build_lattice, dually_atomistic, lattice_to_dot
from .linalg import Subspace
from .radicals import (
    asoc1,
    basic_nilradical,
    is_nilpotent_ideal_characterized,
    nilradical_if_exists,
    one_dim_abelian_ideals,
    sn_series,
    snil,
    upper_annihilating_series,
)
from .scalars import GF, QQ, Field
from .tk import ann_of_derived, canonicalize_tk, detect_tk, tk_frattini, tk_nilradical

__version__ = "0.1.0"
