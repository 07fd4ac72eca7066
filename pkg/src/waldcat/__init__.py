"""Finite, checkable models of Waldhausen categories and their multiexact functors."""

__version__ = "0.1.0"

from .errors import (
    HypothesisError,
    NaturalityError,
    NoPushoutError,
    NotAFunctorError,
    NotExactError,
    PostconditionError,
    SizeCapError,
    WaldError,
)
from .fincat import FinCat, Functor, NatTrans, build_index, colimit, enumerate_functors, restricted_colimit_cube
from .wald import WaldCat, builtin, check_wald_axioms, finset_pointed, nstar, vect_fp, zero_category
from .cubes import Cube, good_pushout, is_good, punctured_colimit, southern_arrow
from .multiexact import MultiFunctor, box_product, check_k_exact, compose_multi, sigma_action
from .homwald import build_hom, check_closed_axioms, curry, evaluation, uncurry
from .sdot import enumerate_Sn, k0_presentation, rho

__all__ = [
    "WaldError", "SizeCapError", "NoPushoutError", "NotAFunctorError", "NaturalityError",
    "HypothesisError", "NotExactError", "PostconditionError",
    "FinCat", "Functor", "NatTrans", "build_index", "colimit", "enumerate_functors", "restricted_colimit_cube",
    "WaldCat", "builtin", "check_wald_axioms", "finset_pointed", "nstar", "vect_fp", "zero_category",
    "Cube", "good_pushout", "is_good", "punctured_colimit", "southern_arrow",
    "MultiFunctor", "box_product", "check_k_exact", "compose_multi", "sigma_action",
    "build_hom", "check_closed_axioms", "curry", "evaluation", "uncurry",
    "enumerate_Sn", "k0_presentation", "rho",
]
