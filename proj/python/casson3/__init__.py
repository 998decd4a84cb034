"""SU(3) Casson invariants of Brieskorn spheres.

Rational results come back as fractions.Fraction.
"""

from fractions import Fraction
import json

from . import _casson3
from ._casson3 import (
    CassonError,
    CassonResult,
    Totals,
    component_census,
    count_pointed_spheres,
    count_type_Ib,
    root_classes,
)

__all__ = [
    "CassonError",
    "CassonResult",
    "Totals",
    "tau",
    "tau_report",
    "family_tau",
    "fit_quadratic",
    "conway_leading_coeff",
    "b_coefficient_formula",
    "component_census",
    "count_pointed_spheres",
    "count_type_Ib",
    "root_classes",
]


def _frac(pair):
    return Fraction(pair[0], pair[1])


def tau(p, q, r, threads=1, breakdown=False, throw_on_tight=True):
    """CassonResult for Sigma(p,q,r); threads=0 uses every core."""
    return _casson3.tau(p, q, r, threads, breakdown, throw_on_tight)


def tau_report(p, q, r, threads=1, breakdown=False):
    """The JSON report of the CLI, as a dict."""
    return json.loads(tau(p, q, r, threads, breakdown).to_json())


def family_tau(p, q, m, n_first, n_last, threads=1):
    """[(n, tau(Sigma(p,q,pq*n+m)))] for n_first <= n <= n_last."""
    return _casson3.family_tau(p, q, m, n_first, n_last, threads)


def fit_quadratic(samples):
    """(A, B, C) with tau(n) = A n^2 + B n + C, from consecutive samples."""
    return tuple(_frac(x) for x in _casson3.fit_quadratic(list(samples)))


def conway_leading_coeff(p, q):
    return _frac(_casson3.conway_leading_coeff(p, q))


def b_coefficient_formula(p, q):
    return _frac(_casson3.b_coefficient_formula(p, q))
