"""Exact Gerstenhaber algebra of polydifferential operators on polynomial algebras.

Cochains, polynomials and deformations are built from the same s-expression
text the ``gerst`` command-line tool reads::

    >>> from gerstalg import Cochain, bracket, euler_field
    >>> t = Cochain("(cochain 2 (term 1 (2 0) (1 0)))")
    >>> bracket(euler_field(2, 1), t) == t
    True
"""

from fractions import Fraction

from ._core import (
    Cochain,
    CoboundaryError,
    Deformation,
    GerstError,
    InconclusiveError,
    ParseError,
    Polynomial,
    apply,
    associativity_defect,
    bigrade_decomposition,
    bracket,
    cup,
    delta,
    delta_via_bracket,
    euler_field,
    identity,
    in_c_delta,
    in_ideal,
    insert,
    mc_solve,
    multiplication,
    project_c_delta,
    semigroup_member,
    solve_delta,
    star_apply,
    theta,
    theta_split,
    verify_axioms,
    weight_decomposition,
)


def coefficients(obj):
    """Map from basis key to Fraction coefficient for a Cochain or Polynomial.

    Cochain keys are (x_part, slots); polynomial keys are exponent tuples.
    """
    if isinstance(obj, Cochain):
        return {(x, slots): Fraction(c) for c, x, slots in obj.terms()}
    return {e: Fraction(c) for c, e in obj.terms()}


__all__ = [
    "Cochain",
    "CoboundaryError",
    "Deformation",
    "GerstError",
    "InconclusiveError",
    "ParseError",
    "Polynomial",
    "apply",
    "associativity_defect",
    "bigrade_decomposition",
    "bracket",
    "coefficients",
    "cup",
    "delta",
    "delta_via_bracket",
    "euler_field",
    "identity",
    "in_c_delta",
    "in_ideal",
    "insert",
    "mc_solve",
    "multiplication",
    "project_c_delta",
    "semigroup_member",
    "solve_delta",
    "star_apply",
    "theta",
    "theta_split",
    "verify_axioms",
    "weight_decomposition",
]
