"""Algorithmic combinatorics of words for ring theory.

Submodules:

``words``      ordered alphabets, regular (Lyndon–Shirshov) words, factorization,
               bracketings, semiregular words and fgf factors
``freealg``    noncommutative rational polynomials, deglex order, Lie brackets
``rewrite``    reduction, Gröbner–Shirshov completion, membership, diamond lemma
``autalg``     monomial algebras as automata, growth, GK dimension
``height``     Shirshov n-divisibility and height surveys
``morphisms``  substitutions, square/cube-freeness, Thue and Crochemore checks
``groups``     presentations, C'(lambda), Dehn's algorithm
``ramsey``     van der Waerden numbers
``cli``        the ``ringwords`` command
"""

from .freealg import DEGLEX, DegLex, NcPoly, expand_bracket, leading_monomial, lie_basis, parse_poly
from .words import (
    BINARY,
    TERNARY,
    Alphabet,
    OmegaKind,
    Ordering,
    cfl_factorize,
    find_fgf,
    generate_regular,
    is_assoc_regular,
    is_nonassoc_regular,
    is_omega_regular,
    is_semiregular,
    lex_compare,
    shirshov_bracketing,
)

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "DEGLEX",
    "TERNARY",
    "Alphabet",
    "DegLex",
    "NcPoly",
    "OmegaKind",
    "Ordering",
    "cfl_factorize",
    "expand_bracket",
    "find_fgf",
    "generate_regular",
    "is_assoc_regular",
    "is_nonassoc_regular",
    "is_omega_regular",
    "is_semiregular",
    "leading_monomial",
    "lex_compare",
    "lie_basis",
    "parse_poly",
    "shirshov_bracketing",
]
