from .integers import (
    DEFAULT_MR_ROUNDS,
    bitlen,
    factorize,
    format_int,
    is_probable_prime,
    is_square,
    legendre,
    next_probable_prime,
    parse_int,
    squarefree_decompose,
)
from .polynomial import (
    X,
    RatPolynomial,
    cyclotomic,
    euler_phi,
    factor_over_q,
    is_irreducible_over_q,
    poly_divides,
    poly_eval,
    parse_poly,
    poly_mod_inverse,
)
from .fields import (
    ExtField,
    FieldElement,
    FieldMismatch,
    PrimeField,
    field_sqrt,
    find_irreducible,
    is_irreducible_fp,
    sqrt_mod,
)

__all__ = [
    "DEFAULT_MR_ROUNDS",
    "bitlen",
    "factorize",
    "format_int",
    "is_probable_prime",
    "is_square",
    "legendre",
    "next_probable_prime",
    "parse_int",
    "squarefree_decompose",
    "X",
    "RatPolynomial",
    "cyclotomic",
    "euler_phi",
    "factor_over_q",
    "is_irreducible_over_q",
    "poly_divides",
    "poly_eval",
    "parse_poly",
    "poly_mod_inverse",
    "ExtField",
    "FieldElement",
    "FieldMismatch",
    "PrimeField",
    "field_sqrt",
    "find_irreducible",
    "is_irreducible_fp",
    "sqrt_mod",
]
