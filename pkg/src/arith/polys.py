"""Integer polynomials in T attached to the cyclotomic Z_p-extension.

Polynomials are returned as coefficient lists, lowest degree first.
"""

import logging
from functools import lru_cache

from sympy import Poly, cyclotomic_poly, symbols

from src.arith.padic import INF, valuation

logger = logging.getLogger(__name__)

T = symbols("T")

PLUS = "+"
MINUS = "-"


def _coefficients(poly: Poly) -> list[int]:
    return [int(c) for c in reversed(poly.all_coeffs())]


def _to_poly(coefficients: list[int]) -> Poly:
    return Poly(list(reversed(coefficients)), T)


@lru_cache(maxsize=64)
def _omega_poly(n: int, p: int) -> Poly:
    return Poly(T + 1, T) ** (p**n) - Poly(1, T)


def omega(n: int, p: int) -> list[int]:
    """Coefficients of omega_n = (1+T)^(p^n) - 1.

    Args:
        n: Level, n >= 0
        p: Prime

    Returns:
        p^n + 1 coefficients with constant term 0
    """
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    return _coefficients(_omega_poly(n, p))


@lru_cache(maxsize=64)
def _cyclotomic_shifted(k: int, p: int) -> Poly:
    return Poly(cyclotomic_poly(p**k, T), T).compose(Poly(T + 1, T))


def cyclotomic_shifted(k: int, p: int) -> list[int]:
    """Coefficients of Phi_{p^k}(1+T), a distinguished polynomial of degree (p-1)p^(k-1)."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    return _coefficients(_cyclotomic_shifted(k, p))


def half_log_factors(sign: str, n: int) -> list[int]:
    """Exponents k <= n of the cyclotomic factors in the signed half-logarithm."""
    if sign == PLUS:
        return list(range(2, n + 1, 2))
    if sign == MINUS:
        return list(range(1, n + 1, 2))
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def half_log_truncation(sign: str, n: int, p: int) -> tuple[list[int], int]:
    """Product of Phi_{p^k}(1+T) over k <= n of the parity fixed by sign.

    The signed half-logarithm is this product divided by p once per factor
    (and once more overall); the divisions are returned as a count so the
    polynomial stays integral. Modulo omega_n the truncation is exact since
    Phi_{p^m}(1+T) = p mod omega_n for m > n.

    Args:
        sign: '+' (even exponents) or '-' (odd exponents)
        n: Level, n >= 1
        p: Prime

    Returns:
        Tuple of (coefficients, number of pending p-divisions)
    """
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    product = Poly(1, T)
    exponents = half_log_factors(sign, n)
    for k in exponents:
        product = product * _cyclotomic_shifted(k, p)
    return _coefficients(product), len(exponents)


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    return _coefficients(_to_poly(f) * _to_poly(g))


def poly_divmod(f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
    """Exact integer division with remainder by a monic g."""
    q, r = _to_poly(f).div(_to_poly(g))
    return _coefficients(q), _coefficients(r)


def poly_mod_omega(f: list[int], n: int, p: int) -> list[int]:
    """Reduce an integer polynomial modulo omega_n (which is monic)."""
    r = _to_poly(f).rem(_omega_poly(n, p))
    coefficients = _coefficients(r)
    return coefficients + [0] * (p**n - len(coefficients))


def ambiguity_profile(modulus: list[int], p: int, length: int) -> list[int | float]:
    """Valuation guard imposed by an ambiguity modulo a distinguished polynomial.

    If a series is only known modulo R * (integral series), its coefficient j
    is known modulo p^g_j with g_j = min over i <= j of v_p(R_i).

    Args:
        modulus: Coefficients of R (lowest first)
        p: Prime
        length: Number of guard entries to return

    Returns:
        List of guards (INF where R contributes nothing yet)
    """
    guards = []
    running = INF
    for j in range(length):
        if j < len(modulus):
            running = min(running, valuation(modulus[j], p))
        guards.append(running)
    return guards
