"""Tate's algorithm: Kodaira types, conductor exponents and Tamagawa numbers."""

import logging
from dataclasses import dataclass
from enum import StrEnum

from sympy import Poly, legendre_symbol, symbols

from src.arith.padic import valuation
from src.curves.model import Model

logger = logging.getLogger(__name__)

x = symbols("x")


class Reduction(StrEnum):
    GOOD = "good"
    SPLIT = "split_multiplicative"
    NONSPLIT = "nonsplit_multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class LocalData:
    """Reduction data of a curve at one prime.

    Attributes:
        prime: The prime ell
        conductor_exponent: f_ell (0 good, 1 multiplicative, >= 2 additive)
        kodaira: Kodaira symbol such as "I0", "I5", "III", "I1*", "IV*"
        tamagawa: Order c_ell of the component group of the special fibre
        reduction: Reduction type
        discriminant_valuation: v_ell of the minimal discriminant
    """

    prime: int
    conductor_exponent: int
    kodaira: str
    tamagawa: int
    reduction: Reduction
    discriminant_valuation: int

    @property
    def is_good(self) -> bool:
        return self.reduction is Reduction.GOOD

    @property
    def is_multiplicative(self) -> bool:
        return self.reduction in (Reduction.SPLIT, Reduction.NONSPLIT)


def good_local_data(ell: int) -> LocalData:
    return LocalData(ell, 0, "I0", 1, Reduction.GOOD, 0)


def _has_quadratic_root(a: int, b: int, c: int, p: int) -> bool:
    """True if a x^2 + b x + c has a root in F_p."""
    a, b, c = a % p, b % p, c % p
    if p == 2:
        return any((a * t * t + b * t + c) % 2 == 0 for t in (0, 1))
    if a == 0:
        return b != 0 or c == 0
    return legendre_symbol((b * b - 4 * a * c) % p, p) != -1


def _cubic_root_count(b: int, c: int, d: int, p: int) -> int:
    """Number of distinct roots of x^3 + b x^2 + c x + d in F_p."""
    _, factors = Poly(x**3 + b * x**2 + c * x + d, x, modulus=p).factor_list()
    return sum(1 for factor, _ in factors if factor.degree() == 1)


def tate_algorithm(model: Model, p: int) -> tuple[LocalData, Model]:
    """Run Tate's algorithm at p.

    The model is rescaled at p whenever it turns out to be non-minimal, so
    the returned model is integral and minimal at p; it only differs from the
    input by integral changes of coordinates and divisions by powers of p.

    Args:
        model: Integral Weierstrass model
        p: Prime

    Returns:
        Tuple of (local data, a model minimal at p)
    """
    half = (p + 1) // 2
    current = model
    while True:
        vd = valuation(current.discriminant, p)
        if vd == 0:
            return good_local_data(p), current

        # move the singular point of the reduction to (0, 0)
        a1, a2, a3, a4, a6 = current.ainvs
        b2, b4, b6, _ = current.b_invariants
        if p == 2:
            if b2 % 2 == 0:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            c4, c6 = current.c4, current.c6
            if c4 % p == 0:
                r = (-pow(12, -1, p) * b2) % p
            else:
                r = (-pow(12 * c4, -1, p) * (c6 + b2 * c4)) % p
            t = (-half * (a1 * r + a3)) % p
        current = current.rst(r, 0, t)
        a1, a2, a3, a4, a6 = current.ainvs

        if current.c4 % p != 0:
            if _has_quadratic_root(1, a1, -a2, p):
                return LocalData(p, 1, f"I{vd}", vd, Reduction.SPLIT, vd), current
            tamagawa = 1 if vd % 2 else 2
            return LocalData(p, 1, f"I{vd}", tamagawa, Reduction.NONSPLIT, vd), current

        if valuation(a6, p) < 2:
            return LocalData(p, vd, "II", 1, Reduction.ADDITIVE, vd), current
        if valuation(current.b8, p) < 3:
            return LocalData(p, vd - 1, "III", 2, Reduction.ADDITIVE, vd), current
        if valuation(current.b6, p) < 3:
            tamagawa = 3 if _has_quadratic_root(1, a3 // p, -a6 // p**2, p) else 1
            return LocalData(p, vd - 2, "IV", tamagawa, Reduction.ADDITIVE, vd), current

        # now p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        else:
            s = -a1 * half
            t = -a3 * half
        current = current.rst(0, s, t)
        a1, a2, a3, a4, a6 = current.ainvs

        b = a2 // p
        c = a4 // p**2
        d = a6 // p**3
        w = 27 * d * d - b * b * c * c + 4 * b**3 * d - 18 * b * c * d + 4 * c**3
        xx = 3 * c - b * b
        if w % p != 0:
            tamagawa = 1 + _cubic_root_count(b, c, d, p)
            return LocalData(p, vd - 4, "I0*", tamagawa, Reduction.ADDITIVE, vd), current

        if xx % p != 0:
            # double root: I_m*
            if p == 2:
                r = c
            elif p == 3:
                r = b * c
            else:
                r = (b * c - 9 * d) * pow(2 * xx, -1, p)
            current = current.rst(p * (r % p), 0, 0)
            ix, iy = 3, 3
            mx, my = p * p, p * p
            tamagawa = 0
            while tamagawa == 0:
                a1, a2, a3, a4, a6 = current.ainvs
                xa2 = a2 // p
                xa3 = a3 // my
                xa6 = a6 // (mx * my)
                if (xa3 * xa3 + 4 * xa6) % p != 0:
                    tamagawa = 4 if _has_quadratic_root(1, xa3, -xa6, p) else 2
                    break
                t = my * xa6 if p == 2 else my * ((-xa3 * half) % p)
                current = current.rst(0, 0, t)
                my *= p
                iy += 1
                a1, a2, a3, a4, a6 = current.ainvs
                xa2 = a2 // p
                xa4 = a4 // (p * mx)
                xa6 = a6 // (mx * my)
                if (xa4 * xa4 - 4 * xa2 * xa6) % p != 0:
                    tamagawa = 4 if _has_quadratic_root(xa2, xa4, xa6, p) else 2
                    break
                if p == 2:
                    r = mx * ((xa6 * xa2) % 2)
                else:
                    r = mx * ((-xa4 * pow(2 * xa2, -1, p)) % p)
                current = current.rst(r, 0, 0)
                mx *= p
                ix += 1
            m = ix + iy - 5
            return LocalData(p, vd - m - 4, f"I{m}*", tamagawa, Reduction.ADDITIVE, vd), current

        # triple root
        rp = -d if p == 3 else -b * pow(3, -1, p)
        current = current.rst(p * (rp % p), 0, 0)
        a1, a2, a3, a4, a6 = current.ainvs
        x3 = a3 // p**2
        x6 = a6 // p**4
        if (x3 * x3 + 4 * x6) % p != 0:
            tamagawa = 3 if _has_quadratic_root(1, x3, -x6, p) else 1
            return LocalData(p, vd - 6, "IV*", tamagawa, Reduction.ADDITIVE, vd), current

        t = x6 if p == 2 else x3 * half
        current = current.rst(0, 0, -(p**2) * (t % p))
        a1, a2, a3, a4, a6 = current.ainvs
        if valuation(a4, p) < 4:
            return LocalData(p, vd - 7, "III*", 2, Reduction.ADDITIVE, vd), current
        if valuation(a6, p) < 6:
            return LocalData(p, vd - 8, "II*", 1, Reduction.ADDITIVE, vd), current

        logger.debug(f"Model {current} is not minimal at {p}, rescaling")
        current = current.scale_down(p)
