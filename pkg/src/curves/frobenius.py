"""Point counts over prime fields, traces of Frobenius and Dirichlet coefficients."""

import logging
from functools import lru_cache

from sympy import isprime, primerange

from src.curves.model import Model
from src.curves.tate import Reduction
from src.curves.weierstrass import WeierstrassCurve
from src.errors import BadReduction, NotPrime

logger = logging.getLogger(__name__)


def count_points(model: Model, ell: int) -> int:
    """Number of points of the reduction mod ell, the point at infinity included.

    For odd ell the equation is completed to (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    and each x contributes 1 + (rhs | ell) points; ell = 2 is enumerated directly.
    """
    if ell == 2:
        a1, a2, a3, a4, a6 = model.ainvs
        affine = sum(
            1
            for xx in range(2)
            for y in range(2)
            if (y * y + a1 * xx * y + a3 * y - xx**3 - a2 * xx * xx - a4 * xx - a6) % 2 == 0
        )
        return affine + 1

    chi = [-1] * ell
    chi[0] = 0
    for y in range(1, (ell + 1) // 2):
        chi[y * y % ell] = 1

    b2, b4, b6 = model.b2 % ell, 2 * model.b4 % ell, model.b6 % ell
    total = ell + 1
    for xx in range(ell):
        total += chi[(((4 * xx + b2) * xx + b4) * xx + b6) % ell]
    return total


def ap(curve: WeierstrassCurve, ell: int) -> int:
    """Trace of Frobenius a_ell = ell + 1 - #E(F_ell) at a prime of good reduction.

    Raises:
        NotPrime: If ell is not prime
        BadReduction: If ell divides the conductor
    """
    if not isprime(ell):
        raise NotPrime(f"{ell} is not prime")
    if curve.conductor % ell == 0:
        raise BadReduction(f"{curve.name} has bad reduction at {ell}")
    return ell + 1 - count_points(curve.model, ell)


def hecke_eigenvalue(curve: WeierstrassCurve, ell: int) -> int:
    """a_ell for every prime: the trace when good, +1/-1/0 by reduction type when bad."""
    if curve.has_good_reduction(ell):
        return ap(curve, ell)
    reduction = curve.local_data(ell).reduction
    if reduction is Reduction.SPLIT:
        return 1
    if reduction is Reduction.NONSPLIT:
        return -1
    return 0


@lru_cache(maxsize=64)
def an_list(curve: WeierstrassCurve, n_max: int) -> tuple[int, ...]:
    """Dirichlet coefficients a_0..a_{n_max} of L(E, s) (a_0 = 0).

    Built multiplicatively from the prime coefficients through the smallest
    prime factor of each n.
    """
    smallest = list(range(n_max + 1))
    for i in range(2, int(n_max**0.5) + 1):
        if smallest[i] == i:
            for j in range(i * i, n_max + 1, i):
                if smallest[j] == j:
                    smallest[j] = i

    prime_coefficients = {ell: hecke_eigenvalue(curve, ell) for ell in primerange(2, n_max + 1)}
    an = [0] * (n_max + 1)
    if n_max >= 1:
        an[1] = 1
    for n in range(2, n_max + 1):
        ell = smallest[n]
        m = n // ell
        if m % ell != 0:
            an[n] = an[m] * prime_coefficients[ell]
        elif curve.has_good_reduction(ell):
            an[n] = prime_coefficients[ell] * an[m] - ell * an[m // ell]
        else:
            an[n] = prime_coefficients[ell] * an[m]
    logger.debug(f"Computed {n_max} Dirichlet coefficients for {curve.name}")
    return tuple(an)


def torsion_witness(curve: WeierstrassCurve, p: int, bound: int = 1000) -> int | None:
    """A good prime ell <= bound, ell != p, with p not dividing #E(F_ell), or None."""
    for ell in primerange(2, bound + 1):
        if ell == p or not curve.has_good_reduction(ell):
            continue
        if count_points(curve.model, ell) % p != 0:
            return ell
    return None


def torsion_p_trivial(curve: WeierstrassCurve, p: int, bound: int = 1000) -> bool:
    """One-sided certificate that E(Q)[p] = 0.

    Rational p-torsion injects into E(F_ell) for good ell != p, so a single
    ell with p not dividing #E(F_ell) certifies triviality. False only means
    that no certificate was found below the bound.
    """
    witness = torsion_witness(curve, p, bound)
    if witness is None:
        logger.warning(f"No {p}-torsion certificate for {curve.name} below {bound}")
        return False
    return True
