"""Real and imaginary periods and numerically evaluated central L-values."""

import logging
import math
from dataclasses import dataclass

from mpmath.ctx_mp import MPContext

from src.curves.frobenius import an_list
from src.curves.weierstrass import WeierstrassCurve
from src.errors import RamifiedTwist
from src.fields.kronecker import kronecker

logger = logging.getLogger(__name__)


def _context(digits: int) -> MPContext:
    # mp.dps is process-global; every call works in its own context
    ctx = MPContext()
    ctx.dps = digits
    return ctx


@dataclass(frozen=True)
class Periods:
    """Least positive real period and least positive imaginary period of the Neron lattice."""

    omega_plus: object
    omega_minus: object
    digits: int

    def for_sign(self, sign: int):
        return self.omega_plus if sign > 0 else self.omega_minus


def periods(curve: WeierstrassCurve, digits: int = 60) -> Periods:
    """Periods of the invariant differential by the arithmetic-geometric mean.

    The roots of 4x^3 + b2 x^2 + 2 b4 x + b6 give the lattice: for positive
    discriminant (three real roots e1 > e2 > e3) it is rectangular, otherwise
    the least imaginary period is twice the imaginary part of the second
    basis vector.
    """
    ctx = _context(digits + 10)
    model = curve.model
    roots = ctx.polyroots([4, model.b2, 2 * model.b4, model.b6], maxsteps=200, extraprec=2 * digits)
    if curve.discriminant > 0:
        e1, e2, e3 = sorted((ctx.re(r) for r in roots), reverse=True)
        omega_plus = ctx.pi / ctx.agm(ctx.sqrt(e1 - e3), ctx.sqrt(e1 - e2))
        omega_minus = ctx.pi / ctx.agm(ctx.sqrt(e1 - e3), ctx.sqrt(e2 - e3))
    else:
        e1 = ctx.re(min(roots, key=lambda r: abs(ctx.im(r))))
        a = 3 * e1 + ctx.mpf(model.b2) / 4
        b = ctx.sqrt(3 * e1 * e1 + ctx.mpf(model.b2) * e1 / 2 + ctx.mpf(model.b4) / 2)
        omega_plus = 2 * ctx.pi / ctx.agm(2 * ctx.sqrt(b), ctx.sqrt(2 * b + a))
        omega_minus = 2 * ctx.pi / ctx.agm(2 * ctx.sqrt(b), ctx.sqrt(2 * b - a))
    logger.debug(f"Periods of {curve.name}: {ctx.nstr(omega_plus, 15)}, {ctx.nstr(omega_minus, 15)}")
    return Periods(omega_plus, omega_minus, digits)


def central_value(curve: WeierstrassCurve, D: int = 1, root_number: int = 1, digits: int = 60):
    """L(E, chi_D, 1) from the exponentially convergent series.

    With sqrt of the twisted conductor equal to |D| sqrt(N) and twisted root
    number w = root_number * kronecker(D, -N),
    L(E, chi_D, 1) = (1 + w) sum chi_D(n) a_n / n exp(-2 pi n / (|D| sqrt N)).

    Args:
        curve: The curve
        D: Fundamental discriminant coprime to N, or 1
        root_number: w(E)
        digits: Decimal digits of the result

    Raises:
        RamifiedTwist: If D shares a factor with N
    """
    N = curve.conductor
    if math.gcd(D, N) > 1:
        raise RamifiedTwist(f"D = {D} shares a factor with the conductor {N}")
    ctx = _context(digits + 10)
    twisted_sign = root_number * kronecker(D, -N)
    if twisted_sign == -1:
        return ctx.mpf(0)

    scale = abs(D) * ctx.sqrt(N)
    terms = int(digits * math.log(10) * float(scale) / (2 * math.pi)) + 20
    an = an_list(curve, terms)
    step = ctx.exp(-2 * ctx.pi / scale)
    power = ctx.mpf(1)
    total = ctx.mpf(0)
    for n in range(1, terms + 1):
        power *= step
        if an[n]:
            chi = kronecker(D, n)
            if chi:
                total += chi * an[n] * power / n
    return 2 * total


def algebraic_target(curve: WeierstrassCurve, D: int, root_number: int, curve_periods: Periods):
    """L(E, chi_D, 1) sqrt|D| / Omega^(sign of D) as an mpmath number."""
    ctx = _context(curve_periods.digits + 10)
    value = central_value(curve, D, root_number, curve_periods.digits)
    sign = 1 if D > 0 else -1
    return ctx.mpf(value) * ctx.sqrt(abs(D)) / curve_periods.for_sign(sign)
