"""Capped-precision p-adic numbers.

A value is stored as ``unit * p**valuation`` known modulo ``p**(valuation + cap)``.
Exact values (integers that never lost precision, and exact zero) carry an
infinite cap. An inexact zero ``O(p^k)`` is stored with ``unit = 0``,
``cap = 0`` and ``valuation = k``; it is the only non-exact value whose unit is
not a p-adic unit.
"""

import logging
import math
from fractions import Fraction

from src.errors import SupersingularInput

logger = logging.getLogger(__name__)

INF = math.inf


def valuation(value: int | Fraction, p: int) -> int | float:
    """Return the p-adic valuation of an integer or rational (INF for zero)."""
    if value == 0:
        return INF
    if isinstance(value, Fraction):
        return valuation(value.numerator, p) - valuation(value.denominator, p)
    value = abs(value)
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


class PAdicNumber:
    """An element of Q_p known to a finite (or infinite) absolute precision."""

    __slots__ = ("p", "unit", "valuation", "cap")

    def __init__(self, p: int, unit: int, valuation: int | float, cap: int | float) -> None:
        self.p = p
        self.unit = unit
        self.valuation = valuation
        self.cap = cap

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, p: int, prec: int | float = INF) -> "PAdicNumber":
        """Exact zero, or the inexact zero O(p^prec) when prec is finite."""
        if prec == INF:
            return cls(p, 0, INF, INF)
        return cls(p, 0, prec, 0)

    @classmethod
    def from_int(cls, value: int, p: int, prec: int | float = INF) -> "PAdicNumber":
        """Build from an integer known modulo p^prec (absolute precision)."""
        return cls._normalize(p, value, 0, prec)

    @classmethod
    def from_rational(cls, value: int | Fraction, p: int, prec: int | float = INF) -> "PAdicNumber":
        """Build from a rational, keeping absolute precision prec.

        Exact rationals with a denominator prime to p are only representable
        to finite precision, so prec must be finite unless value is an integer.
        """
        value = Fraction(value)
        if value.denominator == 1:
            return cls.from_int(value.numerator, p, prec)
        if value == 0:
            return cls.zero(p, prec)
        if prec == INF:
            raise ValueError("a non-integral rational needs a finite precision")
        v = valuation(value, p)
        num = value.numerator // p ** max(v, 0) if v > 0 else value.numerator
        den = value.denominator // p ** max(-v, 0) if v < 0 else value.denominator
        cap = prec - v
        if cap <= 0:
            return cls.zero(p, prec)
        modulus = p**cap
        unit = num * pow(den, -1, modulus) % modulus
        return cls(p, unit, v, cap)

    @classmethod
    def _normalize(cls, p: int, x: int, v: int, prec: int | float) -> "PAdicNumber":
        """Value x * p^v known modulo p^prec."""
        if prec == INF:
            if x == 0:
                return cls.zero(p)
            w = valuation(x, p)
            return cls(p, x // p**w, v + w, INF)
        if prec <= v:
            return cls.zero(p, prec)
        modulus = p ** (prec - v)
        x %= modulus
        if x == 0:
            return cls.zero(p, prec)
        w = valuation(x, p)
        return cls(p, x // p**w, v + w, prec - v - w)

    def _coerce(self, other) -> "PAdicNumber":
        if isinstance(other, PAdicNumber):
            if other.p != self.p:
                raise ValueError(f"cannot combine {self.p}-adic and {other.p}-adic numbers")
            return other
        if isinstance(other, int):
            return PAdicNumber.from_int(other, self.p)
        if isinstance(other, Fraction):
            return PAdicNumber.from_rational(other, self.p, self.precision_absolute)
        return NotImplemented

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def precision_absolute(self) -> int | float:
        """Exponent k such that the value is known modulo p^k (INF when exact)."""
        return self.valuation + self.cap

    @property
    def precision_relative(self) -> int | float:
        """Number of known digits after the leading one."""
        return self.cap

    def is_zero(self) -> bool:
        """True for exact zero and for zeros to the claimed precision."""
        return self.unit == 0

    def is_exact_zero(self) -> bool:
        """True only for the exact zero, never for O(p^k)."""
        return self.unit == 0 and self.valuation == INF

    def is_exact(self) -> bool:
        """True when no digit has been lost."""
        return self.cap == INF

    def is_unit(self) -> bool:
        """True when the valuation is zero and the value is nonzero to its precision."""
        return self.unit != 0 and self.valuation == 0

    def lift(self) -> Fraction:
        """The stored representative as an exact rational."""
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    def residue(self, prec: int | None = None) -> int:
        """Integer representative modulo p^prec (defaults to the absolute precision)."""
        if self.valuation < 0 and self.unit != 0:
            raise ValueError(f"{self} is not p-integral")
        if prec is None:
            if self.precision_absolute == INF:
                raise ValueError("an exact value has no finite residue by default")
            prec = self.precision_absolute
        if self.unit == 0:
            return 0
        return self.unit * self.p**self.valuation % self.p**prec

    def balanced(self, prec: int | None = None) -> int:
        """Residue in the balanced range (-p^prec/2, p^prec/2]."""
        if prec is None:
            prec = self.precision_absolute
        if prec == INF:
            return self.unit * self.p**self.valuation if self.unit else 0
        modulus = self.p**prec
        r = self.residue(prec)
        return r - modulus if r > modulus // 2 else r

    def reduce_precision(self, prec: int | float) -> "PAdicNumber":
        """Clamp the absolute precision to at most prec."""
        if prec >= self.precision_absolute:
            return self
        if self.unit == 0:
            return PAdicNumber.zero(self.p, prec)
        return PAdicNumber._normalize(self.p, self.unit, self.valuation, prec)

    def agrees_with(self, other: "PAdicNumber") -> bool:
        """True when both values agree on every digit both of them claim."""
        other = self._coerce(other)
        return (self - other).is_zero()

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "PAdicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero():
            return other
        if other.is_exact_zero():
            return self
        prec = min(self.precision_absolute, other.precision_absolute)
        v = min(self.valuation, other.valuation)
        x = self.unit * self.p ** (self.valuation - v) + other.unit * self.p ** (other.valuation - v)
        return PAdicNumber._normalize(self.p, x, v, prec)

    __radd__ = __add__

    def __neg__(self) -> "PAdicNumber":
        if self.unit == 0:
            return self
        if self.cap == INF:
            return PAdicNumber(self.p, -self.unit, self.valuation, INF)
        return PAdicNumber(self.p, -self.unit % self.p**self.cap, self.valuation, self.cap)

    def __sub__(self, other) -> "PAdicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PAdicNumber":
        return (-self) + other

    def __mul__(self, other) -> "PAdicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return PAdicNumber.zero(self.p)
        v = self.valuation + other.valuation
        cap = min(self.cap, other.cap)
        if cap == INF:
            return PAdicNumber(self.p, self.unit * other.unit, v, INF)
        if cap == 0:
            return PAdicNumber.zero(self.p, v)
        modulus = self.p**cap
        return PAdicNumber(self.p, self.unit * other.unit % modulus, v, cap)

    __rmul__ = __mul__

    def inverse(self) -> "PAdicNumber":
        """Multiplicative inverse with the same relative precision.

        Returns:
            The inverse, with valuation negated

        Raises:
            ZeroDivisionError: If the value is zero to its precision
            ValueError: If the value is an exact integer that is not +-1 times a power of p
        """
        if self.unit == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        if self.cap == INF:
            if abs(self.unit) == 1:
                return PAdicNumber(self.p, self.unit, -self.valuation, INF)
            raise ValueError("the inverse of an exact non-unit integer needs a finite precision")
        modulus = self.p**self.cap
        return PAdicNumber(self.p, pow(self.unit, -1, modulus), -self.valuation, self.cap)

    def __truediv__(self, other) -> "PAdicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.cap == INF and self.cap != INF and other.unit != 0:
            other = PAdicNumber.from_int(other.unit, self.p, self.cap).__mul__(
                PAdicNumber(self.p, 1, other.valuation, INF)
            )
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "PAdicNumber":
        """Square-and-multiply power; negative exponents go through inverse()."""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = PAdicNumber.from_int(1, self.p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Comparison and display
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PAdicNumber):
            return NotImplemented
        return (self.p, self.unit, self.valuation, self.cap) == (other.p, other.unit, other.valuation, other.cap)

    def __hash__(self) -> int:
        return hash((self.p, self.unit, self.valuation, self.cap))

    def __repr__(self) -> str:
        return f"PAdicNumber(p={self.p}, unit={self.unit}, valuation={self.valuation}, cap={self.cap})"

    def __str__(self) -> str:
        if self.is_exact_zero():
            return "0"
        if self.unit == 0:
            return f"O({self.p}^{self.valuation})"
        if self.valuation >= 0:
            body = str(self.balanced())
        else:
            body = f"{self.unit}*{self.p}^{self.valuation}"
        if self.cap == INF:
            return body
        return f"{body} + O({self.p}^{self.precision_absolute})"


def unit_root(a_p: int, p: int, cap: int) -> PAdicNumber:
    """Hensel-lift the unit root of x^2 - a_p x + p.

    Args:
        a_p: Trace of Frobenius at p
        p: Odd prime of good ordinary reduction
        cap: Precision exponent of the result

    Returns:
        alpha with v_p(alpha) = 0 and alpha^2 - a_p alpha + p = 0 mod p^cap

    Raises:
        SupersingularInput: If p divides a_p
    """
    if a_p % p == 0:
        raise SupersingularInput(f"a_p = {a_p} is divisible by p = {p}; no unit root exists")

    modulus = p**cap
    alpha = a_p % p
    precision = 1
    while precision < cap:
        precision = min(2 * precision, cap)
        m = p**precision
        f = (alpha * alpha - a_p * alpha + p) % m
        df = (2 * alpha - a_p) % m
        alpha = (alpha - f * pow(df, -1, m)) % m

    assert (alpha * alpha - a_p * alpha + p) % modulus == 0
    return PAdicNumber.from_int(alpha, p, cap)
