"""Elements a + b*alpha of Q_p(alpha) with alpha^2 = a_p*alpha - p."""

from fractions import Fraction

from src.arith.padic import PAdicNumber


class QuadExtElement:
    """An element of the quadratic extension cut out by x^2 - a_p x + p.

    Args:
        a: Base component
        b: Alpha component
        a_p: Trace of Frobenius fixing the minimal polynomial of alpha
    """

    __slots__ = ("a", "b", "a_p")

    def __init__(self, a: PAdicNumber, b: PAdicNumber, a_p: int) -> None:
        if a.p != b.p:
            raise ValueError("components must live over the same prime")
        self.a = a
        self.b = b
        self.a_p = a_p

    @property
    def p(self) -> int:
        """The underlying prime."""
        return self.a.p

    @classmethod
    def from_base(cls, value: PAdicNumber, a_p: int) -> "QuadExtElement":
        """Embed a p-adic number with an exact zero alpha component."""
        return cls(value, PAdicNumber.zero(value.p), a_p)

    @classmethod
    def alpha(cls, p: int, a_p: int) -> "QuadExtElement":
        """The root alpha itself."""
        return cls(PAdicNumber.zero(p), PAdicNumber.from_int(1, p), a_p)

    @classmethod
    def from_rationals(cls, a: Fraction, b: Fraction, p: int, a_p: int, prec: int) -> "QuadExtElement":
        """Build a + b*alpha from rationals known to absolute precision prec."""
        return cls(PAdicNumber.from_rational(a, p, prec), PAdicNumber.from_rational(b, p, prec), a_p)

    def _coerce(self, other) -> "QuadExtElement":
        if isinstance(other, QuadExtElement):
            if other.a_p != self.a_p:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, PAdicNumber | int):
            base = other if isinstance(other, PAdicNumber) else PAdicNumber.from_int(other, self.p)
            return QuadExtElement.from_base(base, self.a_p)
        return NotImplemented

    def __add__(self, other) -> "QuadExtElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.a + other.a, self.b + other.b, self.a_p)

    __radd__ = __add__

    def __neg__(self) -> "QuadExtElement":
        return QuadExtElement(-self.a, -self.b, self.a_p)

    def __sub__(self, other) -> "QuadExtElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExtElement(self.a - other.a, self.b - other.b, self.a_p)

    def __rsub__(self, other) -> "QuadExtElement":
        return (-self) + other

    def __mul__(self, other) -> "QuadExtElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        bd = self.b * other.b
        a = self.a * other.a - bd * self.p
        b = self.a * other.b + self.b * other.a + bd * self.a_p
        return QuadExtElement(a, b, self.a_p)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtElement":
        """Apply alpha -> a_p - alpha."""
        return QuadExtElement(self.a + self.b * self.a_p, -self.b, self.a_p)

    def norm(self) -> PAdicNumber:
        """Norm to Q_p, the product with the conjugate.

        For a + b*alpha this is a^2 + a_p*a*b + p*b^2.
        """
        product = self * self.conjugate()
        return product.a

    def trace(self) -> PAdicNumber:
        """Trace to Q_p, 2a + a_p*b."""
        return self.a * 2 + self.b * self.a_p

    def inverse(self) -> "QuadExtElement":
        """Inverse as conjugate / norm.

        Raises:
            ZeroDivisionError: If the norm is zero to its precision
        """
        n = self.norm()
        conj = self.conjugate()
        n_inv = n.inverse()
        return QuadExtElement(conj.a * n_inv, conj.b * n_inv, self.a_p)

    def __truediv__(self, other) -> "QuadExtElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "QuadExtElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExtElement.from_base(PAdicNumber.from_int(1, self.p), self.a_p)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        """True when both components are zero to their precision."""
        return self.a.is_zero() and self.b.is_zero()

    def in_base(self) -> bool:
        """True when the alpha component vanishes to its claimed precision."""
        return self.b.is_zero()

    def agrees_with(self, other: "QuadExtElement") -> bool:
        """Componentwise agreement on every digit both sides claim."""
        other = self._coerce(other)
        return self.a.agrees_with(other.a) and self.b.agrees_with(other.b)

    @property
    def precision_absolute(self) -> int | float:
        """Smaller of the two component precisions."""
        return min(self.a.precision_absolute, self.b.precision_absolute)

    def reduce_precision(self, prec: int | float) -> "QuadExtElement":
        """Clamp both components to absolute precision prec."""
        return QuadExtElement(self.a.reduce_precision(prec), self.b.reduce_precision(prec), self.a_p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadExtElement):
            return NotImplemented
        return (self.a, self.b, self.a_p) == (other.a, other.b, other.a_p)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.a_p))

    def __repr__(self) -> str:
        return f"QuadExtElement({self.a!r}, {self.b!r}, a_p={self.a_p})"

    def __str__(self) -> str:
        return f"({self.a}) + ({self.b})*alpha"
