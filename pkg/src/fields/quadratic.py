"""Imaginary quadratic fields and their class numbers via reduced binary quadratic forms."""

import logging
import math
import threading
from dataclasses import dataclass

from src.errors import InputError, NonSplitPrime
from src.fields.kronecker import fundamental_discriminant, kronecker

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """The form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        """|b| <= a <= c, with b >= 0 when |b| = a or a = c."""
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 if abs(b) == a or a == c else True

    def normalized(self) -> "BinaryQuadraticForm":
        """Translate so that -a < b <= a."""
        a, b, c = self.a, self.b, self.c
        r = (a - b) // (2 * a)
        return BinaryQuadraticForm(a, b + 2 * r * a, a * r * r + b * r + c)

    def reduced(self) -> "BinaryQuadraticForm":
        """The unique reduced form properly equivalent to this positive definite form."""
        if self.a <= 0 or self.discriminant >= 0:
            raise ValueError(f"{self} is not positive definite")
        form = self.normalized()
        while not form.is_reduced():
            form = BinaryQuadraticForm(form.c, -form.b, form.a).normalized()
        return form

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def reduced_forms(D: int) -> list[BinaryQuadraticForm]:
    """All reduced primitive forms of negative discriminant D."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            numerator = b * b - D
            if numerator % (4 * a):
                continue
            form = BinaryQuadraticForm(a, b, numerator // (4 * a))
            if form.is_reduced() and form.is_primitive():
                forms.append(form)
        a += 1
    return forms


class ImagQuadField:
    """The field K = Q(sqrt(-d)) for a squarefree d > 0.

    Args:
        d: Positive squarefree integer (as in "primes d < 100")
    """

    def __init__(self, d: int) -> None:
        if d <= 0:
            raise InputError(f"d must be positive, got {d}")
        try:
            self.discriminant = fundamental_discriminant(-d)
        except ValueError as e:
            raise InputError(f"d = {d} is not squarefree") from e
        self.d = d
        self._class_number: int | None = None
        self._lock = threading.Lock()

    @property
    def D(self) -> int:
        return self.discriminant

    @property
    def class_number(self) -> int:
        with self._lock:
            if self._class_number is None:
                self._class_number = len(reduced_forms(self.discriminant))
                logger.debug(f"h({self.discriminant}) = {self._class_number}")
            return self._class_number

    def splitting(self, ell: int) -> int:
        """kronecker(D, ell): 1 split, -1 inert, 0 ramified."""
        return kronecker(self.discriminant, ell)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImagQuadField):
            return NotImplemented
        return self.d == other.d

    def __hash__(self) -> int:
        return hash(self.d)

    def __repr__(self) -> str:
        return f"ImagQuadField(d={self.d}, D={self.discriminant})"

    def __str__(self) -> str:
        return f"Q(sqrt(-{self.d}))"


def class_number(field: ImagQuadField) -> int:
    return field.class_number


def anticyclotomic_totally_ramified(field: ImagQuadField, p: int) -> bool:
    """Certify that both primes above a split p are totally ramified in the anticyclotomic Z_p-extension.

    The certificate is the sufficient condition p not dividing h_K; False only
    means "not certified".

    Raises:
        NonSplitPrime: If p is inert or ramified in K
    """
    if field.splitting(p) != 1:
        raise NonSplitPrime(f"{p} does not split in {field}")
    certified = field.class_number % p != 0
    if not certified:
        logger.warning(f"{p} divides h = {field.class_number} of {field}; ramification not certified")
    return certified
