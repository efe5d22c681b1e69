"""Mazur-Tate elements: modular symbols summed over the cyclotomic Z_p-tower."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from src.errors import BadReduction, RamifiedTwist, SignMismatch
from src.fields.kronecker import kronecker
from src.modsym.symbol import ModularSymbol, twist_sign

logger = logging.getLogger(__name__)


def group_order(n: int, p: int) -> int:
    """Size of the level-n group <gamma> mod p^(n+1); level -1 is the trivial group."""
    return p ** max(n, 0)


@dataclass(frozen=True)
class MazurTateElement:
    """theta_n = sum_j c_j gamma^j in Q[Gamma_n], Gamma_n cyclic of order p^n.

    Coefficients are kept as integers over the symbol's common denominator.

    Attributes:
        p: Prime
        n: Level (the element lives mod p^(n+1)); -1 marks the auxiliary theta_{-1}
        numerators: denominator * c_j for j = 0 .. p^n - 1
        denominator: Common denominator t of the symbol
        sign: Sign of the symbol used
        D: Twisting discriminant (1 for none)
        gamma: Topological generator of 1 + pZ_p used for the indexing
    """

    p: int
    n: int
    numerators: tuple[int, ...]
    denominator: int
    sign: int
    D: int = 1
    gamma: int | None = None

    def __post_init__(self) -> None:
        if len(self.numerators) != group_order(self.n, self.p):
            raise ValueError(f"level {self.n} needs {group_order(self.n, self.p)} coefficients")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.denominator) for c in self.numerators)

    @property
    def augmentation(self) -> Fraction:
        """Image under the trivial character."""
        return Fraction(sum(self.numerators), self.denominator)

    def project(self) -> "MazurTateElement":
        """Image at level n - 1 (sum over the fibres of gamma^j -> gamma^(j mod p^(n-1)))."""
        size = group_order(self.n - 1, self.p)
        projected = [0] * size
        for j, c in enumerate(self.numerators):
            projected[j % size] += c
        return MazurTateElement(self.p, self.n - 1, tuple(projected), self.denominator, self.sign, self.D, self.gamma)

    def nu(self) -> "MazurTateElement":
        """Image at level n + 1 under the corestriction that spreads each coefficient over its fibre."""
        size = group_order(self.n + 1, self.p)
        current = len(self.numerators)
        spread = tuple(self.numerators[j % current] for j in range(size))
        return MazurTateElement(self.p, self.n + 1, spread, self.denominator, self.sign, self.D, self.gamma)


def _check_inputs(symbol: ModularSymbol, p: int, D: int) -> None:
    if symbol.level % p == 0:
        raise BadReduction(f"p = {p} divides the level {symbol.level}")
    if symbol.sign != twist_sign(D):
        raise SignMismatch(f"a symbol of sign {symbol.sign:+d} cannot twist by D = {D}")
    if math.gcd(D, symbol.level * p) > 1:
        raise RamifiedTwist(f"D = {D} is not coprime to p * N = {p * symbol.level}")


class _TwistedEvaluator:
    """Numerators of phi_D(r) = kronecker(D, -1) sum_v kronecker(D, v) [r - v/|D|].

    The kronecker(D, -1) factor makes phi_D(0) equal the character sum of
    algebraic_L_ratio for D.
    """

    def __init__(self, symbol: ModularSymbol, D: int) -> None:
        self.symbol = symbol
        self.m = abs(D)
        self.adjustment = kronecker(D, -1)
        self.weights = [(v, kronecker(D, v)) for v in range(self.m)]
        self.weights = [(v, chi) for v, chi in self.weights if chi]

    def __call__(self, a: int, q: int) -> int:
        """t * phi_D(a/q)."""
        if self.m == 1:
            return self.symbol.eval_numerator(a % q, q)
        denominator = q * self.m
        total = 0
        for v, chi in self.weights:
            numerator = (a * self.m - v * q) % denominator
            total += chi * self.symbol.eval_numerator(numerator, denominator)
        return self.adjustment * total


def mazur_tate(symbol: ModularSymbol, p: int, n: int, D: int = 1, gamma: int | None = None) -> MazurTateElement:
    """The Mazur-Tate element theta_n of a (twisted) modular symbol.

    The coefficient of gamma^j is the sum over the Teichmuller lifts u of the
    (p-1)-th roots of unity of phi_D(u gamma^j / p^(n+1)).

    Args:
        symbol: Eigen-symbol (normalized for meaningful values)
        p: Odd prime of good reduction, not dividing D
        n: Level, n >= 0
        D: Fundamental discriminant of the twist, or 1
        gamma: Generator of 1 + pZ_p (defaults to 1 + p)

    Raises:
        BadReduction: If p divides the level
        RamifiedTwist: If D is not coprime to p * N
        SignMismatch: If the symbol's sign does not match D
    """
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    _check_inputs(symbol, p, D)
    gamma = gamma if gamma is not None else 1 + p
    if gamma % p != 1 or gamma % (p * p) == 1:
        raise ValueError(f"gamma = {gamma} does not generate 1 + {p}Z_{p}")

    modulus = p ** (n + 1)
    size = p**n
    teichmuller = [pow(a, size, modulus) for a in range(1, p)]
    evaluate = _TwistedEvaluator(symbol, D)

    numerators = []
    power = 1
    for _ in range(size):
        numerators.append(sum(evaluate(u * power % modulus, modulus) for u in teichmuller))
        power = power * gamma % modulus

    logger.debug(f"theta_{n} at p = {p}, D = {D}: augmentation {Fraction(sum(numerators), symbol.denominator)}")
    return MazurTateElement(p, n, tuple(numerators), symbol.denominator, symbol.sign, D, gamma)


def theta_minus_one(symbol: ModularSymbol, p: int, D: int = 1, gamma: int | None = None) -> MazurTateElement:
    """The auxiliary level -1 element (p - 1) phi_D(0).

    It is the element making pi(theta_1) = a theta_0 - nu(theta_{-1}) hold, so
    the stabilized element at level 0 is norm-compatible with level 1.
    """
    _check_inputs(symbol, p, D)
    value = (p - 1) * _TwistedEvaluator(symbol, D)(0, 1)
    return MazurTateElement(p, -1, (value,), symbol.denominator, symbol.sign, D, gamma if gamma is not None else 1 + p)


def mazur_tate_tower(
    symbol: ModularSymbol, p: int, n: int, D: int = 1, gamma: int | None = None
) -> list[MazurTateElement]:
    """[theta_{n-2}, theta_{n-1}, theta_n], with theta_{-1} standing in where n - 2 = -1."""
    if n < 1:
        raise ValueError(f"a stabilization tower needs n >= 1, got {n}")
    lower = theta_minus_one(symbol, p, D, gamma) if n == 1 else mazur_tate(symbol, p, n - 2, D, gamma)
    return [lower, mazur_tate(symbol, p, n - 1, D, gamma), mazur_tate(symbol, p, n, D, gamma)]
