"""Heegner-type factorizations of the conductor and root numbers over K."""

import logging
from dataclasses import dataclass, field
from enum import StrEnum

from sympy import factorint

from src.errors import RamifiedBadPrime
from src.fields.kronecker import kronecker
from src.fields.quadratic import ImagQuadField

logger = logging.getLogger(__name__)


class HeegnerClass(StrEnum):
    STRICT = "strict_heegner"
    GENERALIZED = "generalized_heegner"
    FAILS = "fails"


@dataclass(frozen=True)
class HeegnerFactorization:
    """N = N_plus * N_minus with N_plus split and N_minus inert in K.

    Attributes:
        N_plus: Product of the split prime powers of N
        N_minus: Product of the inert prime powers of N
        classification: Whether the generalized Heegner hypothesis holds
        splitting: kronecker(D, ell) for every prime ell | N
        reason: Why the hypothesis fails (empty when it holds)
    """

    N_plus: int
    N_minus: int
    classification: HeegnerClass
    splitting: dict[int, int] = field(default_factory=dict)
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.classification is not HeegnerClass.FAILS


def heegner_factorization(N: int, field: ImagQuadField) -> HeegnerFactorization:
    """Classify N against the generalized Heegner hypothesis for K.

    Fails if a prime of N ramifies in K, if N_minus is not squarefree, or if
    N_minus has an odd number of prime factors.
    """
    factors = factorint(N)
    splitting = {ell: kronecker(field.discriminant, ell) for ell in sorted(factors)}
    N_plus = 1
    N_minus = 1
    for ell, e in factors.items():
        if splitting[ell] == 1:
            N_plus *= ell**e
        elif splitting[ell] == -1:
            N_minus *= ell**e

    ramified = [ell for ell, s in splitting.items() if s == 0]
    inert = [ell for ell, s in splitting.items() if s == -1]
    if ramified:
        reason = f"primes {ramified} of N ramify in {field}"
        classification = HeegnerClass.FAILS
    elif any(factors[ell] > 1 for ell in inert):
        reason = f"N- = {N_minus} is not squarefree"
        classification = HeegnerClass.FAILS
    elif len(inert) % 2:
        reason = f"N- = {N_minus} has an odd number ({len(inert)}) of inert primes"
        classification = HeegnerClass.FAILS
    else:
        reason = ""
        classification = HeegnerClass.STRICT if N_minus == 1 else HeegnerClass.GENERALIZED

    return HeegnerFactorization(N_plus, N_minus, classification, splitting, reason)


def root_number_over_K(N: int, field: ImagQuadField) -> int:
    """Sign of the functional equation of L(E/K, s), equal to kronecker(D, -N).

    Raises:
        RamifiedBadPrime: If N and D share a prime
    """
    D = field.discriminant
    if any(N % ell == 0 for ell in factorint(abs(D))):
        raise RamifiedBadPrime(f"conductor {N} shares a prime with the discriminant {D}")
    sign = kronecker(D, -N)
    assert sign == -kronecker(D, N)
    if heegner_factorization(N, field).holds:
        assert sign == -1, f"Heegner hypothesis holds for ({N}, {field}) but the root number is {sign}"
    return sign
