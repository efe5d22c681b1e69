"""Local conditions on a curve over an imaginary quadratic field K."""

import logging

from src.curves.frobenius import ap
from src.curves.tate import LocalData
from src.curves.weierstrass import WeierstrassCurve
from src.errors import RamifiedBadPrime, RamifiedPrime, SupersingularInput
from src.fields.kronecker import kronecker

logger = logging.getLogger(__name__)

# Tamagawa numbers of additive types once the residue field is F_{ell^2}
_ADDITIVE_OVER_QUADRATIC = {"II": 1, "II*": 1, "III": 2, "III*": 2, "IV": 3, "IV*": 3}


def is_non_anomalous(curve: WeierstrassCurve, p: int, D: int) -> bool:
    """True if p divides no #E(F_v) for the places v of K above p.

    Raises:
        RamifiedPrime: If p divides D
        SupersingularInput: If p divides a_p
    """
    if D % p == 0:
        raise RamifiedPrime(f"{p} ramifies in the field of discriminant {D}")
    a_p = ap(curve, p)
    if a_p % p == 0:
        raise SupersingularInput(f"a_{p} = {a_p} is divisible by {p}")
    if kronecker(D, p) == 1:
        return a_p % p != 1
    # #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p) = 1 - a_p^2 mod p
    return (a_p * a_p) % p != 1


def _tamagawa_inert(data: LocalData) -> int:
    if data.is_multiplicative:
        return data.discriminant_valuation
    if data.kodaira in _ADDITIVE_OVER_QUADRATIC:
        return _ADDITIVE_OVER_QUADRATIC[data.kodaira]
    if data.kodaira == "I0*":
        return 1 if data.tamagawa == 1 else 4
    # I_m*: the quadratic deciding 2 versus 4 splits over F_{ell^2}
    return 4


def tamagawa_over_K(curve: WeierstrassCurve, D: int) -> dict[int, list[int]]:
    """Tamagawa numbers of E/K at the places above each bad prime.

    Raises:
        RamifiedBadPrime: If a bad prime divides D
    """
    result = {}
    for ell in curve.bad_primes:
        if D % ell == 0:
            raise RamifiedBadPrime(f"bad prime {ell} of {curve.name} ramifies in the field of discriminant {D}")
        data = curve.local_data(ell)
        if kronecker(D, ell) == 1:
            result[ell] = [data.tamagawa, data.tamagawa]
        else:
            result[ell] = [_tamagawa_inert(data)]
    return result


def tamagawa_p_indivisible_over_K(curve: WeierstrassCurve, D: int, p: int) -> bool:
    """True if p divides none of the Tamagawa numbers of E/K."""
    local = tamagawa_over_K(curve, D)
    logger.debug(f"Tamagawa numbers of {curve.name} over K (D = {D}): {local}")
    return all(c % p != 0 for values in local.values() for c in values)
