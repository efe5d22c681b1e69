"""The Kronecker symbol (D | m)."""

from sympy import factorint, jacobi_symbol


def kronecker(D: int, m: int) -> int:
    """Kronecker symbol (D | m), completely multiplicative in m.

    Conventions: (D | 0) is 1 for D = +-1 and 0 otherwise, (D | -1) is the
    sign of D, and (D | 2) is 0 for even D, 1 for D = +-1 mod 8 and -1 for
    D = +-3 mod 8.

    Args:
        D: Top entry (usually a discriminant)
        m: Bottom entry

    Returns:
        -1, 0 or 1
    """
    if m == 0:
        return 1 if abs(D) == 1 else 0

    result = 1
    if m < 0:
        m = -m
        if D < 0:
            result = -1

    twos = 0
    while m % 2 == 0:
        m //= 2
        twos += 1
    if twos:
        if D % 2 == 0:
            return 0
        if twos % 2 and D % 8 in (3, 5):
            result = -result

    if m == 1:
        return result
    return result * jacobi_symbol(D % m, m)


def is_fundamental_discriminant(D: int) -> bool:
    """True if D is the discriminant of a quadratic field (D != 1)."""
    from_squarefree = D % 4 == 1 and _is_squarefree(D)
    from_even = D % 4 == 0 and (D // 4) % 4 in (2, 3) and _is_squarefree(D // 4)
    return D != 1 and (from_squarefree or from_even)


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(d)) for a squarefree integer d != 0, 1."""
    if not _is_squarefree(d) or d in (0, 1):
        raise ValueError(f"{d} is not a squarefree integer other than 0 and 1")
    return d if d % 4 == 1 else 4 * d


def _is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values())
