"""The projective line P^1(Z/NZ), indexing right cosets of Gamma0(N) in SL2(Z)."""

import math

from sympy import primefactors


def gcdex(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    if b == 0:
        if a < 0:
            return -1, 0, -a
        return 1, 0, a
    q, r = divmod(a, b)
    x, y, g = gcdex(b, r)
    return y, x - y * q, g


def lift_unit(n: int, d: int, a: int) -> int:
    """Lift a unit a modulo a divisor d of n to a unit modulo n."""
    u, v = 1, n
    g = math.gcd(v, d)
    while g > 1:
        u *= g
        v //= g
        g = math.gcd(v, g)
    x, y, _ = gcdex(u, v)
    return (u * x + a * y * v) % n


def index_formula(N: int) -> int:
    """N * prod over ell | N of (1 + 1/ell)."""
    index = N
    for ell in primefactors(N):
        index = index // ell * (ell + 1)
    return index


class P1List:
    """Canonical representatives (c:d) of P^1(Z/NZ) with a lookup table.

    Every pair (u, v) with gcd(u, v, N) = 1 is reduced once at construction,
    so index() is a dictionary lookup.

    Args:
        N: Level, N >= 1
    """

    def __init__(self, N: int) -> None:
        if N < 1:
            raise ValueError(f"level must be positive, got {N}")
        self.N = N
        table = {}
        representatives = set()
        for u in range(N):
            for v in range(N):
                if math.gcd(math.gcd(u, v), N) != 1:
                    continue
                rep = self.normalize(u, v)
                table[(u, v)] = rep
                representatives.add(rep)
        self._list = sorted(representatives)
        position = {rep: i for i, rep in enumerate(self._list)}
        self._index = {pair: position[rep] for pair, rep in table.items()}

    def normalize(self, u: int, v: int) -> tuple[int, int]:
        """Canonical representative of (u:v)."""
        N = self.N
        if N == 1:
            return 0, 0
        u %= N
        v %= N
        if u == 0:
            if math.gcd(N, v) != 1:
                raise ValueError(f"({u}:{v}) is not in P^1(Z/{N})")
            return 0, 1
        _, s, g = gcdex(N, u)
        if math.gcd(g, v) > 1:
            raise ValueError(f"({u}:{v}) is not in P^1(Z/{N})")
        s = lift_unit(N, N // g, s)
        v = (s * v) % N
        if g == 1:
            return 1, v
        v = min((v * t) % N for t in range(1, N, N // g) if math.gcd(N, t) == 1)
        return g, v

    def __len__(self) -> int:
        return len(self._list)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self._list[i]

    def __iter__(self):
        return iter(self._list)

    def index(self, c: int, d: int) -> int:
        """Index of (c:d); -1 when gcd(c, d, N) > 1."""
        if self.N == 1:
            return 0
        return self._index.get((c % self.N, d % self.N), -1)
