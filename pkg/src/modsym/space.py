"""Weight-2 modular symbols for Gamma0(N) presented by Manin symbols."""

import logging
from collections import defaultdict
from collections.abc import Iterator
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from src.errors import ResourceLimit
from src.modsym.p1 import P1List, gcdex, index_formula

logger = logging.getLogger(__name__)

Vector = dict[int, Fraction]


def to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def to_qq(x: Fraction | int):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def merel(n: int) -> Iterator[tuple[int, int, int, int]]:
    """Matrices (a, b, c, d) of Merel's set for the Hecke operator T_n."""
    for a in range(1, n + 1):
        for d in range((n + a - 1) // a, n + 2 - a):
            bc = a * d - n
            if bc == 0:
                for b in range(a):
                    yield a, b, 0, d
                for c in range(1, d):
                    yield a, 0, c, d
            else:
                for b in range((bc - 1) // (d - 1) + 1, a):
                    if bc % b == 0:
                        yield a, b, bc // b, d


def continued_fraction_symbols(a: int, m: int) -> list[tuple[int, int]]:
    """Manin symbols (c, d) whose sum is the path {oo, a/m}.

    With convergents p_j/q_j of a/m, the path from p_{j-1}/q_{j-1} to
    p_j/q_j is g_j{0, oo} for g_j of bottom row ((-1)^(j-1) q_j, q_{j-1}).
    """
    if m <= 0:
        raise ValueError(f"denominator must be positive, got {m}")
    symbols = []
    q_before, q_prev = 1, 0
    numerator, denominator = a, m
    sign = -1
    while True:
        partial, remainder = divmod(numerator, denominator)
        q = partial * q_prev + q_before
        symbols.append((sign * q, q_prev))
        if remainder == 0:
            return symbols
        numerator, denominator = denominator, remainder
        q_before, q_prev = q_prev, q
        sign = -sign


def lift_to_sl2z(c: int, d: int, N: int) -> tuple[int, int, int, int]:
    """A matrix (a, b, c', d') in SL2(Z) with (c', d') = (c, d) mod N."""
    c %= N
    d %= N
    if N == 1:
        return 1, 0, 0, 1
    if c == 0:
        c = N
    while gcdex(c, d)[2] != 1:
        d += N
    x, y, _ = gcdex(d, c)
    return x, -y, c, d


class ManinSymbolSpace:
    """The space of weight-2 modular symbols of level N over Q.

    Generators are the Manin symbols (c:d) for (c:d) in P^1(Z/N); the
    quotient by the two-term relation x + xS = 0 and the three-term relation
    x + x(ST) + x(ST)^2 = 0 is computed by exact sparse elimination.

    Args:
        N: Level
        index_bound: Largest allowed size of P^1(Z/N)

    Raises:
        ResourceLimit: If the index exceeds index_bound
    """

    def __init__(self, N: int, index_bound: int = 100_000) -> None:
        index = index_formula(N)
        if index > index_bound:
            raise ResourceLimit(f"P^1(Z/{N}) has {index} elements, above the bound {index_bound}")
        self.N = N
        self.p1 = P1List(N)
        n = len(self.p1)
        if n != index:
            raise AssertionError(f"enumerated {n} cosets, index formula gives {index}")

        rows: dict[int, dict] = {}
        for i, (c, d) in enumerate(self.p1):
            self._add_relation(rows, i, [i, self.p1.index(d, -c)])
            self._add_relation(rows, n + i, [i, self.p1.index(d, -c - d), self.p1.index(-c - d, c)])
        relations = SDM(rows, (2 * n, n), QQ)
        reduced, pivots = relations.rref()

        pivot_set = set(pivots)
        self.free = [j for j in range(n) if j not in pivot_set]
        column = {j: k for k, j in enumerate(self.free)}
        self.coordinates: list[Vector] = [{} for _ in range(n)]
        for j in self.free:
            self.coordinates[j] = {column[j]: Fraction(1)}
        for row in reduced.values():
            pivot = min(row)
            self.coordinates[pivot] = {column[j]: -to_fraction(v) for j, v in row.items() if j != pivot}

        logger.info(f"Built modular symbols of level {N}: index {n}, dimension {self.dimension}")

    @staticmethod
    def _add_relation(rows: dict, row: int, columns: list[int]) -> None:
        entries = defaultdict(int)
        for j in columns:
            entries[j] += 1
        nonzero = {j: QQ(e) for j, e in entries.items() if e}
        if nonzero:
            rows[row] = nonzero

    @property
    def dimension(self) -> int:
        return len(self.free)

    @property
    def index(self) -> int:
        return len(self.p1)

    def symbol_coordinates(self, c: int, d: int) -> Vector:
        """Coordinates of the Manin symbol (c:d); empty when gcd(c, d, N) > 1."""
        i = self.p1.index(c, d)
        return self.coordinates[i] if i >= 0 else {}

    def path_coordinates(self, a: int, m: int) -> Vector:
        """Coordinates of the path {a/m, oo}; m = 0 stands for the cusp oo."""
        if m == 0:
            return {}
        if m < 0:
            a, m = -a, -m
        total: Vector = defaultdict(Fraction)
        for c, d in continued_fraction_symbols(a, m):
            for k, v in self.symbol_coordinates(c, d).items():
                total[k] -= v
        return {k: v for k, v in total.items() if v}

    def _operator(self, images: list[Vector]) -> SDM:
        rows = {}
        for k, image in enumerate(images):
            row = {j: to_qq(v) for j, v in image.items() if v}
            if row:
                rows[k] = row
        return SDM(rows, (self.dimension, self.dimension), QQ)

    def hecke_images(self, ell: int) -> list[Vector]:
        """Images x_k T_ell of the free generators (Merel's formula)."""
        images = []
        merel_set = list(merel(ell))
        for j in self.free:
            c, d = self.p1[j]
            image: Vector = defaultdict(Fraction)
            for a, b, cc, dd in merel_set:
                for k, v in self.symbol_coordinates(c * a + d * cc, c * b + d * dd).items():
                    image[k] += v
            images.append(dict(image))
        return images

    def hecke_matrix(self, ell: int) -> SDM:
        """Matrix whose row k is x_k T_ell; a functional phi is an eigenvector when T phi = a phi."""
        return self._operator(self.hecke_images(ell))

    def star_matrix(self) -> SDM:
        """The involution (c:d) -> (-c:d) induced by z -> -conj(z)."""
        return self._operator([self.symbol_coordinates(-c, d) for c, d in (self.p1[j] for j in self.free)])

    def fricke_images(self) -> list[Vector]:
        """Images of the free generators under W_N: z -> -1/(Nz)."""
        images = []
        for j in self.free:
            a, b, c, d = lift_to_sl2z(*self.p1[j], self.N)
            # W g{0, oo} = {-d/(Nb), -c/(Na)}
            image: Vector = defaultdict(Fraction)
            for k, v in self.path_coordinates(-d, self.N * b).items():
                image[k] += v
            for k, v in self.path_coordinates(-c, self.N * a).items():
                image[k] -= v
            images.append({k: v for k, v in image.items() if v})
        return images

    def fricke_matrix(self) -> SDM:
        return self._operator(self.fricke_images())

    def identity(self) -> SDM:
        return SDM.eye((self.dimension, self.dimension), QQ)


def build_space(N: int, index_bound: int = 100_000) -> ManinSymbolSpace:
    return ManinSymbolSpace(N, index_bound)
