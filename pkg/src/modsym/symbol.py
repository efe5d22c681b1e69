"""Hecke eigen-symbols attached to an elliptic curve and their values."""

import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from sympy import QQ, primerange
from sympy.polys.matrices.sdm import SDM

from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.errors import EigenspaceNotRankOne, RamifiedTwist, SignMismatch
from src.fields.kronecker import kronecker
from src.modsym.space import ManinSymbolSpace, continued_fraction_symbols, to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModularSymbol:
    """A rational functional on the Manin symbols of level N.

    Values on Manin symbols are stored as integers over one common
    denominator, so every value [a/m] lies in (1/denominator) Z.

    Attributes:
        space: The symbol space the functional lives on
        sign: +1 or -1, the eigenvalue of the star involution
        vector: Values on the free generators
        numerators: Value of every Manin symbol times denominator
        denominator: Common denominator t of all values
        scale: Factor applied by normalization (1 when unnormalized)
        provenance: How the functional was obtained
    """

    space: ManinSymbolSpace = field(repr=False, compare=False)
    sign: int
    vector: tuple[Fraction, ...]
    numerators: tuple[int, ...] = field(repr=False)
    denominator: int
    scale: Fraction = Fraction(1)
    provenance: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_vector(cls, space: ManinSymbolSpace, sign: int, vector, provenance: dict | None = None) -> "ModularSymbol":
        vector = tuple(Fraction(v) for v in vector)
        values = [sum((vector[k] * v for k, v in coords.items()), Fraction(0)) for coords in space.coordinates]
        denominator = math.lcm(*(v.denominator for v in values)) if values else 1
        numerators = tuple(int(v * denominator) for v in values)
        return cls(space, sign, vector, numerators, denominator, Fraction(1), provenance or {})

    @property
    def level(self) -> int:
        return self.space.N

    @property
    def is_normalized(self) -> bool:
        return "anchor_discriminant" in self.provenance

    def rescaled(self, factor: Fraction, **provenance) -> "ModularSymbol":
        """The symbol multiplied by a nonzero rational."""
        rescaled = ModularSymbol.from_vector(
            self.space, self.sign, [v * factor for v in self.vector], {**self.provenance, **provenance}
        )
        return replace(rescaled, scale=self.scale * factor)

    def value(self, c: int, d: int) -> Fraction:
        """Value on the Manin symbol (c:d)."""
        i = self.space.p1.index(c, d)
        return Fraction(self.numerators[i], self.denominator) if i >= 0 else Fraction(0)

    def eval_numerator(self, a: int, m: int) -> int:
        """denominator * [a/m], the value on the path {a/m, oo}."""
        index = self.space.p1.index
        total = 0
        for c, d in continued_fraction_symbols(a, m):
            total -= self.numerators[index(c, d)]
        return total

    def functional(self, coordinates: dict[int, Fraction]) -> Fraction:
        """Value on an element given by coordinates on the free generators."""
        return sum((self.vector[k] * v for k, v in coordinates.items()), Fraction(0))


def eval_symbol(symbol: ModularSymbol, a: int, m: int) -> Fraction:
    """The value [a/m] of the symbol on the path {a/m, oo}, by the continued fraction trick."""
    if m < 1:
        raise ValueError(f"denominator must be positive, got {m}")
    return Fraction(symbol.eval_numerator(a, m), symbol.denominator)


def _kernel(blocks: list[SDM], dimension: int) -> list[list[Fraction]]:
    stacked = blocks[0].vstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]
    kernel, _ = stacked.nullspace()
    return [[to_fraction(row.get(j, QQ(0))) for j in range(dimension)] for _, row in sorted(kernel.items())]


def _primitive(vector: list[Fraction]) -> list[int]:
    common = math.lcm(*(v.denominator for v in vector))
    integers = [int(v * common) for v in vector]
    g = math.gcd(*integers)
    first = next(v for v in integers if v)
    if first < 0:
        g = -g
    return [v // g for v in integers]


def eigen_symbol(space: ManinSymbolSpace, curve: WeierstrassCurve, sign: int, hecke_bound: int = 100) -> ModularSymbol:
    """The primitive integral functional with star eigenvalue sign and Hecke eigenvalues a_ell(E).

    Kernels of (star - sign) and (T_ell - a_ell) are intersected for good
    primes ell in increasing order until a line remains.

    Raises:
        EigenspaceNotRankOne: If the intersection is not a line by hecke_bound
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if curve.conductor != space.N:
        raise ValueError(f"curve of conductor {curve.conductor} on a space of level {space.N}")

    dimension = space.dimension
    identity = space.identity()
    blocks = [space.star_matrix() - identity.mul(QQ(sign))]
    kernel = _kernel(blocks, dimension)
    used = []
    for ell in primerange(2, hecke_bound + 1):
        if len(kernel) <= 1:
            break
        if space.N % ell == 0:
            continue
        a_ell = ap(curve, ell)
        blocks.append(space.hecke_matrix(ell) - identity.mul(QQ(a_ell)))
        kernel = _kernel(blocks, dimension)
        used.append(ell)
        logger.info(f"Level {space.N} sign {sign:+d}: T_{ell} (a = {a_ell}) leaves dimension {len(kernel)}")

    if len(kernel) != 1:
        raise EigenspaceNotRankOne(
            f"eigenspace for {curve.name} with sign {sign:+d} has dimension {len(kernel)} "
            f"after T_ell, ell <= {hecke_bound}"
        )
    return ModularSymbol.from_vector(space, sign, _primitive(kernel[0]), {"hecke_primes": used})


def fricke_eigenvalue(space: ManinSymbolSpace, symbol: ModularSymbol) -> int:
    """Eigenvalue of W_N on the symbol's eigenline."""
    images = space.fricke_images()
    epsilon = None
    for k, image in enumerate(images):
        if symbol.vector[k]:
            epsilon = symbol.functional(image) / symbol.vector[k]
            break
    if epsilon not in (1, -1):
        raise EigenspaceNotRankOne(f"symbol is not a Fricke eigenvector (ratio {epsilon})")
    for k, image in enumerate(images):
        if symbol.functional(image) != epsilon * symbol.vector[k]:
            raise EigenspaceNotRankOne("symbol is not a Fricke eigenvector")
    return int(epsilon)


def fricke_sign(space: ManinSymbolSpace, symbol: ModularSymbol) -> int:
    """Root number w(E), the negative of the Fricke eigenvalue."""
    return -fricke_eigenvalue(space, symbol)


def twist_sign(D: int) -> int:
    """Symbol sign matching the parity of the character of discriminant D."""
    return 1 if D > 0 else -1


def algebraic_L_ratio(symbol: ModularSymbol, D: int, allow_ramified: bool = False) -> Fraction:
    """The sum over u mod |D| of kronecker(D, u) [u/|D|].

    For a normalized symbol this is L(E, chi_D, 1) sqrt|D| / Omega^sign and it
    vanishes exactly when the twisted central value does.

    Args:
        symbol: Eigen-symbol whose sign matches the parity of D
        D: Fundamental discriminant, or 1 for E itself
        allow_ramified: Evaluate the character sum even when gcd(D, N) > 1

    Raises:
        SignMismatch: If the symbol's sign does not match D
        RamifiedTwist: If gcd(D, N) > 1 and allow_ramified is False
    """
    if symbol.sign != twist_sign(D):
        raise SignMismatch(f"a symbol of sign {symbol.sign:+d} cannot twist by D = {D}")
    if math.gcd(D, symbol.level) > 1 and not allow_ramified:
        raise RamifiedTwist(f"D = {D} shares a factor with the level {symbol.level}")
    m = abs(D)
    total = sum(kronecker(D, u) * symbol.eval_numerator(u, m) for u in range(m))
    return Fraction(total, symbol.denominator)
