"""Elliptic curves over Q given by global minimal Weierstrass models."""

import logging
from collections.abc import Sequence
from functools import cached_property

from sympy import factorint

from src.curves.model import Model
from src.curves.tate import LocalData, good_local_data, tate_algorithm

logger = logging.getLogger(__name__)


def minimal_model(model: Model) -> tuple[Model, dict[int, LocalData]]:
    """Minimalize a model at every prime and put it in reduced form.

    Returns:
        Tuple of (reduced global minimal model, local data per bad prime)
    """
    if model.discriminant == 0:
        raise ValueError(f"{model} is singular")
    current = model
    for ell in sorted(factorint(abs(model.discriminant))):
        _, local_model = tate_algorithm(current, ell)
        if local_model.discriminant != current.discriminant:
            current = local_model
    current = current.reduced()

    local_data = {}
    for ell in sorted(factorint(abs(current.discriminant))):
        local_data[ell], _ = tate_algorithm(current, ell)
    return current, local_data


class WeierstrassCurve:
    """An elliptic curve over Q stored through its reduced minimal model.

    Local data at every bad prime is computed once, at construction, so an
    instance can be shared between threads.

    Args:
        ainvs: Five a-invariants [a1, a2, a3, a4, a6] (or [a4, a6])
        label: Optional database label such as "11a1"
    """

    def __init__(self, ainvs: Sequence[int], label: str | None = None) -> None:
        self.model, self._local_data = minimal_model(Model.from_ainvs(ainvs))
        self.label = label
        self.conductor = 1
        for ell, data in self._local_data.items():
            self.conductor *= ell**data.conductor_exponent
        logger.debug(f"Curve {self.name}: minimal model {self.model}, conductor {self.conductor}")

    @property
    def name(self) -> str:
        return self.label or str(self.model)

    @property
    def ainvs(self) -> tuple[int, int, int, int, int]:
        return self.model.ainvs

    @property
    def a1(self) -> int:
        return self.model.a1

    @property
    def a2(self) -> int:
        return self.model.a2

    @property
    def a3(self) -> int:
        return self.model.a3

    @property
    def a4(self) -> int:
        return self.model.a4

    @property
    def a6(self) -> int:
        return self.model.a6

    @property
    def c4(self) -> int:
        return self.model.c4

    @property
    def c6(self) -> int:
        return self.model.c6

    @property
    def discriminant(self) -> int:
        return self.model.discriminant

    @cached_property
    def bad_primes(self) -> list[int]:
        return [ell for ell, data in self._local_data.items() if not data.is_good]

    def local_data(self, ell: int) -> LocalData:
        return self._local_data.get(ell) or good_local_data(ell)

    def has_good_reduction(self, ell: int) -> bool:
        return self.conductor % ell != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.model == other.model

    def __hash__(self) -> int:
        return hash(self.model)

    def __repr__(self) -> str:
        return f"WeierstrassCurve({list(self.ainvs)}, label={self.label!r})"


def tate_local(curve: WeierstrassCurve, ell: int) -> LocalData:
    """Local data of the curve at ell; good primes give f = 0 and c = 1."""
    return curve.local_data(ell)


def quadratic_twist(curve: WeierstrassCurve, D: int) -> WeierstrassCurve:
    """The quadratic twist of the curve by the character of discriminant D.

    Uses the short model y^2 = x^3 - 27 c4 D^2 x - 54 c6 D^3, which the
    constructor minimalizes (this removes the extra factors at 2 and 3).
    """
    if D == 0:
        raise ValueError("twisting discriminant must be nonzero")
    twist = WeierstrassCurve([0, 0, 0, -27 * curve.c4 * D * D, -54 * curve.c6 * D**3])
    logger.debug(f"Twist of {curve.name} by {D}: {twist.model}, conductor {twist.conductor}")
    return twist
