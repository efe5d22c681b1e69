"""Per-curve cache of modular symbols, periods and p-adic L-functions."""

import logging
import threading
from fractions import Fraction

from src.config import RunConfig
from src.curves.weierstrass import WeierstrassCurve
from src.lseries.ordinary import OrdinaryLFunction, ordinary_lfunction
from src.lseries.supersingular import SignedLFunctions, SupersingularPair, signed_lfunctions
from src.modsym.normalize import normalize
from src.modsym.periods import Periods, periods
from src.modsym.space import ManinSymbolSpace, build_space
from src.modsym.symbol import ModularSymbol, algebraic_L_ratio, eigen_symbol, fricke_sign, twist_sign

logger = logging.getLogger(__name__)


class CurveContext:
    """Everything about one curve that checks and scans reuse.

    Symbol spaces, eigen-symbols and the L-functions cached per (p, D) are
    all built once under one reentrant lock.

    Args:
        curve: The curve
        config: Run configuration fixing depth and precisions
    """

    def __init__(self, curve: WeierstrassCurve, config: RunConfig) -> None:
        self.curve = curve
        self.config = config
        self._lock = threading.RLock()
        self._space: ManinSymbolSpace | None = None
        self._eigen: dict[int, ModularSymbol] = {}
        self._normalized: dict[int, ModularSymbol] = {}
        self._periods: Periods | None = None
        self._ratios: dict[int, Fraction] = {}
        self._ordinary: dict[tuple[int, int], OrdinaryLFunction] = {}
        self._signed: dict[tuple[int, int], tuple[SignedLFunctions, SupersingularPair]] = {}

    @property
    def space(self) -> ManinSymbolSpace:
        with self._lock:
            if self._space is None:
                self._space = build_space(self.curve.conductor, self.config.index_bound)
            return self._space

    def eigen(self, sign: int) -> ModularSymbol:
        """Primitive integral eigen-symbol (unnormalized)."""
        with self._lock:
            if sign not in self._eigen:
                self._eigen[sign] = eigen_symbol(self.space, self.curve, sign, self.config.hecke_bound)
            return self._eigen[sign]

    @property
    def periods(self) -> Periods:
        with self._lock:
            if self._periods is None:
                self._periods = periods(self.curve, self.config.digits)
            return self._periods

    def normalized(self, sign: int) -> ModularSymbol:
        """Eigen-symbol scaled to algebraic parts of L-values."""
        with self._lock:
            if sign not in self._normalized:
                self._normalized[sign] = normalize(
                    self.eigen(sign),
                    self.curve,
                    self.config.digits,
                    self.config.twist_search_bound,
                    self.periods,
                )
            return self._normalized[sign]

    @property
    def root_number(self) -> int:
        return fricke_sign(self.space, self.eigen(1))

    def l_ratio(self, D: int) -> Fraction:
        """Exact character sum for D with the normalized symbol (ramified D allowed)."""
        with self._lock:
            if D not in self._ratios:
                self._ratios[D] = algebraic_L_ratio(self.normalized(twist_sign(D)), D, allow_ramified=True)
            return self._ratios[D]
    def ordinary(self, p: int, D: int = 1) -> OrdinaryLFunction:
        key = (p, D)
        with self._lock:
            if key not in self._ordinary:
                symbol = self.normalized(twist_sign(D))
                self._ordinary[key] = ordinary_lfunction(
                    symbol,
                    self.curve,
                    p,
                    self.config.depth,
                    D,
                    self.config.coeff_prec,
                    self.config.constant_prec,
                )
            return self._ordinary[key]

    def signed(self, p: int, D: int = 1) -> tuple[SignedLFunctions, SupersingularPair]:
        key = (p, D)
        with self._lock:
            if key not in self._signed:
                symbol = self.normalized(twist_sign(D))
                self._signed[key] = signed_lfunctions(
                    symbol,
                    self.curve,
                    p,
                    self.config.depth,
                    D,
                    self.config.coeff_prec,
                    self.config.constant_prec,
                )
            return self._signed[key]
