"""Orchestration of checks, scans and L-function printouts from a configuration file."""

import logging
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from src.arith.series import PAdicSeries
from src.checker.context import CurveContext
from src.checker.ordinary import check_prime
from src.checker.results import Mode, Verdict
from src.checker.scan import CHECKERS, ScanResult, scan
from src.config import RunConfig, apply_env_overrides, load_config
from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.data.curves import bundled_curves, get_curve, load_curve_file
from src.errors import BadReduction, InputError
from src.fields.quadratic import ImagQuadField
from src.iwasawa.invariants import InvariantReport, mu_lambda

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = "checker_config.yaml"
AUTO = "auto"
SIGNS = ("alpha", "plus", "minus")


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


@dataclass
class SeriesReport:
    """A p-adic L-function printout with its invariants."""

    curve: str
    p: int
    d: int | None
    sign: str
    series: PAdicSeries
    invariants: InvariantReport | None


class GrowthChecker:
    """Runs checklists for curves from the bundled table (or an extra curve file).

    Args:
        config_path: Path to checker_config.yaml (missing file means defaults)
        curve_file: Optional extra curve table in the bundled format
        overrides: RunConfig fields to override (None values are ignored)
    """

    def __init__(
        self,
        config_path: str | Path | None = DEFAULT_CONFIG,
        curve_file: str | Path | None = None,
        **overrides,
    ):
        load_dotenv()
        config = apply_env_overrides(load_config(config_path))
        self.config: RunConfig = config.with_overrides(**overrides)
        self.table = dict(bundled_curves())
        if curve_file is not None:
            self.table.update({record.label: record for record in load_curve_file(curve_file)})
        self._contexts: dict[WeierstrassCurve, CurveContext] = {}
        logger.info(f"Run configuration: {self.config.to_dict()}")

    def curve(self, spec: str) -> WeierstrassCurve:
        return get_curve(spec, self.table)

    def context(self, curve: WeierstrassCurve) -> CurveContext:
        if curve not in self._contexts:
            self._contexts[curve] = CurveContext(curve, self.config)
        return self._contexts[curve]

    @staticmethod
    def auto_mode(curve: WeierstrassCurve, p: int) -> Mode:
        """Ordinary when a_p is a unit mod p, supersingular otherwise."""
        check_prime(p)
        if curve.conductor % p == 0:
            raise BadReduction(f"p = {p} divides the conductor of {curve.name}")
        return Mode.ORDINARY if ap(curve, p) % p else Mode.SUPERSINGULAR

    def check(self, curve_spec: str, d: int, p: int, mode: str = AUTO) -> Verdict:
        curve = self.curve(curve_spec)
        field = ImagQuadField(d)
        mode = self.auto_mode(curve, p) if mode == AUTO else Mode(mode)
        return CHECKERS[mode](curve, field, p, self.config, self.context(curve))

    def scan(self, curve_spec: str, d_max: int, p_max: int, mode: str) -> ScanResult:
        return scan(self.curve(curve_spec), d_max, p_max, Mode(mode), self.config)

    def lfun(self, curve_spec: str, p: int, d: int | None = None, sign: str | None = None) -> SeriesReport:
        """The level-n series of L_p(E) or of its twist by K = Q(sqrt(-d)).

        Raises:
            InputError: If sign is given at an ordinary prime or is unknown
        """
        curve = self.curve(curve_spec)
        context = self.context(curve)
        D = ImagQuadField(d).discriminant if d is not None else 1
        ordinary = self.auto_mode(curve, p) is Mode.ORDINARY
        if ordinary:
            if sign not in (None, "alpha"):
                raise InputError(f"sign {sign!r} only applies at supersingular primes")
            series = context.ordinary(p, D).series
            sign = "alpha"
        else:
            sign = sign or "plus"
            if sign not in SIGNS:
                raise InputError(f"sign must be one of {SIGNS}, got {sign!r}")
            signed, pair = context.signed(p, D)
            series = {"alpha": pair.series_alpha, "plus": signed.plus, "minus": signed.minus}[sign]
        # coefficients in Q_p(alpha) carry no mu and lambda of their own
        invariants = mu_lambda(series) if ordinary or sign != "alpha" else None
        return SeriesReport(curve.name, p, d, sign, series, invariants)
