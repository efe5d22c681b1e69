"""Scans of a checklist over grids of primes p and fields Q(sqrt(-d))."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from sympy import primerange

from src.checker.context import CurveContext
from src.checker.ordinary import check_ordinary
from src.checker.results import Mode, Verdict
from src.checker.supersingular import check_sc_supersingular, check_supersingular
from src.config import RunConfig
from src.curves.frobenius import ap
from src.curves.weierstrass import WeierstrassCurve
from src.errors import GrowthCheckError
from src.fields.quadratic import ImagQuadField

logger = logging.getLogger(__name__)

CHECKERS = {
    Mode.ORDINARY: check_ordinary,
    Mode.SUPERSINGULAR: check_supersingular,
    Mode.SC: check_sc_supersingular,
}


@dataclass
class ScanCell:
    """One (p, d) cell: a verdict, or the error that stopped it."""

    p: int
    d: int
    verdict: Verdict | None = None
    error: str = ""

    @property
    def verified(self) -> bool:
        return self.verdict is not None and self.verdict.verified

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "conclusion": str(self.verdict.conclusion) if self.verdict else None,
            "error": self.error,
        }


@dataclass
class ScanResult:
    """All cells of a scan in (p, d) order."""

    curve: str
    mode: Mode
    d_max: int
    p_max: int
    cells: list[ScanCell] = field(default_factory=list)

    def table(self) -> dict[int, list[int]]:
        """Verified d for each p that has at least one."""
        rows: dict[int, list[int]] = {}
        for cell in self.cells:
            if cell.verified:
                rows.setdefault(cell.p, []).append(cell.d)
        return rows

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "mode": str(self.mode),
            "d_max": self.d_max,
            "p_max": self.p_max,
            "table": {str(p): ds for p, ds in self.table().items()},
            "log": [cell.to_dict() for cell in self.cells],
        }


def scan_primes(curve: WeierstrassCurve, p_max: int, mode: Mode) -> list[int]:
    """Odd primes p < p_max of good reduction of the mode's type."""
    primes = []
    for p in primerange(3, p_max):
        if curve.conductor % p == 0:
            continue
        a_p = ap(curve, p)
        if mode is Mode.ORDINARY and a_p % p != 0:
            primes.append(p)
        elif mode is not Mode.ORDINARY and a_p == 0:
            primes.append(p)
    return primes


def scan_cells(curve: WeierstrassCurve, d_max: int, p_max: int, mode: Mode) -> list[tuple[int, int]]:
    """The (p, d) grid with prime d < d_max; ordinary cells skip d with p ramified in K."""
    cells = []
    for p in scan_primes(curve, p_max, mode):
        for d in primerange(2, d_max):
            if mode is Mode.ORDINARY and ImagQuadField(d).splitting(p) == 0:
                continue
            cells.append((p, d))
    return cells


def _run_cell(context: CurveContext, mode: Mode, p: int, d: int) -> ScanCell:
    try:
        verdict = CHECKERS[mode](context.curve, ImagQuadField(d), p, context.config, context)
    except GrowthCheckError as e:
        logger.warning(f"Cell (p = {p}, d = {d}) of {context.curve.name}: {e}")
        return ScanCell(p, d, error=f"{type(e).__name__}: {e}")
    except Exception as e:
        logger.error(f"Unexpected failure in cell (p = {p}, d = {d}) of {context.curve.name}: {e}", exc_info=True)
        return ScanCell(p, d, error=f"{type(e).__name__}: {e}")
    logger.info(f"Cell (p = {p}, d = {d}) of {context.curve.name}: {verdict.conclusion}")
    return ScanCell(p, d, verdict)


def scan(
    curve: WeierstrassCurve,
    d_max: int,
    p_max: int,
    mode: Mode | str,
    config: RunConfig | None = None,
) -> ScanResult:
    """Run a checklist on every cell of the (p, d) grid.

    Cells run on a thread pool sharing one CurveContext; the result lists
    cells in (p, d) order whatever order they finish in. Errors are recorded
    per cell and never stop the scan.

    Args:
        curve: The curve
        d_max: Exclusive bound on the prime d
        p_max: Exclusive bound on the prime p
        mode: ordinary, supersingular or sc
        config: Run configuration; short_circuit is forced on
    """
    mode = Mode(mode)
    config = (config or RunConfig()).with_overrides(short_circuit=True)
    context = CurveContext(curve, config)
    grid = scan_cells(curve, d_max, p_max, mode)
    logger.info(f"Scanning {len(grid)} cells of {curve.name} in {mode} mode with {config.threads} threads")

    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        futures = [executor.submit(_run_cell, context, mode, p, d) for p, d in grid]
        cells = [future.result() for future in futures]

    result = ScanResult(curve.name, mode, d_max, p_max, cells)
    logger.info(f"Scan of {curve.name}: verified {result.table()}")
    return result
