"""Reading curve tables of the form ``<label> <N> <a1> <a2> <a3> <a4> <a6>``."""

import logging
from dataclasses import dataclass
from functools import cache
from pathlib import Path

from src.curves.weierstrass import WeierstrassCurve
from src.errors import CurveLoadError, UnknownCurve

logger = logging.getLogger(__name__)

BUNDLED_CURVES = Path(__file__).parent / "curves.txt"


@dataclass(frozen=True)
class CurveRecord:
    """A labelled curve whose conductor was recomputed on load."""

    label: str
    ainvs: tuple[int, int, int, int, int]
    conductor: int

    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve(self.ainvs, self.label)


def parse_curve_line(line: str, line_number: int) -> CurveRecord | None:
    """Parse one line; None for blank lines and comments.

    Raises:
        CurveLoadError: If the line is malformed or its conductor is wrong
    """
    line = line.split("#", 1)[0].strip()
    if not line:
        return None
    fields = line.split()
    if len(fields) != 7:
        raise CurveLoadError(f"line {line_number}: expected 7 fields, got {len(fields)}")
    label = fields[0]
    try:
        conductor, *ainvs = (int(x) for x in fields[1:])
    except ValueError as e:
        raise CurveLoadError(f"line {line_number}: {e}") from e

    try:
        computed = WeierstrassCurve(ainvs, label).conductor
    except ValueError as e:
        raise CurveLoadError(f"line {line_number}: {label} is not an elliptic curve ({e})") from e
    if computed != conductor:
        raise CurveLoadError(f"line {line_number}: {label} has conductor {computed}, the file says {conductor}")
    return CurveRecord(label, tuple(ainvs), conductor)


def load_curve_file(path: str | Path) -> list[CurveRecord]:
    """Load and verify every record of a curve file.

    Raises:
        CurveLoadError: On a malformed line, a conductor mismatch or a repeated label
    """
    path = Path(path)
    records = []
    labels = set()
    with path.open() as f:
        for line_number, line in enumerate(f, start=1):
            record = parse_curve_line(line, line_number)
            if record is None:
                continue
            if record.label in labels:
                raise CurveLoadError(f"line {line_number}: duplicate label {record.label}")
            labels.add(record.label)
            records.append(record)
    logger.info(f"Loaded {len(records)} curves from {path}")
    return records


@cache
def bundled_curves() -> dict[str, CurveRecord]:
    return {record.label: record for record in load_curve_file(BUNDLED_CURVES)}


def get_curve(spec: str, table: dict[str, CurveRecord] | None = None) -> WeierstrassCurve:
    """A curve from a label in the table or from "a1,a2,a3,a4,a6".

    Raises:
        UnknownCurve: If the label is not in the table
        CurveLoadError: If the coefficients do not define an elliptic curve
    """
    table = table if table is not None else bundled_curves()
    if spec in table:
        return table[spec].curve()
    if "," in spec:
        try:
            ainvs = [int(x) for x in spec.split(",")]
            return WeierstrassCurve(ainvs)
        except ValueError as e:
            raise CurveLoadError(f"cannot build a curve from {spec!r}: {e}") from e
    raise UnknownCurve(f"unknown curve {spec!r}; known labels: {', '.join(sorted(table))}")
