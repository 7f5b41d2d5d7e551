"""Star catalogs and their appearance in a boosted frame.

The boost axis is fixed to +x3, the north celestial pole (dec = +90), so
the sphere action is the pure dilation z -> e^{-chi} z; boosts along other
axes are reachable by pre-rotating the catalog.  The photometric model is
deliberately simple: temperature scales with the Doppler factor D
(blackbody peak) and magnitudes shift by -10 log10 D, the bolometric D^4
beaming expressed in the 2.5-log magnitude convention.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .celestial import doppler
from .errors import ParseError, RangeError
from .minkowski import Rapidity
from .sphere import MoebiusTransform, PolarAngles, SpherePoint, from_polar

_HEADER = ["name", "ra_deg", "dec_deg", "vmag", "temp_k"]
_DEFAULT_TEMP_K = 5778.0


@dataclass(frozen=True)
class StarRecord:
    """One catalog entry; angles in degrees, temperature in kelvin."""

    name: str
    ra_deg: float
    dec_deg: float
    vmag: float
    temp_k: float = _DEFAULT_TEMP_K

    def __post_init__(self):
        for field_name in ("ra_deg", "dec_deg", "vmag", "temp_k"):
            v = float(getattr(self, field_name))
            if not math.isfinite(v):
                raise RangeError(f"{field_name} must be finite, got {v!r}")
            object.__setattr__(self, field_name, v)
        if not 0.0 <= self.ra_deg < 360.0:
            raise RangeError(f"ra_deg = {self.ra_deg} outside [0, 360)")
        if not -90.0 <= self.dec_deg <= 90.0:
            raise RangeError(f"dec_deg = {self.dec_deg} outside [-90, 90]")
        if self.temp_k <= 0.0:
            raise RangeError(f"temp_k = {self.temp_k} must be positive")

    @property
    def theta(self) -> float:
        """Colatitude from the +x3 boost axis (dec = 90 maps to theta = 0)."""
        return math.radians(90.0 - self.dec_deg)

    @property
    def phi(self) -> float:
        return math.radians(self.ra_deg)

    def sphere_point(self) -> SpherePoint:
        return from_polar(PolarAngles(self.theta, self.phi))


@dataclass(frozen=True)
class TransformedStar:
    """A star before and after the boost, with its shifted photometry."""

    source: StarRecord
    q_before: SpherePoint
    q_after: SpherePoint
    doppler: float
    temp_after: float
    vmag_after: float


def load_catalog(source: str | Path | IO[str]) -> list[StarRecord]:
    """Parse a CSV catalog with header name,ra_deg,dec_deg,vmag,temp_k.

    The temp_k column may be omitted (default 5778).  Malformed rows raise
    :class:`ParseError` with the offending line number; out-of-range values
    raise :class:`RangeError`.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return _parse_catalog(fh)
    return _parse_catalog(source)


def _parse_catalog(stream: IO[str]) -> list[StarRecord]:
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(1, "missing header row") from None
    header = [h.strip() for h in header]
    if header not in (_HEADER, _HEADER[:4]):
        raise ParseError(1, f"expected header {','.join(_HEADER)} "
                            f"(temp_k optional), got {','.join(header)}")
    n_cols = len(header)

    stars: list[StarRecord] = []
    for line, row in enumerate(reader, start=2):
        if not row:
            continue  # blank line
        if len(row) != n_cols:
            raise ParseError(line, f"expected {n_cols} columns, got {len(row)}")
        name = row[0].strip()
        if not name:
            raise ParseError(line, "column name: empty")
        values = {}
        for col, text in zip(_HEADER[1:n_cols], row[1:]):
            try:
                values[col] = float(text)
            except ValueError:
                raise ParseError(line, f"column {col}: not a number: {text!r}") from None
        try:
            stars.append(StarRecord(name, **values))
        except RangeError as exc:
            raise RangeError(f"line {line}: {exc}") from None
    return stars


def transform_catalog(stars: Iterable[StarRecord], chi: Rapidity) -> list[TransformedStar]:
    """Boost the whole catalog along +x3 with rapidity chi.

    A pure per-record map; output order equals input order.
    """
    if not math.isfinite(chi):
        raise ValueError("chi must be finite")
    boost = MoebiusTransform.dilation(chi)
    out: list[TransformedStar] = []
    for star in stars:
        q_before = star.sphere_point()
        q_after = boost.apply(q_before)
        d = doppler(chi, star.theta)
        out.append(TransformedStar(
            source=star,
            q_before=q_before,
            q_after=q_after,
            doppler=d,
            temp_after=d * star.temp_k,
            vmag_after=star.vmag - 10.0 * math.log10(d),
        ))
    return out


def catalog_to_csv(stars: Iterable[StarRecord]) -> str:
    """Serialize records back to the catalog CSV format."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_HEADER)
    for s in stars:
        writer.writerow([s.name, repr(s.ra_deg), repr(s.dec_deg),
                         repr(s.vmag), repr(s.temp_k)])
    return buf.getvalue()
