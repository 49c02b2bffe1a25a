"""CSV ingestion of daily OHLC market data.

Vendors ship these files with a header row, ISO dates and occasional
"null" rows. ``parse_csv`` validates and date-sorts everything into an
immutable :class:`OhlcTable`; ``opening``/``closing`` project out the
series the analyses consume.
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadRow,
    DuplicateDate,
    EmptyFile,
    FractalisError,
    MalformedHeader,
)
from .series import Series

__all__ = ["CsvSchema", "OhlcTable", "parse_csv", "opening", "closing"]

ISO_DATE = "%Y-%m-%d"


@dataclass(frozen=True)
class CsvSchema:
    """Maps header names to OHLC roles; defaults match the common vendor export."""

    date: str = "Date"
    open: str = "Open"
    high: str = "High"
    low: str = "Low"
    close: str = "Close"
    adj_close: str = "Adj Close"
    volume: str = "Volume"
    date_format: str = ISO_DATE


@dataclass(frozen=True)
class OhlcTable:
    """Date-sorted daily records; only open and close are mandatory."""

    dates: tuple[_dt.date, ...]
    open: np.ndarray
    close: np.ndarray
    high: np.ndarray | None = None
    low: np.ndarray | None = None
    adj_close: np.ndarray | None = None
    volume: np.ndarray | None = None
    skipped: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for name in ("open", "close", "high", "low", "adj_close", "volume"):
            arr = getattr(self, name)
            if arr is not None:
                arr = np.asarray(arr, dtype=np.float64).copy()
                arr.flags.writeable = False
                object.__setattr__(self, name, arr)
        n = len(self.dates)
        if n == 0:
            raise EmptyFile("table has no rows")
        for name in ("open", "close"):
            if getattr(self, name).size != n:
                raise FractalisError(f"{name} column length does not match dates")
        for a, b in zip(self.dates, self.dates[1:]):
            if a == b:
                raise DuplicateDate(f"duplicate date {a.isoformat()}")
            if a > b:
                raise FractalisError("dates not sorted ascending")

    def __len__(self) -> int:
        return len(self.dates)


def parse_csv(
    source,
    schema: CsvSchema | None = None,
    lenient: bool = False,
) -> OhlcTable:
    """Parse an OHLC CSV (path, text, or byte/text stream) into a table.

    In strict mode (default) any malformed row raises :class:`BadRow`
    with its line number. In lenient mode bad rows are skipped and
    reported through ``OhlcTable.skipped``. Rows are sorted by date;
    duplicate dates are always an error.
    """
    schema = schema or CsvSchema()
    reader = csv.reader(io.StringIO(_as_text(source)))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise EmptyFile("no header row") from None
    header_pos = {name: i for i, name in enumerate(header)}

    for role, column in (("date", schema.date), ("open", schema.open),
                         ("close", schema.close)):
        if column not in header_pos:
            raise MalformedHeader(
                f"missing required column {column!r} for {role} "
                f"(header: {', '.join(header)})"
            )
    opt_pos = {
        role: header_pos[column]
        for role, column in (
            ("high", schema.high),
            ("low", schema.low),
            ("adj_close", schema.adj_close),
            ("volume", schema.volume),
        )
        if column in header_pos
    }

    rows = []
    skipped: list[str] = []
    for lineno, record in enumerate(reader, start=2):
        if not record or all(cell.strip() == "" for cell in record):
            continue
        try:
            rows.append(_parse_row(record, header_pos, opt_pos, schema))
        except ValueError as exc:
            if lenient:
                skipped.append(f"line {lineno}: {exc}")
            else:
                raise BadRow(lineno, str(exc)) from None

    if not rows:
        raise EmptyFile("no data rows" + (" survived parsing" if skipped else ""))

    rows.sort(key=lambda r: r[0])
    dates = tuple(r[0] for r in rows)
    for a, b in zip(dates, dates[1:]):
        if a == b:
            raise DuplicateDate(f"duplicate date {a.isoformat()}")

    def column(idx, role):
        return np.array([r[idx] for r in rows]) if role in opt_pos else None

    return OhlcTable(
        dates=dates,
        open=np.array([r[1] for r in rows]),
        close=np.array([r[2] for r in rows]),
        high=column(3, "high"),
        low=column(4, "low"),
        adj_close=column(5, "adj_close"),
        volume=column(6, "volume"),
        skipped=tuple(skipped),
    )


def _parse_price(text: str, column: str) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise ValueError(f"unparseable {column} value {text!r}") from None
    if not np.isfinite(value) or value <= 0.0:
        raise ValueError(f"non-positive {column} value {text!r}")
    return value


def _parse_row(record, header_pos, opt_pos, schema):
    def cell(i):
        if i >= len(record):
            raise ValueError("row has fewer columns than the header")
        return record[i].strip()

    raw_date = cell(header_pos[schema.date])
    try:
        date = _dt.datetime.strptime(raw_date, schema.date_format).date()
    except ValueError:
        raise ValueError(f"unparseable date {raw_date!r}") from None

    open_ = _parse_price(cell(header_pos[schema.open]), "open")
    close = _parse_price(cell(header_pos[schema.close]), "close")

    def price(role):
        return _parse_price(cell(opt_pos[role]), role) if role in opt_pos else None

    high = price("high")
    low = price("low")
    adj_close = price("adj_close")

    volume = None
    if "volume" in opt_pos:
        text = cell(opt_pos["volume"])
        try:
            volume = float(text)
        except ValueError:
            raise ValueError(f"unparseable volume value {text!r}") from None
        if not np.isfinite(volume) or volume < 0.0:
            raise ValueError(f"negative volume {text!r}")

    if high is not None and high < max(open_, close):
        raise ValueError(f"high {high} below max(open, close)")
    if low is not None and low > min(open_, close):
        raise ValueError(f"low {low} above min(open, close)")

    return (date, open_, close, high, low, adj_close, volume)


def _as_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        if "\n" in source:
            return source
        with open(source, "rb") as fh:
            return fh.read().decode("utf-8")
    if hasattr(source, "read"):
        data = source.read()
        return data.decode("utf-8") if isinstance(data, bytes) else data
    with open(source, "rb") as fh:  # pathlib.Path and friends
        return fh.read().decode("utf-8")


def opening(table: OhlcTable) -> Series:
    """The opening-price series with date labels."""
    return Series(table.open, table.dates, "open")


def closing(table: OhlcTable) -> Series:
    """The closing-price series with date labels."""
    return Series(table.close, table.dates, "close")
