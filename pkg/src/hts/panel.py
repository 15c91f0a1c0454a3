"""Long-format panel data model: typed CSV I/O, derived variables, sector-code
mapping, and multi-year chaining.

A PanelFrame wraps a pandas DataFrame keyed by (entity_id, year) plus a level
tag (firm or sector) and bookkeeping metadata (missing counts, derivation
provenance).  Frames are treated as immutable: every operation returns a new
frame.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
import pandas as pd

from .errors import DuplicateKey, ParseError, SchemaMismatch

__all__ = [
    "Level",
    "PanelFrame",
    "PanelSchema",
    "SectorMap",
    "load_csv",
    "save_csv",
    "derive_variables",
    "map_sectors",
    "chain_panel",
    "bundled_sector_map",
]

KEY_COLUMNS = ("entity_id", "year")

# extensive quantities aggregate by summation when sectors are merged
EXTENSIVE_COLUMNS = ("l", "y", "k", "w", "go")

# growth rates are dropped where the previous level is closer to zero than this
GROWTH_EPS = 1e-9


class Level(enum.Enum):
    FIRM = "firm"
    SECTOR = "sector"


@dataclass(frozen=True)
class PanelSchema:
    """Column names and types expected in a panel CSV.

    types maps column name -> one of 'int', 'float', 'str'.  entity_id and
    year are always required.
    """

    types: dict

    def __post_init__(self):
        merged = {"entity_id": "str", "year": "int"}
        merged.update(self.types)
        object.__setattr__(self, "types", merged)

    @property
    def columns(self):
        return list(self.types)


@dataclass
class PanelFrame:
    """Entity x year observations at one aggregation level."""

    df: pd.DataFrame
    level: Level
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for col in KEY_COLUMNS:
            if col not in self.df.columns:
                raise SchemaMismatch(f"panel frame needs column {col!r}", missing=[col])
        dup = self.df.duplicated(subset=list(KEY_COLUMNS))
        if dup.any():
            first = self.df.loc[dup.idxmax(), list(KEY_COLUMNS)]
            raise DuplicateKey(
                f"duplicate (entity_id, year) = ({first['entity_id']}, {first['year']})"
            )
        if not np.issubdtype(self.df["year"].dtype, np.integer):
            raise SchemaMismatch("year column must be integral")

    @property
    def numeric_columns(self):
        return [
            c
            for c in self.df.columns
            if c not in KEY_COLUMNS and np.issubdtype(self.df[c].dtype, np.floating)
        ]

    def copy(self) -> "PanelFrame":
        return PanelFrame(self.df.copy(), self.level, dict(self.meta))

    def years(self):
        return sorted(self.df["year"].unique())


def load_csv(path, schema: PanelSchema, level: Level = Level.FIRM) -> PanelFrame:
    """Read a typed panel CSV; empty fields are missing values.

    Raises SchemaMismatch (missing columns), DuplicateKey (repeated entity/year)
    and ParseError (located at row and column).
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch("empty file: no header row", missing=schema.columns)
        missing = [c for c in schema.columns if c not in header]
        if missing:
            raise SchemaMismatch(f"missing columns: {missing}", missing=missing)
        col_idx = {c: header.index(c) for c in schema.columns}
        data = {c: [] for c in schema.columns}
        missing_counts = {c: 0 for c in schema.columns}
        for row_no, row in enumerate(reader, start=2):
            for col, idx in col_idx.items():
                raw = row[idx] if idx < len(row) else ""
                kind = schema.types[col]
                if raw == "":
                    if kind == "str":
                        data[col].append("")
                    else:
                        data[col].append(math.nan)
                    missing_counts[col] += 1
                    continue
                try:
                    if kind == "int":
                        data[col].append(int(raw))
                    elif kind == "float":
                        data[col].append(float(raw))
                    else:
                        data[col].append(raw)
                except ValueError:
                    raise ParseError(
                        f"cannot parse {raw!r} as {kind} at row {row_no}, column {col!r}",
                        row=row_no,
                        column=col,
                    )
    frame_data = {}
    for col in schema.columns:
        kind = schema.types[col]
        if kind == "int":
            bad = [v for v in data[col] if isinstance(v, float) and math.isnan(v)]
            if bad:
                raise ParseError(f"missing value in integer column {col!r}", column=col)
            frame_data[col] = np.asarray(data[col], dtype=np.int64)
        elif kind == "float":
            frame_data[col] = np.asarray(data[col], dtype=float)
        else:
            frame_data[col] = data[col]
    df = pd.DataFrame(frame_data)
    return PanelFrame(df, level, meta={"missing_counts": missing_counts, "source": str(path)})


def save_csv(frame: PanelFrame, path) -> None:
    """Write a panel CSV: UTF-8, header row, empty fields for missing values.

    Floats use shortest round-trip repr so save -> load is bit exact.
    """
    path = Path(path)
    df = frame.df
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(df.columns))
        float_cols = {c for c in df.columns if np.issubdtype(df[c].dtype, np.floating)}
        for record in df.itertuples(index=False, name=None):
            out = []
            for col, val in zip(df.columns, record):
                if col in float_cols:
                    out.append("" if (isinstance(val, float) and math.isnan(val)) else repr(float(val)))
                else:
                    out.append(val)
            writer.writerow(out)


def frame_to_csv_text(frame: PanelFrame) -> str:
    buf = io.StringIO()
    df = frame.df
    writer = csv.writer(buf)
    writer.writerow(list(df.columns))
    float_cols = {c for c in df.columns if np.issubdtype(df[c].dtype, np.floating)}
    for record in df.itertuples(index=False, name=None):
        out = []
        for col, val in zip(df.columns, record):
            if col in float_cols:
                out.append("" if (isinstance(val, float) and math.isnan(val)) else repr(float(val)))
            else:
                out.append(val)
        writer.writerow(out)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# derived variables
# ---------------------------------------------------------------------------

_RATIOS = {
    # name -> (numerator, denominator)
    "q": ("y", "l"),  # labor productivity
    "capital_intensity": ("k", "l"),
    "avg_wage": ("w", "l"),
    "wage_share": ("w", "y"),
    "va_per_output": ("y", "go"),
}


def derive_variables(frame: PanelFrame, base_columns=None) -> PanelFrame:
    """Add ratio variables, within-level shares, first differences and
    eps-guarded growth rates; idempotent (recomputes from base columns).

    Zero-denominator ratio cells become missing and are counted in
    meta['zero_denominator'].  Growth of x at year t requires the entity to be
    present at t-1 with |x_(t-1)| > eps; excluded cells are counted in
    meta['growth_guard'].  Adds firm age from 'founding_year' when present.
    """
    df = frame.df.copy()
    meta = dict(frame.meta)
    zero_den = {}
    if base_columns is None:
        base_columns = [c for c in ("l", "y", "k", "w", "go", "p") if c in df.columns]

    for name, (num, den) in _RATIOS.items():
        if num in df.columns and den in df.columns:
            d = df[den].to_numpy(dtype=float)
            n_ = df[num].to_numpy(dtype=float)
            with np.errstate(divide="ignore", invalid="ignore"):
                vals = np.where(d != 0.0, n_ / d, np.nan)
            zero_den[name] = int(np.sum((d == 0.0) & np.isfinite(n_)))
            df[name] = vals

    if "founding_year" in df.columns and "a" not in df.columns:
        df["a"] = (df["year"] - df["founding_year"]).astype(float)

    ratio_cols = [c for c in _RATIOS if c in df.columns]
    share_bases = [c for c in base_columns if c != "p"]
    for col in share_bases:
        shares = df[col] / df.groupby("year")[col].transform("sum")
        df["s_" + col] = shares.to_numpy(dtype=float)

    df = df.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    growth_guard = {}
    diff_targets = base_columns + ratio_cols + ["s_" + c for c in share_bases]
    ent = df["entity_id"].to_numpy()
    yr = df["year"].to_numpy()
    consecutive = np.zeros(len(df), dtype=bool)
    consecutive[1:] = (ent[1:] == ent[:-1]) & (yr[1:] == yr[:-1] + 1)
    for col in diff_targets:
        x = df[col].to_numpy(dtype=float)
        prev = np.empty_like(x)
        prev[:] = np.nan
        prev[1:] = x[:-1]
        prev[~consecutive] = np.nan
        diff = x - prev
        df["d_" + col] = diff
        with np.errstate(divide="ignore", invalid="ignore"):
            ok = np.abs(prev) > GROWTH_EPS
            growth = np.where(ok, diff / prev, np.nan)
        growth_guard[col] = int(np.sum(~ok & np.isfinite(diff)))
        df["g_" + col] = growth

    meta["zero_denominator"] = zero_den
    meta["growth_guard"] = growth_guard
    prov = dict(meta.get("derived", {}))
    prov.update({name: f"{n}/{d}" for name, (n, d) in _RATIOS.items() if name in df.columns})
    prov.update({"s_" + c: f"{c} share within level-year" for c in share_bases})
    prov.update({"d_" + c: "first difference" for c in diff_targets})
    prov.update({"g_" + c: "growth rate (eps-guarded)" for c in diff_targets})
    meta["derived"] = prov
    return PanelFrame(df, frame.level, meta)


# ---------------------------------------------------------------------------
# sector-code mapping
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectorMapEntry:
    gb_code: str
    isic_code: str
    label: str
    flag: str  # '' | 'inconsistent*' | '?'


@dataclass
class SectorMap:
    """GB <-> ISIC correspondence; flagged rows are excluded from strict joins."""

    entries: list

    def __post_init__(self):
        seen = set()
        for e in self.entries:
            if e.gb_code in seen:
                raise ValueError(f"duplicate gb code {e.gb_code!r}")
            seen.add(e.gb_code)

    @classmethod
    def from_csv(cls, path) -> "SectorMap":
        entries = []
        with Path(path).open(newline="", encoding="utf-8") as fh:
            for row in csv.DictReader(fh):
                entries.append(
                    SectorMapEntry(
                        gb_code=row["gb"].strip(),
                        isic_code=row["isic"].strip(),
                        label=row["label"].strip(),
                        flag=row.get("flag", "").strip(),
                    )
                )
        return cls(entries)

    def gb_to_isic(self) -> dict:
        return {e.gb_code: e.isic_code for e in self.entries if not e.flag}

    def isic_to_gb(self) -> dict:
        out = {}
        ambiguous = set()
        for e in self.entries:
            if e.flag:
                continue
            if e.isic_code in out:
                ambiguous.add(e.isic_code)
            out[e.isic_code] = e.gb_code
        return {k: v for k, v in out.items() if k not in ambiguous}

    def flagged_codes(self) -> set:
        return {e.gb_code for e in self.entries if e.flag}


def bundled_sector_map() -> SectorMap:
    """The GB2002 <-> ISIC Rev.4 correspondence shipped with the package."""
    with resources.as_file(resources.files("hts").joinpath("data/sector_map_gb_isic.csv")) as p:
        return SectorMap.from_csv(p)


def map_sectors(frame: PanelFrame, sector_map: SectorMap, direction: str = "gb_to_isic"):
    """Translate sector codes; many-to-one merges sum extensive variables and
    recompute intensive ones.  Flagged or unknown codes go to a rejection
    report instead of failing.

    Returns (mapped frame, rejection frame).  Derived columns are dropped and
    must be re-derived after mapping.
    """
    if direction not in ("gb_to_isic", "isic_to_gb"):
        raise ValueError("direction must be 'gb_to_isic' or 'isic_to_gb'")
    if "sector" not in frame.df.columns:
        raise SchemaMismatch("frame has no 'sector' column", missing=["sector"])
    mapping = sector_map.gb_to_isic() if direction == "gb_to_isic" else sector_map.isic_to_gb()

    base_cols = [c for c in frame.df.columns if not c.startswith(("d_", "g_", "s_"))
                 and c not in _RATIOS]
    df = frame.df[base_cols].copy()
    codes = df["sector"].astype(str)
    known = codes.isin(mapping)
    rejected = df[~known].copy()
    kept = df[known].copy()
    kept["sector"] = codes[known].map(mapping)

    if frame.level is Level.SECTOR:
        # sector-level entities are the codes themselves: aggregate merged rows
        extensive = [c for c in EXTENSIVE_COLUMNS if c in kept.columns]
        grouped = kept.groupby(["sector", "year"], as_index=False)[extensive].sum(min_count=1)
        grouped["entity_id"] = grouped["sector"]
        out_df = grouped[["entity_id", "year", "sector"] + extensive]
    else:
        out_df = kept
    out = PanelFrame(out_df.reset_index(drop=True), frame.level, dict(frame.meta))
    rej = PanelFrame(rejected.reset_index(drop=True), frame.level,
                     {"rejected_codes": sorted(set(codes[~known]))})
    return out, rej


# ---------------------------------------------------------------------------
# multi-year chaining
# ---------------------------------------------------------------------------


def chain_panel(frames) -> PanelFrame:
    """Concatenate yearly frames into one panel linked by entity_id.

    Emits per-entity presence spans and a coverage histogram (entities per
    span length) in meta['coverage'].  Raises SchemaMismatch if the yearly
    frames disagree on columns or level.
    """
    frames = list(frames)
    if not frames:
        raise ValueError("no frames to chain")
    cols = list(frames[0].df.columns)
    level = frames[0].level
    for f in frames[1:]:
        if list(f.df.columns) != cols:
            raise SchemaMismatch(
                f"column mismatch across years: {cols} vs {list(f.df.columns)}"
            )
        if f.level is not level:
            raise SchemaMismatch("cannot chain frames of different levels")
    df = pd.concat([f.df for f in frames], ignore_index=True)
    spans = df.groupby("entity_id")["year"].nunique()
    histogram = spans.value_counts().sort_index()
    meta = {
        "coverage": {int(k): int(v) for k, v in histogram.items()},
        "n_entities": int(spans.size),
        "n_years": int(df["year"].nunique()),
    }
    return PanelFrame(df, level, meta)
