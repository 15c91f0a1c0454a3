"""Structural-change analytics on panel frames.

Correlation reports in levels / growth rates / first differences, the nine
classic sectoral correlation laws with sign verdicts, broad-range
autocorrelation spectra with entity-bootstrap confidence bands, the
growth-decomposition identity, filtered conditional growth, and concentration
measures (normalized Herfindahl-Hirschman index and Shannon entropy).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .errors import SpanTooShort, TooFewBins, ZeroDenominator
from .panel import GROWTH_EPS

__all__ = [
    "Mode",
    "CorrelationReport",
    "AutocorrSpectrum",
    "DispersionSeries",
    "LawVerdict",
    "Verdict",
    "FABRICANT_LAWS",
    "growth_decompose",
    "correlation_report",
    "fabricant_check",
    "autocorrelation",
    "cross_correlation",
    "filtered_conditional",
    "dispersion",
]

MIN_PAIRS = 3
SIGN_THRESHOLD = 0.2


class Mode(enum.Enum):
    LEVELS = "levels"
    GROWTH_RATES = "growth"
    FIRST_DIFFERENCES = "diff"


class Verdict(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNTESTABLE = "Untestable"


@dataclass
class CorrelationReport:
    variables: list
    mode: Mode
    matrix: np.ndarray
    n_pairs: np.ndarray
    flags: dict = field(default_factory=dict)  # (var_i, var_j) -> reason

    def r(self, var_a: str, var_b: str) -> float:
        i, j = self.variables.index(var_a), self.variables.index(var_b)
        return float(self.matrix[i, j])

    def to_csv(self) -> str:
        lines = ["," + ",".join(self.variables)]
        for i, v in enumerate(self.variables):
            cells = []
            for j in range(len(self.variables)):
                val = self.matrix[i, j]
                cells.append("" if math.isnan(val) else repr(float(val)))
            lines.append(v + "," + ",".join(cells))
        return "\n".join(lines) + "\n"


@dataclass
class AutocorrSpectrum:
    lags: np.ndarray
    rho: np.ndarray
    ci_lo: np.ndarray
    ci_hi: np.ndarray
    n_obs: np.ndarray
    flags: list = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["lag,rho,ci_lo,ci_hi,n_obs"]
        for i in range(len(self.lags)):
            cells = [str(int(self.lags[i]))]
            for arr in (self.rho, self.ci_lo, self.ci_hi):
                v = arr[i]
                cells.append("" if math.isnan(v) else repr(float(v)))
            cells.append(str(int(self.n_obs[i])))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


@dataclass
class DispersionSeries:
    years: np.ndarray
    nhhi: np.ndarray
    entropy: np.ndarray
    n_entities: np.ndarray
    n_excluded: np.ndarray
    flags: dict = field(default_factory=dict)  # year -> reason

    def to_csv(self) -> str:
        lines = ["year,nhhi,entropy,n_entities,n_excluded_negative"]
        for i, yr in enumerate(self.years):
            vals = []
            for arr in (self.nhhi, self.entropy):
                v = arr[i]
                vals.append("" if math.isnan(v) else repr(float(v)))
            lines.append(
                f"{int(yr)},{vals[0]},{vals[1]},{int(self.n_entities[i])},{int(self.n_excluded[i])}"
            )
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------


def _time_transform(df: pd.DataFrame, variables, mode: Mode) -> pd.DataFrame:
    """Per-entity level/growth/difference columns aligned to df's rows.

    Growth rates require consecutive years and |previous level| > eps; other
    cells are missing.
    """
    df = df.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    out = {}
    if mode is Mode.LEVELS:
        for var in variables:
            out[var] = df[var].to_numpy(dtype=float)
        return pd.DataFrame(out)
    ent = df["entity_id"].to_numpy()
    yr = df["year"].to_numpy()
    consecutive = np.zeros(len(df), dtype=bool)
    consecutive[1:] = (ent[1:] == ent[:-1]) & (yr[1:] == yr[:-1] + 1)
    for var in variables:
        x = df[var].to_numpy(dtype=float)
        prev = np.empty_like(x)
        prev[:] = np.nan
        prev[1:] = x[:-1]
        prev[~consecutive] = np.nan
        if mode is Mode.FIRST_DIFFERENCES:
            out[var] = x - prev
        else:
            with np.errstate(divide="ignore", invalid="ignore"):
                out[var] = np.where(np.abs(prev) > GROWTH_EPS, (x - prev) / prev, np.nan)
    return pd.DataFrame(out)


def correlation_report(frame, variables, mode: Mode, min_pairs: int = MIN_PAIRS) -> CorrelationReport:
    """Pairwise-complete Pearson correlations pooled across entities and years.

    Cells with fewer than min_pairs valid pairs are flagged, not fatal.
    """
    df = getattr(frame, "df", frame)
    variables = list(variables)
    for v in variables:
        if v not in df.columns:
            raise KeyError(f"variable {v!r} not in frame")
    t = _time_transform(df, variables, mode)
    p = len(variables)
    matrix = np.full((p, p), np.nan)
    counts = np.zeros((p, p), dtype=int)
    flags = {}
    cols = [t[v].to_numpy() for v in variables]
    for i in range(p):
        matrix[i, i] = 1.0
        counts[i, i] = int(np.isfinite(cols[i]).sum())
        for j in range(i + 1, p):
            mask = np.isfinite(cols[i]) & np.isfinite(cols[j])
            n = int(mask.sum())
            counts[i, j] = counts[j, i] = n
            if n < min_pairs:
                flags[(variables[i], variables[j])] = "InsufficientPairs"
                continue
            a = cols[i][mask]
            b = cols[j][mask]
            sa, sb = a.std(), b.std()
            if sa == 0.0 or sb == 0.0:
                flags[(variables[i], variables[j])] = "ZeroVariance"
                continue
            r = float(np.corrcoef(a, b)[0, 1])
            matrix[i, j] = matrix[j, i] = max(-1.0, min(1.0, r))
    return CorrelationReport(variables, mode, matrix, counts, flags)


# ---------------------------------------------------------------------------
# the nine sectoral correlation laws
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Law:
    law_id: str
    description: str
    mode: Mode
    var_x: str
    var_y: str
    sign: int


FABRICANT_LAWS = (
    Law("L1", "output growth ~ labor productivity growth", Mode.GROWTH_RATES, "y", "q", +1),
    Law("L2", "output growth ~ growth of wage bill per output", Mode.GROWTH_RATES, "y", "wage_share", -1),
    Law("L3", "output growth ~ capital growth", Mode.GROWTH_RATES, "y", "k", +1),
    Law("L4", "output growth ~ employment growth", Mode.GROWTH_RATES, "y", "l", +1),
    Law("L5", "value added per output growth ~ wage growth", Mode.GROWTH_RATES, "va_per_output", "w", +1),
    Law("L6", "value added per output ~ output price (levels)", Mode.LEVELS, "va_per_output", "p", +1),
    Law("L7", "output growth ~ capital intensity growth", Mode.GROWTH_RATES, "y", "capital_intensity", +1),
    Law("L8", "wage bill per output ~ labor productivity (levels)", Mode.LEVELS, "wage_share", "q", -1),
    Law("L9", "value added growth ~ output price growth", Mode.GROWTH_RATES, "y", "p", -1),
)


@dataclass
class LawVerdict:
    law: Law
    observed_r: float  # NaN when untestable
    verdict: Verdict

    def row(self) -> dict:
        return {
            "law": self.law.law_id,
            "description": self.law.description,
            "required_sign": "+" if self.law.sign > 0 else "-",
            "observed_r": self.observed_r,
            "verdict": self.verdict.value,
        }


def fabricant_check(sector_report: CorrelationReport, threshold: float = SIGN_THRESHOLD):
    """Sign verdicts for the nine sectoral correlation laws.

    A law is Untestable when the report's mode or variables do not cover it;
    it Holds when |r| >= threshold with the required sign, otherwise Fails.
    """
    verdicts = []
    for law in FABRICANT_LAWS:
        if law.mode is not sector_report.mode:
            verdicts.append(LawVerdict(law, math.nan, Verdict.UNTESTABLE))
            continue
        if law.var_x not in sector_report.variables or law.var_y not in sector_report.variables:
            verdicts.append(LawVerdict(law, math.nan, Verdict.UNTESTABLE))
            continue
        r = sector_report.r(law.var_x, law.var_y)
        if math.isnan(r):
            verdicts.append(LawVerdict(law, r, Verdict.UNTESTABLE))
            continue
        ok = abs(r) >= threshold and (r > 0) == (law.sign > 0)
        verdicts.append(LawVerdict(law, r, Verdict.HOLDS if ok else Verdict.FAILS))
    return verdicts


def verdicts_to_csv(verdicts) -> str:
    lines = ["law,description,required_sign,observed_r,verdict"]
    for v in verdicts:
        row = v.row()
        r = "" if math.isnan(row["observed_r"]) else repr(float(row["observed_r"]))
        lines.append(
            f"{row['law']},\"{row['description']}\",{row['required_sign']},{r},{row['verdict']}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# growth decomposition identity
# ---------------------------------------------------------------------------


def growth_decompose(sector_frame) -> pd.DataFrame:
    """Both sides of (sector productivity growth - economy productivity growth)
    = (VA share growth - employment share growth), per sector and year.

    The identity is exact in log growth and holds approximately for ratio
    growth rates near zero; the residual column makes the gap inspectable.
    Cells with zero denominators are flagged instead of dropped silently.
    """
    df = getattr(sector_frame, "df", sector_frame)
    for col in ("y", "l"):
        if col not in df.columns:
            raise KeyError(f"sector frame needs column {col!r}")
    df = df.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    totals = df.groupby("year").agg(Y=("y", "sum"), L=("l", "sum"))
    if (totals["L"] == 0).any():
        raise ZeroDenominator("economy employment total is zero in some year")
    big_q = (totals["Y"] / totals["L"]).rename("Q")
    merged = df.merge(big_q, left_on="year", right_index=True)
    merged["q_k"] = np.where(merged["l"] != 0, merged["y"] / merged["l"], np.nan)
    merged["s_y"] = merged["y"] / merged.groupby("year")["y"].transform("sum")
    merged["s_l"] = merged["l"] / merged.groupby("year")["l"].transform("sum")

    t = _time_transform(
        merged.rename(columns={"q_k": "qk"}), ["qk", "Q", "s_y", "s_l"], Mode.GROWTH_RATES
    )
    sorted_df = merged.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    out = pd.DataFrame(
        {
            "sector": sorted_df["entity_id"],
            "year": sorted_df["year"],
            "lhs": t["qk"].to_numpy() - t["Q"].to_numpy(),
            "rhs": t["s_y"].to_numpy() - t["s_l"].to_numpy(),
        }
    )
    out["residual"] = out["lhs"] - out["rhs"]
    zero_cells = (~np.isfinite(out["lhs"].to_numpy())) | (~np.isfinite(out["rhs"].to_numpy()))
    first_year = sorted_df["year"] == sorted_df["year"].min()
    out["flag"] = np.where(
        zero_cells & ~first_year.to_numpy(), "ZeroDenominator", ""
    )
    return out


# ---------------------------------------------------------------------------
# broad-range autocorrelation
# ---------------------------------------------------------------------------


def _entity_matrix(df: pd.DataFrame, variable: str, transform: str):
    """Entities x consecutive-year matrix of the transformed variable."""
    years = np.arange(df["year"].min(), df["year"].max() + 1)
    pivot = df.pivot_table(index="entity_id", columns="year", values=variable,
                           aggfunc="first")
    pivot = pivot.reindex(columns=years)
    m = pivot.to_numpy(dtype=float)
    if transform in ("shares", "diff_of_shares"):
        with np.errstate(invalid="ignore"):
            col_sum = np.nansum(m, axis=0)
            col_sum[col_sum == 0.0] = np.nan
            m = m / col_sum[None, :]
    if transform == "diff_of_shares":
        m = np.diff(m, axis=1)
    elif transform not in ("levels", "shares"):
        raise ValueError(f"unknown transform {transform!r}")
    return m


def _pooled_rho(m: np.ndarray, lag: int):
    a = m[:, :-lag].ravel() if lag > 0 else m.ravel()
    b = m[:, lag:].ravel()
    mask = np.isfinite(a) & np.isfinite(b)
    n = int(mask.sum())
    if n < MIN_PAIRS:
        return math.nan, n, "InsufficientPairs"
    a, b = a[mask], b[mask]
    sa, sb = a.std(), b.std()
    if sa == 0.0 or sb == 0.0:
        return math.nan, n, "ZeroVariance"
    r = float(np.corrcoef(a, b)[0, 1])
    return max(-1.0, min(1.0, r)), n, ""


def autocorrelation(frame, variable: str, transform: str = "shares",
                    max_lag: int = 10, n_boot: int = 200, seed=0,
                    include_zero: bool = False, ci_level: float = 0.95) -> AutocorrSpectrum:
    """Broad-range autocorrelation: all (t, t + lag) pairs pooled over entities.

    Confidence bands come from resampling entities with replacement (the
    temporal dependence that motivates the broad-range estimator makes
    resampling over time invalid).  Degenerate lags are flagged, never NaN
    propagated into neighbours.  Raises SpanTooShort when max_lag reaches the
    series span.
    """
    if n_boot < 100:
        raise ValueError("n_boot must be >= 100")
    df = getattr(frame, "df", frame)
    if variable not in df.columns:
        raise KeyError(f"variable {variable!r} not in frame")
    m = _entity_matrix(df, variable, transform)
    span = m.shape[1]
    if max_lag >= span:
        raise SpanTooShort(f"max_lag {max_lag} >= span {span}")
    lags = np.arange(0 if include_zero else 1, max_lag + 1)
    rho = np.empty(len(lags))
    n_obs = np.zeros(len(lags), dtype=int)
    flags = []
    for i, lag in enumerate(lags):
        rho[i], n_obs[i], flag = _pooled_rho(m, int(lag))
        flags.append(flag)
    rng = np.random.default_rng(seed)
    n_entities = m.shape[0]
    boot = np.empty((n_boot, len(lags)))
    for b in range(n_boot):
        take = rng.integers(0, n_entities, n_entities)
        mb = m[take]
        for i, lag in enumerate(lags):
            boot[b, i] = _pooled_rho(mb, int(lag))[0]
    alpha = (1.0 - ci_level) / 2.0
    with np.errstate(invalid="ignore"):
        ci_lo = np.nanquantile(boot, alpha, axis=0)
        ci_hi = np.nanquantile(boot, 1.0 - alpha, axis=0)
    # percentile bands can exclude the point estimate in small samples
    ci_lo = np.fmin(ci_lo, rho)
    ci_hi = np.fmax(ci_hi, rho)
    return AutocorrSpectrum(lags, rho, ci_lo, ci_hi, n_obs, flags)


def cross_correlation(frame, var_x: str, var_y: str, max_lag: int = 5,
                      transform: str = "shares") -> pd.DataFrame:
    """Correlation of x_t with y_(t+lag) pooled over entities, lag in
    [-max_lag, max_lag]; a lead-lag report with no verdict attached."""
    df = getattr(frame, "df", frame)
    mx = _entity_matrix(df, var_x, transform)
    my = _entity_matrix(df, var_y, transform)
    rows = []
    for lag in range(-max_lag, max_lag + 1):
        if lag >= 0:
            a = mx[:, : mx.shape[1] - lag].ravel()
            b = my[:, lag:].ravel()
        else:
            a = mx[:, -lag:].ravel()
            b = my[:, : my.shape[1] + lag].ravel()
        mask = np.isfinite(a) & np.isfinite(b)
        n = int(mask.sum())
        if n < MIN_PAIRS or a[mask].std() == 0 or b[mask].std() == 0:
            rows.append({"lag": lag, "r": math.nan, "n_obs": n})
        else:
            rows.append({"lag": lag, "r": float(np.corrcoef(a[mask], b[mask])[0, 1]), "n_obs": n})
    return pd.DataFrame(rows)


# ---------------------------------------------------------------------------
# filtered conditional growth
# ---------------------------------------------------------------------------


def filtered_conditional(firm_frame, sector_frame, variable: str,
                         n_bins: int = 20) -> pd.DataFrame:
    """Mean and median firm growth conditional on binned sector growth.

    Equal-count bins over the sector growth of `variable`; both statistics are
    returned because the mean is unreliable under heavy tails while the median
    is not.  Raises TooFewBins when the bin count cannot be realized.
    """
    fdf = getattr(firm_frame, "df", firm_frame)
    sdf = getattr(sector_frame, "df", sector_frame)
    if "sector" not in fdf.columns:
        raise KeyError("firm frame needs a 'sector' column")
    if n_bins < 1:
        raise TooFewBins("n_bins must be >= 1")

    f_sorted = fdf.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    fg = _time_transform(f_sorted, [variable], Mode.GROWTH_RATES)[variable]
    firm = pd.DataFrame(
        {
            "sector": f_sorted["sector"].to_numpy(),
            "year": f_sorted["year"].to_numpy(),
            "firm_growth": fg.to_numpy(),
        }
    )
    s_sorted = sdf.sort_values(["entity_id", "year"], kind="mergesort").reset_index(drop=True)
    sg = _time_transform(s_sorted, [variable], Mode.GROWTH_RATES)[variable]
    sector = pd.DataFrame(
        {
            "sector": s_sorted["entity_id"].to_numpy(),
            "year": s_sorted["year"].to_numpy(),
            "sector_growth": sg.to_numpy(),
        }
    )
    joined = firm.merge(sector, on=["sector", "year"], how="inner")
    joined = joined[np.isfinite(joined["firm_growth"]) & np.isfinite(joined["sector_growth"])]
    if len(joined) == 0:
        raise TooFewBins("no joinable firm/sector growth observations")
    edges = np.unique(
        np.quantile(joined["sector_growth"], np.linspace(0.0, 1.0, n_bins + 1))
    )
    if len(edges) - 1 < n_bins:
        raise TooFewBins(
            f"only {len(edges) - 1} distinct equal-count bins available, need {n_bins}"
        )
    which = np.clip(np.searchsorted(edges, joined["sector_growth"], side="right") - 1, 0, n_bins - 1)
    joined = joined.assign(bin=which)
    grouped = joined.groupby("bin").agg(
        bin_center=("sector_growth", "mean"),
        mean_firm_growth=("firm_growth", "mean"),
        median_firm_growth=("firm_growth", "median"),
        n_obs=("firm_growth", "size"),
    )
    return grouped.reset_index()


# ---------------------------------------------------------------------------
# dispersion
# ---------------------------------------------------------------------------


def dispersion(frame, variable: str, log_base: float | None = None) -> DispersionSeries:
    """Normalized Herfindahl-Hirschman index and Shannon entropy of the
    variable's shares, per year.

    Negative entries are excluded (and counted); a single-entity year leaves
    the nHHI undefined and is flagged.  Entropy uses the natural log unless
    log_base is given.
    """
    df = getattr(frame, "df", frame)
    if variable not in df.columns:
        raise KeyError(f"variable {variable!r} not in frame")
    years = np.asarray(sorted(df["year"].unique()))
    nhhi = np.full(len(years), np.nan)
    entropy = np.full(len(years), np.nan)
    n_entities = np.zeros(len(years), dtype=int)
    n_excluded = np.zeros(len(years), dtype=int)
    flags = {}
    scale = math.log(log_base) if log_base else 1.0
    for i, year in enumerate(years):
        x = df.loc[df["year"] == year, variable].to_numpy(dtype=float)
        x = x[np.isfinite(x)]
        neg = x < 0.0
        n_excluded[i] = int(neg.sum())
        x = x[~neg]
        n = x.size
        n_entities[i] = n
        if n == 0 or x.sum() <= 0.0:
            flags[int(year)] = "NoMass"
            continue
        s = x / x.sum()
        h = float(np.sum(s * s))
        pos = s[s > 0.0]
        entropy[i] = float(-np.sum(pos * np.log(pos))) / scale
        if n == 1:
            flags[int(year)] = "SingleEntity"
            continue
        nhhi[i] = (h - 1.0 / n) / (1.0 - 1.0 / n)
    return DispersionSeries(years, nhhi, entropy, n_entities, n_excluded, flags)
