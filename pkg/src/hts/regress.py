"""Linear panel regression with Cauchy-distributed errors (robust) and OLS.

The robust fit maximizes the Cauchy likelihood by EM, treating the Cauchy as a
scale mixture of normals (t with 1 degree of freedom): E-step weights
w_i = 2 gamma^2 / (gamma^2 + r_i^2), M-step weighted least squares plus a
scale update.  Standard errors come from the observed information at the
optimum.  OLS runs on the same design for contrast; its residuals are expected
to fail the finite-second-moment test when errors are heavy-tailed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .errors import EmptyAfterFiltering, NonConvergence, RankDeficient
from .momtest import MomentTestResult, TestConfig, finite_moment_test

__all__ = [
    "Method",
    "RegressionSpec",
    "RegressionFit",
    "DesignMatrix",
    "build_design",
    "ols_fit",
    "cauchy_fit",
    "residual_moment_check",
    "run_model_suite",
    "ModelSuiteResult",
    "fit_table_text",
]

SCALE_FLOOR = 1e-12
EM_TOL = 1e-9
EM_MAX_ITER = 2000

# fixed-effect factors recognized by the model suite, in reporting order
SUITE_FACTORS = ("year", "province", "firm_type", "size_class", "sector")


class Method(enum.Enum):
    OLS = "OLS"
    CAUCHY_ML = "CauchyML"


@dataclass(frozen=True)
class RegressionSpec:
    """Model definition: response, ordered regressors, fixed-effect factors."""

    response: str
    regressors: tuple = ()
    fixed_effects: tuple = ()
    intercept: bool = True

    def __post_init__(self):
        object.__setattr__(self, "regressors", tuple(self.regressors))
        object.__setattr__(self, "fixed_effects", tuple(self.fixed_effects))
        if len(set(self.regressors)) != len(self.regressors):
            raise ValueError("duplicate regressor")
        if len(set(self.fixed_effects)) != len(self.fixed_effects):
            raise ValueError("duplicate fixed-effect factor")


@dataclass
class DesignMatrix:
    """Dense design after fixed-effect expansion, plus the aligned response."""

    columns: list
    values: np.ndarray
    response: np.ndarray
    n_dropped: int
    row_index: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass
class RegressionFit:
    coefficients: dict  # name -> (estimate, standard error)
    scale: float
    log_likelihood: float
    n: int
    dof: int
    method: Method
    converged: bool = True
    iterations: int = 0

    def estimate(self, name: str) -> float:
        return self.coefficients[name][0]

    def se(self, name: str) -> float:
        return self.coefficients[name][1]

    def zscore(self, name: str) -> float:
        est, se = self.coefficients[name]
        return est / se if se > 0 else math.inf

    def p_value(self, name: str) -> float:
        from scipy.stats import norm

        return 2.0 * float(norm.sf(abs(self.zscore(name))))

    def to_json(self) -> dict:
        return {
            "method": self.method.value,
            "coefficients": {
                k: {"estimate": v[0], "se": v[1]} for k, v in self.coefficients.items()
            },
            "scale": self.scale,
            "log_likelihood": self.log_likelihood,
            "n": self.n,
            "dof": self.dof,
            "converged": self.converged,
        }


def build_design(frame, spec: RegressionSpec) -> DesignMatrix:
    """Expand a panel into a dense design: intercept, regressors, one-hot
    fixed effects with the lexicographically smallest level dropped.

    Rows with a missing value in any used column are dropped listwise; the
    dropped count is recorded.  Raises RankDeficient (naming suspect columns)
    or EmptyAfterFiltering.
    """
    df = getattr(frame, "df", frame)
    used = [spec.response, *spec.regressors, *spec.fixed_effects]
    missing_cols = [c for c in used if c not in df.columns]
    if missing_cols:
        raise KeyError(f"columns not in frame: {missing_cols}")
    sub = df[used].copy()
    mask = np.ones(len(sub), dtype=bool)
    for c in used:
        col = sub[c]
        if np.issubdtype(col.dtype, np.floating):
            mask &= np.isfinite(col.to_numpy())
        else:
            mask &= col.notna().to_numpy()
    n_dropped = int((~mask).sum())
    sub = sub[mask]
    if len(sub) == 0:
        raise EmptyAfterFiltering("no rows left after listwise deletion")

    columns = []
    blocks = []
    if spec.intercept:
        columns.append("const")
        blocks.append(np.ones((len(sub), 1)))
    for reg in spec.regressors:
        columns.append(reg)
        blocks.append(sub[reg].to_numpy(dtype=float).reshape(-1, 1))
    for factor in spec.fixed_effects:
        levels = sorted(map(str, sub[factor].unique()))
        if len(levels) < 2:
            raise RankDeficient(
                f"fixed-effect factor {factor!r} has fewer than 2 observed levels",
                columns=[factor],
            )
        vals = sub[factor].astype(str).to_numpy()
        for level in levels[1:]:  # drop first-by-sort as reference
            columns.append(f"{factor}[{level}]")
            blocks.append((vals == level).astype(float).reshape(-1, 1))
    x = np.hstack(blocks)
    y = sub[spec.response].to_numpy(dtype=float)

    rank = np.linalg.matrix_rank(x)
    if rank < x.shape[1]:
        # QR with pivoting flags the dependent columns
        from scipy.linalg import qr

        _, r, piv = qr(x, mode="economic", pivoting=True)
        diag = np.abs(np.diag(r))
        tol = diag.max() * max(x.shape) * np.finfo(float).eps
        bad = [columns[piv[i]] for i in range(len(diag)) if diag[i] <= tol]
        raise RankDeficient(
            f"design is rank deficient (rank {rank} < {x.shape[1]})", columns=bad
        )
    return DesignMatrix(
        columns=columns,
        values=x,
        response=y,
        n_dropped=n_dropped,
        row_index=np.nonzero(mask)[0],
    )


def ols_fit(design: DesignMatrix, y=None) -> RegressionFit:
    """Least squares via QR with classical standard errors and the Gaussian
    log-likelihood at the residual-variance MLE."""
    x = design.values
    y = design.response if y is None else np.asarray(y, dtype=float)
    if y.shape[0] != x.shape[0]:
        raise ValueError("response length does not match design")
    n, p = x.shape
    q, r = np.linalg.qr(x)
    if np.abs(np.diag(r)).min() <= np.abs(np.diag(r)).max() * n * np.finfo(float).eps:
        raise RankDeficient("design is rank deficient", columns=design.columns)
    beta = np.linalg.solve(r, q.T @ y)
    resid = y - x @ beta
    rss = float(resid @ resid)
    dof = n - p
    sigma2 = rss / dof if dof > 0 else math.nan
    r_inv = np.linalg.solve(r, np.eye(p))
    cov = sigma2 * (r_inv @ r_inv.T)
    ses = np.sqrt(np.maximum(np.diag(cov), 0.0))
    sigma2_mle = rss / n
    loglik = -0.5 * n * (math.log(2.0 * math.pi * max(sigma2_mle, SCALE_FLOOR**2)) + 1.0)
    coeffs = {name: (float(b), float(s)) for name, b, s in zip(design.columns, beta, ses)}
    return RegressionFit(
        coefficients=coeffs,
        scale=math.sqrt(max(sigma2, 0.0)) if dof > 0 else 0.0,
        log_likelihood=loglik,
        n=n,
        dof=dof,
        method=Method.OLS,
    )


def _cauchy_loglik(resid: np.ndarray, gamma: float) -> float:
    return float(
        np.sum(math.log(gamma) - math.log(math.pi) - np.log(gamma**2 + resid**2))
    )


def cauchy_fit(design: DesignMatrix, y=None) -> RegressionFit:
    """Cauchy-error maximum likelihood by EM (normal scale-mixture form).

    The likelihood is non-decreasing across iterations (asserted); convergence
    at relative log-likelihood change < 1e-9.  On hitting the iteration budget
    the best iterate is returned inside a NonConvergence error.
    """
    x = design.values
    y = design.response if y is None else np.asarray(y, dtype=float)
    if y.shape[0] != x.shape[0]:
        raise ValueError("response length does not match design")
    n, p = x.shape
    # OLS start; scale from the median absolute residual
    beta = np.linalg.lstsq(x, y, rcond=None)[0]
    resid = y - x @ beta
    gamma = max(float(np.median(np.abs(resid))), SCALE_FLOOR)
    ll = _cauchy_loglik(resid, gamma)
    converged = False
    it = 0
    for it in range(1, EM_MAX_ITER + 1):
        w = 2.0 * gamma**2 / (gamma**2 + resid**2)
        sw = np.sqrt(w)
        beta_new, *_ = np.linalg.lstsq(x * sw[:, None], y * sw, rcond=None)
        resid_new = y - x @ beta_new
        gamma_new = max(
            math.sqrt(float(np.mean(2.0 * gamma**2 / (gamma**2 + resid_new**2) * resid_new**2))),
            SCALE_FLOOR,
        )
        ll_new = _cauchy_loglik(resid_new, gamma_new)
        if gamma_new <= SCALE_FLOOR * (1.0 + 1e-9):
            # exact fit: the likelihood degenerates at the scale floor
            beta, resid, gamma, ll = beta_new, resid_new, gamma_new, ll_new
            converged = True
            break
        if ll_new < ll - 1e-8 * max(abs(ll), 1.0):
            raise AssertionError(
                f"EM log-likelihood decreased at iteration {it}: {ll} -> {ll_new}"
            )
        improved = ll_new - ll
        beta, resid, gamma, ll = beta_new, resid_new, gamma_new, ll_new
        if abs(improved) < EM_TOL * max(abs(ll), 1.0):
            converged = True
            break

    ses, se_scale = _cauchy_observed_se(x, resid, gamma)
    coeffs = {name: (float(b), float(s)) for name, b, s in zip(design.columns, beta, ses)}
    fit = RegressionFit(
        coefficients=coeffs,
        scale=gamma,
        log_likelihood=ll,
        n=n,
        dof=n - p,
        method=Method.CAUCHY_ML,
        converged=converged,
        iterations=it,
    )
    if not converged:
        raise NonConvergence(
            f"EM did not converge within {EM_MAX_ITER} iterations", best=fit
        )
    return fit


def _cauchy_observed_se(x: np.ndarray, resid: np.ndarray, gamma: float):
    """Standard errors from the observed information of the Cauchy likelihood."""
    g2 = gamma**2
    denom = (g2 + resid**2) ** 2
    w_bb = 2.0 * (g2 - resid**2) / denom
    h_bb = -(x.T * w_bb) @ x
    h_bg = -(x.T @ (4.0 * gamma * resid / denom))
    h_gg = float(np.sum(-1.0 / g2 - 2.0 * (resid**2 - g2) / denom))
    p = x.shape[1]
    h = np.zeros((p + 1, p + 1))
    h[:p, :p] = h_bb
    h[:p, p] = h_bg
    h[p, :p] = h_bg
    h[p, p] = h_gg
    info = -h
    try:
        cov = np.linalg.inv(info)
        diag = np.diag(cov)
        if np.any(diag <= 0):
            raise np.linalg.LinAlgError
        ses = np.sqrt(diag)
    except np.linalg.LinAlgError:
        # fall back to the block inverse; exact-fit corner
        cov_b = np.linalg.pinv(info[:p, :p])
        ses = np.append(np.sqrt(np.maximum(np.diag(cov_b), 0.0)), math.nan)
    return np.maximum(ses[:p], SCALE_FLOOR), float(ses[p])


def residual_moment_check(fit: RegressionFit, design: DesignMatrix, y=None,
                          config: TestConfig | None = None, seed=0) -> MomentTestResult:
    """Finite-moment test at order 2 on the fit's residuals.

    OLS on heavy-tailed errors is expected to come back Infinite, which is
    the workflow that invalidates OLS in favor of the robust fit.
    """
    x = design.values
    y = design.response if y is None else np.asarray(y, dtype=float)
    beta = np.asarray([fit.coefficients[c][0] for c in design.columns])
    resid = y - x @ beta
    return finite_moment_test(resid, 2, config=config, seed=seed)


# ---------------------------------------------------------------------------
# the four-model suite
# ---------------------------------------------------------------------------


@dataclass
class ModelResult:
    model: int
    spec: RegressionSpec
    ols: RegressionFit | None = None
    cauchy: RegressionFit | None = None
    ols_residual_check: MomentTestResult | None = None
    n_dropped: int = 0
    error: str | None = None


@dataclass
class ModelSuiteResult:
    response: str
    models: list = field(default_factory=list)

    def get(self, model: int) -> ModelResult:
        return self.models[model - 1]


def model_specs(response: str, sector_growth: str = "g_s_k",
                frame_columns=None) -> list:
    """The nested four-model family on firm growth.

    (1) sector share growth only; (2) + labor productivity, its change and
    firm age; (3) + year/province/type/size fixed effects; (4) + sector FE.
    """
    base = (sector_growth,)
    extra = (sector_growth, "q", "d_q", "a")
    fe3 = ("year", "province", "firm_type", "size_class")
    fe4 = fe3 + ("sector",)
    return [
        RegressionSpec(response, base, ()),
        RegressionSpec(response, extra, ()),
        RegressionSpec(response, extra, fe3),
        RegressionSpec(response, extra, fe4),
    ]


def run_model_suite(frame, response: str, sector_growth: str = "g_s_k",
                    moment_config: TestConfig | None = None, seed=0) -> ModelSuiteResult:
    """Fit the four nested models with both OLS and CauchyML plus the OLS
    residual moment check; per-model failures are recorded, not raised."""
    df = getattr(frame, "df", frame)
    if response not in df.columns:
        raise KeyError(f"response column {response!r} not in frame")
    out = ModelSuiteResult(response=response)
    for i, spec in enumerate(model_specs(response, sector_growth), start=1):
        result = ModelResult(model=i, spec=spec)
        try:
            design = build_design(df, spec)
            result.n_dropped = design.n_dropped
            result.ols = ols_fit(design)
            try:
                result.cauchy = cauchy_fit(design)
            except NonConvergence as exc:
                result.cauchy = exc.best
            try:
                result.ols_residual_check = residual_moment_check(
                    result.ols, design, config=moment_config,
                    seed=np.random.SeedSequence([int(seed), i]),
                )
            except Exception as exc:
                result.error = f"residual check: {type(exc).__name__}"
        except Exception as exc:
            result.error = f"{type(exc).__name__}: {exc}"
        out.models.append(result)
    return out


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------


def fit_table_text(fits: dict, display: list | None = None,
                   note_rows: dict | None = None, star_level: float = 1e-4) -> str:
    """Aligned text table: per coefficient an estimate row and a parenthesized
    standard-error row, then Observations / Degrees of freedom / Log-likelihood.

    fits: column label -> RegressionFit.  display: coefficient names to show
    (default: union of non-fixed-effect coefficients).  note_rows: extra
    bottom rows, label -> {column -> text}.  Estimates significant at
    star_level (two-sided normal test) are starred.
    """
    labels = list(fits)
    if display is None:
        display = []
        for fit in fits.values():
            for name in fit.coefficients:
                if "[" not in name and name not in display:
                    display.append(name)
    width = max([16] + [len(lbl) + 4 for lbl in labels])
    name_w = max([22] + [len(n) + 2 for n in display])

    def fmt_est(fit, name):
        if fit is None or name not in fit.coefficients:
            return ""
        est, _ = fit.coefficients[name]
        star = "*" if fit.p_value(name) < star_level else ""
        return f"{est:.4f}{star}"

    def fmt_se(fit, name):
        if fit is None or name not in fit.coefficients:
            return ""
        return f"({fit.coefficients[name][1]:.4f})"

    lines = []
    header = " " * name_w + "".join(lbl.rjust(width) for lbl in labels)
    rule = "=" * len(header)
    lines += [rule, header, rule]
    for name in display:
        lines.append(
            name.ljust(name_w)
            + "".join(fmt_est(fits[lbl], name).rjust(width) for lbl in labels)
        )
        lines.append(
            " " * name_w + "".join(fmt_se(fits[lbl], name).rjust(width) for lbl in labels)
        )
    lines.append("-" * len(header))
    lines.append(
        "Observations".ljust(name_w)
        + "".join(
            (f"{fits[lbl].n:,}" if fits[lbl] else "").rjust(width) for lbl in labels
        )
    )
    lines.append(
        "Degrees of freedom".ljust(name_w)
        + "".join(
            (f"{fits[lbl].dof:,}" if fits[lbl] else "").rjust(width) for lbl in labels
        )
    )
    lines.append(
        "Log-likelihood".ljust(name_w)
        + "".join(
            (f"{fits[lbl].log_likelihood:,.1f}" if fits[lbl] else "").rjust(width)
            for lbl in labels
        )
    )
    if note_rows:
        lines.append("-" * len(header))
        for label, cells in note_rows.items():
            lines.append(
                label.ljust(name_w)
                + "".join(str(cells.get(lbl, "")).rjust(width) for lbl in labels)
            )
    lines.append(rule)
    return "\n".join(lines) + "\n"


def fit_table_csv(fits: dict, display: list | None = None) -> str:
    """CSV companion of fit_table_text: long format, one row per coefficient."""
    if display is None:
        display = []
        for fit in fits.values():
            if fit is None:
                continue
            for name in fit.coefficients:
                if name not in display:
                    display.append(name)
    lines = ["model,coefficient,estimate,se,p_value"]
    for lbl, fit in fits.items():
        if fit is None:
            continue
        for name in display:
            if name not in fit.coefficients:
                continue
            est, se = fit.coefficients[name]
            lines.append(f"{lbl},{name},{est!r},{se!r},{fit.p_value(name)!r}")
    return "\n".join(lines) + "\n"
