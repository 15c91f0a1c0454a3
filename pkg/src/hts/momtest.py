"""Randomized test for finiteness of absolute moments.

The k-th absolute sample moment is rescaled by a lower-order moment so the
statistic is scale-free, blown up exponentially, and used as the variance of
artificial Gaussian draws.  When the population moment is infinite the
rescaled moment diverges with n, the artificial draws become arbitrarily
wide, and the empirical-CDF deviation process over a fixed threshold grid
behaves like a single standard normal, so the integrated squared process is
chi-squared(1).  When the moment is finite the deviation process picks up a
drift of order sqrt(R) and the statistic explodes.  Small p-values therefore
reject the infinite-moment null.

The statistic is averaged over independent randomization replicates, which
are conditionally independent given the data under the null; this
de-randomizes the decision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import chi2

from .errors import InvalidOrder, SampleTooSmall

__all__ = [
    "Decision",
    "TestConfig",
    "MomentTestResult",
    "MomentReport",
    "finite_moment_test",
    "moment_report",
]

_VALID_ORDERS = (1, 2, 3, 4)

# exp(x) overflows double beyond ~709.78
_EXP_OVERFLOW = 709.0


class Decision(enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class TestConfig:
    """Constants of the randomized moment test.

    n_draws: artificial standard normals per replicate (R).
    n_rep: randomization replicates averaged into the statistic.
    grid_points / grid_half_width: symmetric threshold grid, uniform weights.
    threshold: p-value cutoff; p <= threshold decides Finite.
    psi_ratio: rescaling moment order as a fraction of k (psi = psi_ratio * k).
    exp_scale: multiplier on the rescaled moment before exponentiation; it
        sharpens the finite/infinite separation at the tail-index boundary.
    """

    n_draws: int = 128
    n_rep: int = 32
    grid_points: int = 51
    grid_half_width: float = 2.0
    threshold: float = 0.1
    psi_ratio: float = 0.5
    exp_scale: float = 2.0


DEFAULT_CONFIG = TestConfig()


@dataclass(frozen=True)
class MomentTestResult:
    order: int
    statistic: float  # NaN when exp() of the rescaled moment overflows
    p_value: float
    decision: Decision
    threshold: float

    def row(self) -> dict:
        return {
            "order": self.order,
            "statistic": self.statistic,
            "p_value": self.p_value,
            "decision": self.decision.value,
        }


def finite_moment_test(sample, order: int, config: TestConfig | None = None,
                       seed=0) -> MomentTestResult:
    """Decide whether the order-th absolute moment of the sample is finite.

    Deterministic given (sample, config, seed).  Requires n >= 1000 and
    order in {1, 2, 3, 4}.
    """
    if order not in _VALID_ORDERS:
        raise InvalidOrder(f"order must be one of {_VALID_ORDERS}, got {order}")
    cfg = config or DEFAULT_CONFIG
    x = np.asarray(sample, dtype=float).ravel()
    x = x[np.isfinite(x)]
    if x.size < 1000:
        raise SampleTooSmall(f"moment test needs n >= 1000, got {x.size}")

    abs_x = np.abs(x)
    psi = cfg.psi_ratio * order
    m_k = float(np.mean(abs_x**order))
    m_psi = float(np.mean(abs_x**psi))
    if m_psi <= 0.0:
        # all-zero sample: every absolute moment is 0, trivially finite
        return MomentTestResult(order, math.inf, 0.0, Decision.FINITE, cfg.threshold)
    mu = m_k / m_psi ** (order / psi)

    scaled = cfg.exp_scale * mu
    if scaled > _EXP_OVERFLOW or not math.isfinite(scaled):
        return MomentTestResult(order, math.nan, 1.0, Decision.INFINITE, cfg.threshold)
    root_theta = math.exp(0.5 * scaled)

    rng = np.random.default_rng(seed)
    grid = np.linspace(-cfg.grid_half_width, cfg.grid_half_width, cfg.grid_points)
    stat = 0.0
    for _ in range(cfg.n_rep):
        xi = np.sort(rng.standard_normal(cfg.n_draws)) * root_theta
        counts = np.searchsorted(xi, grid, side="right")
        zeta = (2.0 / math.sqrt(cfg.n_draws)) * (counts - 0.5 * cfg.n_draws)
        stat += float(np.mean(zeta**2))
    stat /= cfg.n_rep

    p_value = float(chi2.sf(stat, df=1))
    decision = Decision.FINITE if p_value <= cfg.threshold else Decision.INFINITE
    return MomentTestResult(order, stat, p_value, decision, cfg.threshold)


# ---------------------------------------------------------------------------
# per-variable report
# ---------------------------------------------------------------------------


@dataclass
class MomentReport:
    """Grid of moment-test results: one cell per (variable, order)."""

    variables: list
    orders: list
    cells: dict = field(default_factory=dict)  # (variable, order) -> result
    errors: dict = field(default_factory=dict)  # (variable, order) -> message

    def to_rows(self) -> list[dict]:
        rows = []
        for var in self.variables:
            for order in self.orders:
                key = (var, order)
                if key in self.cells:
                    r = self.cells[key]
                    rows.append(
                        {
                            "variable": var,
                            "order": order,
                            "statistic": r.statistic,
                            "p_value": r.p_value,
                            "decision": r.decision.value,
                        }
                    )
                else:
                    rows.append(
                        {
                            "variable": var,
                            "order": order,
                            "statistic": "",
                            "p_value": "",
                            "decision": f"error:{self.errors.get(key, 'unknown')}",
                        }
                    )
        return rows

    def to_csv(self) -> str:
        lines = ["variable,order,statistic,p_value,decision"]
        for row in self.to_rows():
            stat = row["statistic"]
            pv = row["p_value"]
            stat_s = _fmt_number(stat) if stat != "" else ""
            p_s = _fmt_number(pv) if pv != "" else ""
            lines.append(f"{row['variable']},{row['order']},{stat_s},{p_s},{row['decision']}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        """Three-row blocks per moment order: statistic, (p-value), decision."""
        width = max([12] + [len(str(v)) + 2 for v in self.variables])
        head = "Moment order".ljust(14) + "".join(str(v).rjust(width) for v in self.variables)
        rule = "=" * len(head)
        lines = [rule, head, rule]
        for order in self.orders:
            stat_cells, p_cells, dec_cells = [], [], []
            for var in self.variables:
                key = (var, order)
                if key in self.cells:
                    r = self.cells[key]
                    stat_cells.append(_fmt_number(r.statistic))
                    p_cells.append(f"({_fmt_number(r.p_value)})")
                    dec_cells.append(r.decision.value)
                else:
                    stat_cells.append("n/a")
                    p_cells.append("(n/a)")
                    dec_cells.append("error")
            lines.append(str(order).ljust(14) + "".join(c.rjust(width) for c in stat_cells))
            lines.append(" " * 14 + "".join(c.rjust(width) for c in p_cells))
            lines.append(" " * 14 + "".join(c.rjust(width) for c in dec_cells))
            lines.append("-" * len(head))
        lines[-1] = rule
        return "\n".join(lines) + "\n"


def _fmt_number(v) -> str:
    if isinstance(v, float) and math.isnan(v):
        return "NaN"
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return f"{v:.6g}"


def moment_report(frame, variables, orders, config: TestConfig | None = None,
                  seed=0) -> MomentReport:
    """Run finite_moment_test per (variable, order) cell of a panel.

    Cell failures are recorded, not raised.  Each cell gets its own seed
    derived from the root seed, so rows can be computed in any order or in
    parallel without changing results.
    """
    df = getattr(frame, "df", frame)
    variables = list(variables)
    orders = [int(o) for o in orders]
    for var in variables:
        if var not in df.columns:
            raise KeyError(f"variable {var!r} not present in frame")
    report = MomentReport(variables=variables, orders=orders)
    for idx, (var, order) in enumerate(
        (v, o) for v in variables for o in orders
    ):
        cell_seed = np.random.SeedSequence([int(seed), idx])
        values = df[var].to_numpy(dtype=float)
        try:
            report.cells[(var, order)] = finite_moment_test(
                values, order, config=config, seed=cell_seed
            )
        except Exception as exc:  # per-cell failure must not abort the table
            report.errors[(var, order)] = type(exc).__name__
    return report
