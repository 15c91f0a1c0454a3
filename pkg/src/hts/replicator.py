"""Multi-level replicator dynamics and the synthetic firm/sector panel generator.

Share dynamics follow ds_i/dt = s_i (f_i - phi) with phi the share-weighted
mean fitness; absolute-level dynamics compose macro growth, sector-share
growth and within-sector relative fitness additively.  The generator plants
sector-level correlation structure (common technology shocks driving
employment, productivity, capital, wages, margins and prices) while firm-level
value added carries stable-distributed idiosyncratic noise, so sectoral
regularities do not survive disaggregation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .errors import (
    CapacityExceeded,
    InconsistentHierarchy,
    NegativeShare,
)
from .panel import Level, PanelFrame
from .stable import StableParams, sample as stable_sample

__all__ = [
    "ReplicatorState",
    "Hierarchy",
    "SyntheticPanelConfig",
    "step_shares",
    "step_absolute",
    "step_capacity",
    "generate_panel",
]

SHARE_TOL = 1e-12

# Euler steps are split until every |f_i - phi| * dt falls below this
MAX_FITNESS_STEP = 0.5

FIRM_TYPES = (
    "SOE",
    "collective",
    "private",
    "shareholding",
    "other_domestic",
    "foreign",
    "HMT",
)

SIZE_LABELS = ("S", "M", "L", "VL")

# sector-level coupling constants of the planted correlation structure
_PRODUCTIVITY_ON_FITNESS = 1.0
_CAPITAL_ON_PRODUCTIVITY = 0.6
_CAPITAL_ON_EMPLOYMENT = 0.8
_WAGE_ON_PRODUCTIVITY = 0.3
_MARGIN_ON_WAGE_RATE = 0.6
_PRICE_ON_OUTPUT = -0.4
_PRICE_ON_MARGIN = 0.3
_SECTOR_NOISE = 0.008


def _check_state(shares: np.ndarray, total: float):
    if np.any(shares < 0):
        raise ValueError("shares must be nonnegative")
    if abs(float(np.sum(shares)) - 1.0) > SHARE_TOL:
        raise ValueError("shares must sum to 1 within 1e-12")
    if not (total > 0 and math.isfinite(total)):
        raise ValueError("total must be positive and finite")


@dataclass
class ReplicatorState:
    """Shares and fitnesses of one population plus its aggregate quantity."""

    shares: np.ndarray
    fitnesses: np.ndarray
    total: float = 1.0

    def __post_init__(self):
        self.shares = np.asarray(self.shares, dtype=float)
        self.fitnesses = np.asarray(self.fitnesses, dtype=float)
        if self.shares.shape != self.fitnesses.shape:
            raise ValueError("shares and fitnesses must align")
        _check_state(self.shares, self.total)

    @property
    def mean_fitness(self) -> float:
        return float(np.dot(self.shares, self.fitnesses))


@dataclass
class Hierarchy:
    """Firm-to-sector assignment with shares at both levels.

    firm_shares are shares of the economy total; within-sector shares are
    derived.  Every firm maps to exactly one sector and shares sum to 1 at
    each level.
    """

    sectors: list
    membership: dict  # firm_id -> sector_id
    sector_shares: np.ndarray
    firm_shares: np.ndarray
    firm_ids: list = field(default_factory=list)

    def __post_init__(self):
        self.sector_shares = np.asarray(self.sector_shares, dtype=float)
        self.firm_shares = np.asarray(self.firm_shares, dtype=float)
        if not self.firm_ids:
            self.firm_ids = list(self.membership)
        if len(self.firm_ids) != self.firm_shares.size:
            raise InconsistentHierarchy("firm ids and firm shares must align")
        if abs(self.sector_shares.sum() - 1.0) > SHARE_TOL:
            raise InconsistentHierarchy("sector shares must sum to 1")
        if abs(self.firm_shares.sum() - 1.0) > 1e-9:
            raise InconsistentHierarchy("firm shares must sum to 1")
        sector_pos = {s: i for i, s in enumerate(self.sectors)}
        try:
            self.sector_index = np.asarray(
                [sector_pos[self.membership[f]] for f in self.firm_ids], dtype=int
            )
        except KeyError as exc:
            raise InconsistentHierarchy(f"firm mapped to unknown sector: {exc}")
        sums = np.zeros(len(self.sectors))
        np.add.at(sums, self.sector_index, self.firm_shares)
        if not np.allclose(sums, self.sector_shares, atol=1e-9):
            raise InconsistentHierarchy(
                "firm shares do not aggregate to the sector shares"
            )


def step_shares(state: ReplicatorState, dt: float) -> ReplicatorState:
    """One Euler step of ds_i = s_i (f_i - phi) dt, then exact renormalization.

    Raises NegativeShare when the step would cross zero; the caller must
    reduce dt (generate_panel sub-steps automatically).
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    phi = state.mean_fitness
    new = state.shares + dt * state.shares * (state.fitnesses - phi)
    if np.any(new < 0):
        raise NegativeShare(
            f"dt={dt} drives a share negative (max |f - phi| = "
            f"{np.max(np.abs(state.fitnesses - phi)):.3g})"
        )
    new /= new.sum()
    return ReplicatorState(shares=new, fitnesses=state.fitnesses.copy(), total=state.total)


def step_absolute(state: ReplicatorState, hierarchy: Hierarchy,
                  macro_growth: float, dt: float) -> np.ndarray:
    """Per-firm absolute changes dx_i over dt.

    dx_i = X s_k sigma_i (Xdot + skdot + (f_i - f_k)) dt with sigma_i the
    within-sector share, f_k the sector's share-weighted fitness and
    skdot = f_k - phi the sector replicator identity, so firm changes
    aggregate exactly to the sector-level replicator and the economy total
    changes by X * Xdot * dt.
    """
    if state.shares.size != hierarchy.firm_shares.size:
        raise InconsistentHierarchy("state and hierarchy sizes differ")
    if not np.allclose(state.shares, hierarchy.firm_shares, atol=1e-9):
        raise InconsistentHierarchy("state shares differ from hierarchy firm shares")
    idx = hierarchy.sector_index
    s_k = hierarchy.sector_shares
    sigma = hierarchy.firm_shares / s_k[idx]
    f = state.fitnesses
    f_sector = np.zeros(len(hierarchy.sectors))
    np.add.at(f_sector, idx, sigma * f)
    phi = float(np.dot(s_k, f_sector))
    sk_dot = f_sector - phi
    bracket = macro_growth + sk_dot[idx] + (f - f_sector[idx])
    return state.total * s_k[idx] * sigma * bracket * dt


def step_capacity(state: ReplicatorState, capacities, dt: float,
                  hierarchy: Hierarchy | None = None) -> ReplicatorState:
    """Replicator step with a multiplicative sector capacity boundary.

    Each firm's increment x_i (f_i - phi) dt is damped by (1 - sum_k x / z_k)
    for its sector; without a hierarchy every entity is its own sector.
    Raises CapacityExceeded if a sector enters above its boundary.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    x = state.total * state.shares
    z = np.asarray(capacities, dtype=float)
    if np.any(z <= 0):
        raise ValueError("capacities must be positive")
    if hierarchy is None:
        sector_x = x
        idx = np.arange(x.size)
    else:
        idx = hierarchy.sector_index
        sector_x = np.zeros(len(hierarchy.sectors))
        np.add.at(sector_x, idx, x)
    if z.ndim == 0:
        z = np.full(sector_x.shape, float(z))
    if sector_x.shape != z.shape:
        raise ValueError("capacities must align with sectors")
    over = sector_x > z
    if np.any(over):
        raise CapacityExceeded(
            f"sector(s) {np.nonzero(over)[0].tolist()} above capacity on entry"
        )
    phi = state.mean_fitness
    factor = 1.0 - sector_x / z
    dx = dt * x * (state.fitnesses - phi) * factor[idx]
    new_x = x + dx
    if np.any(new_x < 0):
        raise NegativeShare("capacity step drives a level negative; reduce dt")
    total = float(new_x.sum())
    shares = new_x / total
    shares /= shares.sum()
    return ReplicatorState(shares=shares, fitnesses=state.fitnesses.copy(), total=total)


def _advance_shares(shares: np.ndarray, fitnesses: np.ndarray, dt: float) -> np.ndarray:
    """Euler with automatic sub-stepping while any |f - phi| dt exceeds 0.5."""
    state = ReplicatorState(shares=shares, fitnesses=fitnesses, total=1.0)
    remaining = dt
    while remaining > 1e-15:
        phi = state.mean_fitness
        peak = float(np.max(np.abs(state.fitnesses - phi)))
        step = remaining if peak * remaining <= MAX_FITNESS_STEP else MAX_FITNESS_STEP / peak
        state = step_shares(state, min(step, remaining))
        remaining -= min(step, remaining)
    return state.shares


# ---------------------------------------------------------------------------
# synthetic panel generator
# ---------------------------------------------------------------------------


@dataclass
class SyntheticPanelConfig:
    """Configuration of the synthetic firm/sector panel.

    Sector fitness follows an AR(1) Gaussian; firm employment adds small
    Gaussian idiosyncrasies on top of sector growth (headcounts stay
    positive); firm value added adds stable-distributed level noise at a
    within-sector constant scale, so it is heavy-tailed and may go negative.
    macro_growth may be a scalar or one value per transition year.
    Optional capacities z_k damp sector employment levels multiplicatively.
    """

    n_sectors: int = 20
    firms_per_sector: int = 50
    n_years: int = 25
    seed: int = 0
    fitness_rho: float = 0.6
    fitness_sigma: float = 0.04
    macro_growth: float | tuple = 0.03
    firm_alpha: float = 1.5
    firm_gamma: float = 0.4
    emp_sigma: float = 0.05
    emp_pareto: float = 1.1
    mean_firm_size: float = 200.0
    capacities: tuple | None = None

    def __post_init__(self):
        if min(self.n_sectors, self.firms_per_sector, self.n_years) < 1:
            raise ValueError("counts must be >= 1")
        if self.capacities is not None:
            caps = np.asarray(self.capacities, dtype=float)
            if np.any(caps <= 0):
                raise ValueError("capacities must be positive")

    def macro_path(self) -> np.ndarray:
        g = np.asarray(self.macro_growth, dtype=float)
        if g.ndim == 0:
            return np.full(self.n_years - 1, float(g)) if self.n_years > 1 else np.empty(0)
        if g.size != self.n_years - 1:
            raise ValueError("macro_growth path needs n_years - 1 entries")
        return g


def generate_panel(config: SyntheticPanelConfig):
    """Simulate the two-level economy; returns (firm frame, sector frame).

    Deterministic for a given seed.  Sector-level variables carry the planted
    correlation structure; firm value added is dominated by stable noise.
    """
    rng = np.random.default_rng(config.seed)
    K, J, T = config.n_sectors, config.firms_per_sector, config.n_years
    n_firms = K * J
    years = np.arange(2000, 2000 + T)
    macro = config.macro_path()

    # --- sector level ---
    sd_f = config.fitness_sigma / math.sqrt(max(1.0 - config.fitness_rho**2, 1e-9))
    fitness = np.zeros((T, K))
    fitness[0] = rng.normal(0.0, sd_f, K)
    for t in range(1, T):
        fitness[t] = config.fitness_rho * fitness[t - 1] + rng.normal(
            0.0, config.fitness_sigma, K
        )

    shares_L = np.empty((T, K))
    raw0 = 0.5 + rng.random(K)
    shares_L[0] = raw0 / raw0.sum()

    total_L = np.empty(T)
    total_L[0] = config.mean_firm_size * n_firms

    caps = None
    if config.capacities is not None:
        caps = np.asarray(config.capacities, dtype=float)
        if caps.ndim == 0:
            caps = np.full(K, float(caps))

    l_sector = np.empty((T, K))
    l_sector[0] = shares_L[0] * total_L[0]
    for t in range(1, T):
        if caps is None:
            shares_L[t] = _advance_shares(shares_L[t - 1], fitness[t], 1.0)
            total_L[t] = total_L[t - 1] * (1.0 + macro[t - 1])
            l_sector[t] = shares_L[t] * total_L[t]
        else:
            # capacity-damped level dynamics; shares follow from levels
            phi = float(np.dot(shares_L[t - 1], fitness[t]))
            factor = 1.0 - l_sector[t - 1] / caps
            if np.any(factor < 0):
                raise CapacityExceeded("sector employment above capacity")
            growth = macro[t - 1] + (fitness[t] - phi) * factor
            l_sector[t] = l_sector[t - 1] * np.maximum(1.0 + growth, 1e-9)
            total_L[t] = l_sector[t].sum()
            shares_L[t] = l_sector[t] / total_L[t]

    noise = lambda: rng.normal(0.0, _SECTOR_NOISE, (T - 1, K))  # noqa: E731
    dlog_l = np.diff(np.log(l_sector), axis=0)
    dlog_q = _PRODUCTIVITY_ON_FITNESS * fitness[1:] + noise()
    log_q = np.vstack([rng.normal(0.0, 0.25, K), dlog_q]).cumsum(axis=0) + math.log(40.0)
    q_sector = np.exp(log_q)
    y_sector = q_sector * l_sector
    dlog_y = np.diff(np.log(y_sector), axis=0)

    dlog_k = (
        _CAPITAL_ON_PRODUCTIVITY * dlog_q
        + _CAPITAL_ON_EMPLOYMENT * dlog_l
        + noise()
    )
    k_sector = np.exp(
        np.vstack([np.log(2.0 * y_sector[0]) + rng.normal(0.0, 0.1, K), dlog_k]).cumsum(axis=0)
    )
    dlog_w = dlog_l + _WAGE_ON_PRODUCTIVITY * dlog_q + noise()
    w_sector = np.exp(
        np.vstack([np.log(0.5 * y_sector[0]) + rng.normal(0.0, 0.05, K), dlog_w]).cumsum(axis=0)
    )
    wage_rate_growth = dlog_w - dlog_l
    margin = _MARGIN_ON_WAGE_RATE * wage_rate_growth + noise()
    go_sector = np.exp(
        np.vstack([np.log(y_sector[0] / 0.35), dlog_y - margin]).cumsum(axis=0)
    )
    dlog_p = _PRICE_ON_OUTPUT * dlog_y + _PRICE_ON_MARGIN * margin + noise()
    p_sector = np.exp(np.vstack([np.zeros(K), dlog_p]).cumsum(axis=0))

    sector_ids = [f"K{k + 1:02d}" for k in range(K)]
    sector_rows = {
        "entity_id": np.repeat(sector_ids, T),
        "year": np.tile(years, K),
        "sector": np.repeat(sector_ids, T),
        "l": l_sector.T.ravel(),
        "y": y_sector.T.ravel(),
        "k": k_sector.T.ravel(),
        "w": w_sector.T.ravel(),
        "go": go_sector.T.ravel(),
        "p": p_sector.T.ravel(),
    }
    sector_df = pd.DataFrame(sector_rows)
    sector_frame = PanelFrame(sector_df, Level.SECTOR, meta={"seed": config.seed})

    # --- firm level ---
    firm_ids = [f"F{i + 1:05d}" for i in range(n_firms)]
    sector_of = np.repeat(np.arange(K), J)
    provinces = np.asarray([f"P{p + 1:02d}" for p in range(30)])
    firm_province = provinces[rng.integers(0, 30, n_firms)]
    firm_type = np.asarray(FIRM_TYPES)[rng.integers(0, len(FIRM_TYPES), n_firms)]
    founding = years[0] - rng.integers(0, 30, n_firms)

    raw = (1.0 + rng.pareto(config.emp_pareto, n_firms))
    weights = np.empty((T, n_firms))
    w0 = raw.copy()
    for k in range(K):
        m = sector_of == k
        w0[m] /= w0[m].sum()
    weights[0] = w0
    for t in range(1, T):
        jitter = weights[t - 1] * np.exp(rng.normal(0.0, config.emp_sigma, n_firms))
        for k in range(K):
            m = sector_of == k
            jitter[m] /= jitter[m].sum()
        weights[t] = jitter

    l_firm = weights * l_sector[:, sector_of]
    base_y = weights * y_sector[:, sector_of]
    noise_scale = (y_sector[:, sector_of] / J) * config.firm_gamma
    stable_noise = stable_sample(
        StableParams(config.firm_alpha, 0.0, 1.0, 0.0),
        T * n_firms,
        np.random.SeedSequence([config.seed, 7]),
    ).reshape(T, n_firms)
    y_firm = base_y + noise_scale * stable_noise
    k_firm = weights * k_sector[:, sector_of] * np.exp(rng.normal(0.0, 0.05, (T, n_firms)))
    w_firm = weights * w_sector[:, sector_of] * np.exp(rng.normal(0.0, 0.05, (T, n_firms)))

    quartiles = np.nanquantile(l_firm, [0.25, 0.5, 0.75], axis=1)
    size_idx = (
        (l_firm > quartiles[0][:, None]).astype(int)
        + (l_firm > quartiles[1][:, None])
        + (l_firm > quartiles[2][:, None])
    )
    size_class = np.asarray(SIZE_LABELS)[size_idx]

    firm_rows = {
        "entity_id": np.repeat(firm_ids, T),
        "year": np.tile(years, n_firms),
        "sector": np.repeat([sector_ids[s] for s in sector_of], T),
        "province": np.repeat(firm_province, T),
        "firm_type": np.repeat(firm_type, T),
        "size_class": size_class.T.ravel(),
        "founding_year": np.repeat(founding, T),
        "a": (np.tile(years, n_firms) - np.repeat(founding, T)).astype(float),
        "l": l_firm.T.ravel(),
        "y": y_firm.T.ravel(),
        "k": k_firm.T.ravel(),
        "w": w_firm.T.ravel(),
    }
    firm_df = pd.DataFrame(firm_rows)
    firm_frame = PanelFrame(firm_df, Level.FIRM, meta={"seed": config.seed})
    return firm_frame, sector_frame
