"""Parameter sweeps and region maps behind the figure data."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .. import optimize, thermo
from ..drive import MAX_STEPS, DriveSchedule, adiabaticity_xi, xi_to_tau
from ..errors import NonConvergenceError, ValidationError
from .tables import Table

NO_WORK = "no_work"
BELOW_CARNOT = "engine_below_carnot"
ABOVE_CARNOT = "engine_above_carnot"

OPTIMIZED_HIGHT = "optimized_highT"
FIXED_EXACT = "fixed_frequencies_exact"


@dataclass(frozen=True)
class RegionCell:
    r: float
    xi: float
    classification: str
    eta_opt: float | None = None

    def __post_init__(self):
        if (self.classification == NO_WORK) != (self.eta_opt is None):
            raise ValidationError("eta_opt must be absent exactly for no_work cells")


def classify_cell(beta_ratio, r, xi):
    """Optimized (maximum-work, high-temperature) efficiency against Carnot."""
    if not optimize.opt_extracting_highT(beta_ratio, r, xi):
        return RegionCell(r, xi, NO_WORK)
    eta = optimize.opt_eff_tls(beta_ratio, r, xi)
    cls = ABOVE_CARNOT if eta > 1.0 - beta_ratio else BELOW_CARNOT
    return RegionCell(r, xi, cls, eta)


def region_map(beta_ratio, r_grid, xi_grid):
    """Cells ordered xi-major (each xi row runs over the whole r grid)."""
    for xi in xi_grid:
        if not 0.0 <= xi < 0.5:
            raise ValidationError(f"xi grid value {xi!r} outside [0, 1/2)", field="xi")
    return [classify_cell(beta_ratio, r, xi) for xi in xi_grid for r in r_grid]


def region_table(cells, beta_ratio):
    return Table(("r", "xi", "classification", "eta_opt"),
                 [(c.r, c.xi, c.classification, c.eta_opt) for c in cells],
                 {"beta_ratio": beta_ratio, "eta_carnot": 1.0 - beta_ratio})


def no_work_boundary_r(beta_ratio, xi, r_hi=10.0, iterations=200):
    """Smallest r at which the optimized engine extracts work, by bisection.

    Returns 0.0 if it already extracts at r = 0 and ``None`` if it does not
    extract even at ``r_hi``.
    """
    if optimize.opt_extracting_highT(beta_ratio, 0.0, xi):
        return 0.0
    if not optimize.opt_extracting_highT(beta_ratio, r_hi, xi):
        return None
    lo, hi = 0.0, r_hi
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if optimize.opt_extracting_highT(beta_ratio, mid, xi):
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-15:
            break
    return hi


def efficiency_sweep(source, r_grid, xi_list, mode=OPTIMIZED_HIGHT, work_rate=False,
                     t_thermal=0.0, taus=None):
    """Efficiency table over ``r_grid`` x ``xi_list``.

    ``source`` is ``beta_ratio`` in optimized_highT mode and an
    :class:`EngineParams` (its ``r`` is overridden) in fixed_frequencies_exact
    mode. With ``work_rate=True`` (exact mode only) an extra column reports
    ``-w_net / (2 tau + t_thermal)``, tau being the stroke duration that
    realizes each xi; this is a bookkeeping heuristic, not part of the cycle
    thermodynamics. ``taus`` may map xi -> tau to skip the inverse lookup.
    """
    columns = ["r", "xi", "eta", "eta_carnot", "extracting"]
    rows = []
    meta = {"mode": mode}
    if mode == OPTIMIZED_HIGHT:
        if work_rate:
            raise ValidationError("work_rate needs fixed_frequencies_exact mode", field="work_rate")
        beta_ratio = float(source)
        meta["beta_ratio"] = beta_ratio
        for xi in xi_list:
            for r in r_grid:
                ok = optimize.opt_extracting_highT(beta_ratio, r, xi)
                eta = optimize.opt_eff_tls(beta_ratio, r, xi) if ok else None
                rows.append((r, xi, eta, 1.0 - beta_ratio, ok))
        return Table(columns, rows, meta)
    if mode != FIXED_EXACT:
        raise ValidationError(f"unknown sweep mode {mode!r}", field="mode")

    p = source
    meta.update(omega_c=p.omega_c, omega_h=p.omega_h, beta_c=p.beta_c, beta_h=p.beta_h)
    if work_rate:
        columns.append("work_rate_heuristic")
        meta["t_thermal"] = t_thermal
        taus = dict(taus or {})
        sched = DriveSchedule.from_params(p)
        for xi in xi_list:
            if xi not in taus and xi > 0:
                taus[xi] = xi_to_tau(sched, xi)
    for xi in xi_list:
        for r in r_grid:
            q = p.replace(r=r)
            ok = xi < thermo.xi_max(q)
            row = [r, xi, thermo.efficiency(q, xi) if ok else None, thermo.carnot(q), ok]
            if work_rate:
                denom = 2.0 * taus[xi] + t_thermal if xi > 0 else float("inf")
                row.append(-thermo.work_net(q, xi) / denom if ok and denom > 0 else None)
            rows.append(tuple(row))
    return Table(columns, rows, meta)


def ho_comparison(beta_ratio, r_grid):
    rows = []
    for r in r_grid:
        rows.append((r, optimize.opt_eff_tls_quasistatic(beta_ratio, r),
                     optimize.opt_eff_ho_quasistatic(beta_ratio, r), 1.0 - beta_ratio))
    return Table(("r", "eta_tls_qs", "eta_ho_qs", "eta_carnot"), rows, {"beta_ratio": beta_ratio})


def _xi_row(schedule, tau, kw):
    try:
        res = adiabaticity_xi(schedule.with_tau(tau), **kw)
        return (tau, res.xi, res.steps_used, True)
    except NonConvergenceError as exc:
        return (tau, exc.estimates[-1], kw.get("max_steps", MAX_STEPS), False)


def adiabaticity_sweep(schedule, tau_grid, workers=1, **kw):
    """Rows ``(tau, xi, steps_used, converged)``. Non-converged cells are flagged, not fatal.

    ``workers > 1`` evaluates cells on a thread pool; rows keep grid order.
    """
    for tau in tau_grid:
        if not tau >= 0:
            raise ValidationError(f"tau grid value {tau!r} is negative", field="tau")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda t: _xi_row(schedule, t, kw), tau_grid))
    else:
        rows = [_xi_row(schedule, t, kw) for t in tau_grid]
    return Table(("tau", "xi", "steps_used", "converged"), rows,
                 {"omega_c": schedule.omega_c, "omega_h": schedule.omega_h})
