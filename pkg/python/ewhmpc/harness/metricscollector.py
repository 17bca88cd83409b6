import numpy as np

from ..units import Physics
from .runmetrics import RunMetrics

def compute_embodied_energy(volume, t_out, t_inlet):
    """
    Thermal energy of the drawn water relative to the inlet temperature, in
    kWh, from the volume drawn in each step and the outlet temperature.
    """

    volume = np.asarray(volume, dtype=float)
    t_out = np.asarray(t_out, dtype=float)
    return float(np.sum(Physics.heat_capacity(volume) * (t_out - t_inlet)) / Physics.J_PER_KWH)

def weighted_percentile(values, weights, q):
    """
    Percentile `q` (0-100) of `values` weighted by `weights`, interpolated
    between the midpoints of the cumulative weight of the sorted values.
    """

    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    mask = weights > 0
    if not np.any(mask):
        return np.nan

    v, w = values[mask], weights[mask]
    idx = np.argsort(v, kind='stable')
    v, w = v[idx], w[idx]
    cdf = (np.cumsum(w) - 0.5 * w) / np.sum(w)
    return float(np.interp(q / 100.0, cdf, v))

def count_draws(flow):
    on = np.asarray(flow) > 0
    return int(np.sum(on[1:] & ~on[:-1]) + (1 if on.size > 0 and on[0] else 0))

class MetricsCollector():
    """
    Evaluates the run metrics from the per-step records of a closed-loop
    run over the window of the final day.
    """

    def __init__(self, sim_dt, t_inlet, prices):
        self.sim_dt = sim_dt
        self.t_inlet = t_inlet
        self.prices = prices

    def get_cost(self, power, price):
        """Price-weighted electrical energy in $."""
        return float(np.sum(power * self.sim_dt / Physics.J_PER_KWH * price))

    def collect(self, start, p_lower, p_upper, flow, t_out, balance=None,
                diagnostics=None, **kwargs):
        """
        Compute the metrics from per-step arrays covering the evaluation
        window, `start` is the time of the first step.
        """

        dt = self.sim_dt
        n = len(flow)
        t = start + dt * np.arange(n)
        price = self.prices.price_at(t)
        peak = self.prices.is_peak(t)
        power = np.asarray(p_lower) + np.asarray(p_upper)
        volume = np.asarray(flow) * dt

        energy = float(np.sum(power) * dt / Physics.J_PER_KWH)
        peak_energy = float(np.sum(power[peak]) * dt / Physics.J_PER_KWH)
        cost = self.get_cost(power, price)
        embodied = compute_embodied_energy(volume, t_out, self.t_inlet)

        draw = volume > 0
        if np.any(draw):
            t_draw = np.asarray(t_out)[draw]
            w = volume[draw]
            t_mean = float(np.sum(t_draw * w) / np.sum(w))
            t_p10 = weighted_percentile(t_draw, w, 10)
            t_p90 = weighted_percentile(t_draw, w, 90)
        else:
            t_mean = t_p10 = t_p90 = np.nan

        m = RunMetrics(
            energy_kwh=energy,
            embodied_kwh=embodied,
            cost=cost,
            cost_per_kwh=cost / energy if energy > 0 else np.nan,
            cost_per_kwh_drawn=cost / embodied if embodied > 0 else np.nan,
            draw_temp_mean_k=t_mean,
            draw_temp_p10_k=t_p10,
            draw_temp_p90_k=t_p90,
            peak_energy_kwh=peak_energy,
            offpeak_energy_kwh=energy - peak_energy,
            peak_share=peak_energy / energy if energy > 0 else np.nan,
            draw_volume_gal=Physics.m3_to_gal(float(np.sum(volume))),
            n_draws=count_draws(flow),
            **kwargs)

        if balance is not None:
            m.standby_loss_kwh = balance.ambient_loss / Physics.J_PER_KWH

        if diagnostics is not None and len(diagnostics.records) > 0:
            times = diagnostics.solve_times
            m.mpc_calls = len(diagnostics.records)
            m.fallback_count = diagnostics.fallback_count
            m.solve_time_mean = float(np.mean(times))
            m.solve_time_median = float(np.median(times))
            m.solve_time_max = float(np.max(times))
        else:
            m.mpc_calls = 0
            m.fallback_count = 0

        return m
