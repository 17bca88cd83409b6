import numpy as np
import pandas as pd

class RunMetrics():
    """
    Performance metrics of a closed-loop run, evaluated over the final day.
    Energies in kWh, costs in $, temperatures in K, times in s.
    """

    FIELDS = [
        'controller', 'daily_volume_gal', 'alpha', 'actuation',
        'energy_kwh', 'embodied_kwh', 'cost', 'cost_per_kwh', 'cost_per_kwh_drawn',
        'draw_temp_mean_k', 'draw_temp_p10_k', 'draw_temp_p90_k',
        'peak_energy_kwh', 'offpeak_energy_kwh', 'peak_share',
        'standby_loss_kwh', 'draw_volume_gal', 'n_draws',
        'mpc_calls', 'fallback_count', 'solve_time_mean', 'solve_time_median', 'solve_time_max',
        'energy_balance_residual',
    ]

    def __init__(self, orig=None, **kwargs):
        if not isinstance(orig, RunMetrics):
            for f in RunMetrics.FIELDS:
                setattr(self, f, kwargs.get(f))
        else:
            for f in RunMetrics.FIELDS:
                setattr(self, f, kwargs.get(f, getattr(orig, f)))

    def to_dict(self):
        d = {}
        for f in RunMetrics.FIELDS:
            v = getattr(self, f)
            d[f] = v.item() if isinstance(v, np.generic) else v
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: v for k, v in d.items() if k in RunMetrics.FIELDS})

    def to_dataframe(self):
        return pd.DataFrame([self.to_dict()])

    def to_csv(self, filename):
        self.to_dataframe().to_csv(filename, index=False)
