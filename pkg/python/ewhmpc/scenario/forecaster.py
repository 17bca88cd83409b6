import numpy as np
import pandas as pd

from ..units import Physics
from .forecastspec import ForecastSpec

class Forecaster():
    """
    Produces flow forecasts per control interval from the hourly mean flow of
    a daily draw profile. The profile repeats every day, so forecasts past
    the end of a scenario wrap around to the next day.
    """

    def __init__(self, profile, spec=None, orig=None):
        if not isinstance(orig, Forecaster):
            self.profile = profile
            self.spec = spec if spec is not None else ForecastSpec()
        else:
            self.profile = profile if profile is not None else orig.profile
            self.spec = spec if spec is not None else orig.spec

        self.hourly = self.profile.hourly_means()
        self.hourly_cumulative = np.concatenate([[0.0], np.cumsum(self.hourly * Physics.S_PER_H)])

    def get_cumulative(self, t):
        """Volume drawn between time zero and `t` under the hourly mean flow."""
        t = np.asarray(t, dtype=float)
        days = np.floor(t / Physics.S_PER_DAY)
        s = t - days * Physics.S_PER_DAY
        h = np.minimum(np.floor(s / Physics.S_PER_H).astype(int), 23)
        return days * self.hourly_cumulative[-1] + self.hourly_cumulative[h] + self.hourly[h] * (s - h * Physics.S_PER_H)

    @staticmethod
    def check_interval(dt):
        h = Physics.S_PER_H
        if not (abs(h / dt - round(h / dt)) < 1e-9 or abs(dt / h - round(dt / h)) < 1e-9):
            raise ValueError(f'Control interval {dt} s must divide an hour or be a multiple of one.')

    def make_forecast(self, start, N, dt):
        """Mean forecast flow of each of the N intervals beginning at `start`, in m3/s."""
        Forecaster.check_interval(dt)
        t = start + dt * np.arange(N + 1)
        return self.spec.alpha * np.diff(self.get_cumulative(t)) / dt

    def export_csv(self, filename, start, N, dt):
        flow = self.make_forecast(start, N, dt)
        df = pd.DataFrame({
            'time_s': start + dt * np.arange(N),
            'flow_m3s': flow,
            'flow_gpm': Physics.m3s_to_gpm(flow),
        })
        df.to_csv(filename, index=False)
        return df

def make_forecast(profile, spec, start, N, dt):
    return Forecaster(profile, spec).make_forecast(start, N, dt)
