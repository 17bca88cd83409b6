import os
import numpy as np
import pandas as pd

from ..units import Physics, read_quantity
from .drawevent import DrawEvent

class DrawProfile():
    """
    Daily pattern of piecewise-constant draw events, repeated every day. The
    cumulative volume function is exact, so any resampling of the profile
    conserves the drawn volume.
    """

    BASE_PROFILE_FILE = os.path.join(os.path.dirname(__file__), 'data', 'base_profile_v1.csv')
    MIN_SCALE = 0.5
    MAX_SCALE = 2.0

    def __init__(self, events=None, orig=None):
        if not isinstance(orig, DrawProfile):
            self.events = tuple(sorted(events if events is not None else [], key=lambda e: e.start))
        else:
            self.events = orig.events

        self.validate()

    def validate(self):
        for a, b in zip(self.events[:-1], self.events[1:]):
            if a.end > b.start + 1e-9:
                raise ValueError(f'Draw at {a.start:.0f} s lasting {a.duration:.0f} s overlaps '
                                 f'the draw at {b.start:.0f} s.')
        if len(self.events) > 0 and self.events[-1].end > Physics.S_PER_DAY + 1e-9:
            raise ValueError('The last draw extends past midnight.')

    @property
    def daily_volume(self):
        return float(sum(e.volume for e in self.events))

    #region Loading

    @classmethod
    def from_csv(cls, filename):
        """
        Read an event table with unit-suffixed `start`, `duration` and `rate`
        columns, for example `start_min,duration_s,rate_gpm`.
        """

        df = pd.read_csv(filename)
        columns = df.to_dict('list')
        start = read_quantity(columns, 'start', 'time')
        duration = read_quantity(columns, 'duration', 'time')
        rate = read_quantity(columns, 'rate', 'flow')
        if start is None or duration is None or rate is None:
            raise ValueError(f'Event table `{filename}` requires start, duration and rate columns.')

        events = [DrawEvent(float(s), float(d), float(r))
                  for s, d, r in zip(np.atleast_1d(start), np.atleast_1d(duration), np.atleast_1d(rate))]
        return cls(events)

    def to_csv(self, filename):
        df = pd.DataFrame({
            'start_s': [e.start for e in self.events],
            'duration_s': [e.duration for e in self.events],
            'rate_m3s': [e.rate for e in self.events],
        })
        df.to_csv(filename, index=False)

    @classmethod
    def base(cls):
        return cls.from_csv(cls.BASE_PROFILE_FILE)

    @classmethod
    def from_config(cls, section):
        section = section or {}
        if 'profile_file' in section and section['profile_file'] is not None:
            profile = cls.from_csv(section['profile_file'])
        else:
            profile = cls.base()
        volume = read_quantity(section, 'daily_volume', 'volume')
        if volume is not None:
            profile = profile.synth_profile(volume)
        return profile

    #endregion

    def scale_durations(self, factor):
        return DrawProfile([e.scale_duration(factor) for e in self.events])

    def synth_profile(self, daily_volume):
        """
        Scale every draw duration so that the profile delivers `daily_volume`,
        keeping the start times and rates.
        """

        factor = daily_volume / self.daily_volume
        if not DrawProfile.MIN_SCALE - 1e-12 <= factor <= DrawProfile.MAX_SCALE + 1e-12:
            raise ValueError(f'Daily volume {Physics.m3_to_gal(daily_volume):.1f} gal requires a duration scale of '
                             f'{factor:.3f}, outside of [{DrawProfile.MIN_SCALE}, {DrawProfile.MAX_SCALE}].')
        return self.scale_durations(factor)

    #region Flow evaluation

    def flow_at(self, t):
        s = t % Physics.S_PER_DAY
        for e in self.events:
            if e.start <= s < e.end:
                return e.rate
        return 0.0

    def get_daily_cumulative(self, s):
        """Volume drawn between midnight and `s` seconds of the same day."""
        v = 0.0
        for e in self.events:
            v += e.rate * min(max(s - e.start, 0.0), e.duration)
        return v

    def cumulative_volume(self, t):
        """Volume drawn between time zero and `t`."""
        days = np.floor(t / Physics.S_PER_DAY)
        return days * self.daily_volume + self.get_daily_cumulative(t - days * Physics.S_PER_DAY)

    def flow_per_step(self, sim_dt, n_steps=None, start=0.0):
        """
        Average flow of each simulation step, by default for one day starting
        at `start`. The per-step volumes add up to the profile volume exactly.
        """

        if n_steps is None:
            n_steps = int(round(Physics.S_PER_DAY / sim_dt))

        t = start + sim_dt * np.arange(n_steps + 1)
        days = np.floor(t / Physics.S_PER_DAY)
        s = t - days * Physics.S_PER_DAY
        v = days * self.daily_volume
        for e in self.events:
            v = v + e.rate * np.clip(s - e.start, 0.0, e.duration)
        return np.diff(v) / sim_dt

    def hourly_means(self):
        """Mean flow of each hour of the day, in m3/s."""
        edges = Physics.S_PER_H * np.arange(25)
        v = np.array([self.get_daily_cumulative(s) for s in edges])
        return np.diff(v) / Physics.S_PER_H

    #endregion
