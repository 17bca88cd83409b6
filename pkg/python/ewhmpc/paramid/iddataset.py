import numpy as np
import pandas as pd

from ..units import TankSpec

class IdDataset():
    """
    Logged samples used for parameter identification. Sample k holds the
    sensor temperatures at `time[k]` and the power and flow applied from
    `time[k]` until the next sample. Samples are grouped into contiguous
    segments, each tagged with its operating regime. Sample pairs never
    cross segment boundaries.
    """

    HEATING = 'heating-cycle'
    AT_REST = 'at-rest'
    REGIMES = [HEATING, AT_REST]

    def __init__(self, time=None, sensors=None, p_lower=None, p_upper=None, flow=None, t_ambient=None,
                 segment=None, regimes=None, orig=None):

        if not isinstance(orig, IdDataset):
            self.time = np.asarray(time, dtype=float)
            self.sensors = np.asarray(sensors, dtype=float)
            n = self.time.size
            self.p_lower = np.asarray(p_lower if p_lower is not None else np.zeros(n), dtype=float)
            self.p_upper = np.asarray(p_upper if p_upper is not None else np.zeros(n), dtype=float)
            self.flow = np.asarray(flow if flow is not None else np.zeros(n), dtype=float)
            self.t_ambient = np.broadcast_to(np.asarray(t_ambient, dtype=float), (n,)).copy()
            self.segment = np.asarray(segment if segment is not None else np.zeros(n), dtype=int)
            self.regimes = dict(regimes) if regimes is not None else {}
        else:
            self.time = orig.time.copy()
            self.sensors = orig.sensors.copy()
            self.p_lower = orig.p_lower.copy()
            self.p_upper = orig.p_upper.copy()
            self.flow = orig.flow.copy()
            self.t_ambient = orig.t_ambient.copy()
            self.segment = orig.segment.copy()
            self.regimes = dict(orig.regimes)

        self.validate()

    def __len__(self):
        return self.time.size

    @property
    def power(self):
        return self.p_lower + self.p_upper

    def validate(self):
        n = self.time.size
        if self.sensors.shape != (n, TankSpec.SENSOR_COUNT):
            raise ValueError(f'Sensor array must have shape ({n}, {TankSpec.SENSOR_COUNT}).')
        for name in ['p_lower', 'p_upper', 'flow', 'segment']:
            if getattr(self, name).shape != (n,):
                raise ValueError(f'Column `{name}` must have {n} samples.')
        if np.any(self.flow < 0) or np.any(self.p_lower < 0) or np.any(self.p_upper < 0):
            raise ValueError('Powers and flows must be non-negative.')

        for s in self.get_segment_ids():
            idx = np.where(self.segment == s)[0]
            if np.any(np.diff(idx) != 1):
                raise ValueError(f'Segment {s} is not contiguous.')
            if np.any(np.diff(self.time[idx]) <= 0):
                raise ValueError(f'Timestamps of segment {s} are not strictly increasing.')
            regime = self.regimes.get(s)
            if regime is not None:
                if regime not in IdDataset.REGIMES:
                    raise ValueError(f'Unknown regime `{regime}`.')
                # The last sample of a segment carries no interval
                p = self.power[idx[:-1]]
                if regime == IdDataset.HEATING and not np.any(p > 0):
                    raise ValueError(f'Heating segment {s} has no power input.')
                if regime == IdDataset.AT_REST and np.any(p > 0):
                    raise ValueError(f'At-rest segment {s} has power input.')

    def get_segment_ids(self):
        return list(dict.fromkeys(self.segment.tolist()))

    @staticmethod
    def concatenate(datasets):
        """Join datasets, each segment keeps its own identity."""

        parts = {k: [] for k in ['time', 'sensors', 'p_lower', 'p_upper', 'flow', 't_ambient', 'segment']}
        regimes = {}
        offset = 0
        for d in datasets:
            ids = d.get_segment_ids()
            remap = {s: offset + i for i, s in enumerate(ids)}
            for k in parts:
                if k == 'segment':
                    parts[k].append(np.array([remap[s] for s in d.segment], dtype=int))
                else:
                    parts[k].append(getattr(d, k))
            for s, r in d.regimes.items():
                regimes[remap[s]] = r
            offset += len(ids)

        return IdDataset(time=np.concatenate(parts['time']),
                         sensors=np.concatenate(parts['sensors']),
                         p_lower=np.concatenate(parts['p_lower']),
                         p_upper=np.concatenate(parts['p_upper']),
                         flow=np.concatenate(parts['flow']),
                         t_ambient=np.concatenate(parts['t_ambient']),
                         segment=np.concatenate(parts['segment']),
                         regimes=regimes)

    def resample(self, dt_bar):
        """
        Sample the temperatures every `dt_bar` seconds within each segment,
        starting at the first sample of the segment. Powers and flows are
        averaged over each resampled interval, so that the applied energy and
        volume are preserved. Trailing partial intervals are dropped.
        """

        keep = []
        p_lower, p_upper, flow = [], [], []
        for s in self.get_segment_ids():
            idx = np.where(self.segment == s)[0]
            t = self.time[idx]
            targets = t[0] + dt_bar * np.arange(int(np.floor((t[-1] - t[0]) / dt_bar + 1e-9)) + 1)
            pos = np.searchsorted(t, targets - 1e-9 * dt_bar)
            if np.any(pos >= t.size) or np.any(np.abs(t[np.minimum(pos, t.size - 1)] - targets) > 1e-6 * dt_bar):
                raise ValueError(f'Segment {s} has no samples on the {dt_bar} s grid.')
            keep.append(idx[pos])

            # Mean of the per-sample inputs weighted by their interval lengths
            w = np.diff(t)
            for k in range(pos.size):
                if k < pos.size - 1:
                    a, b = pos[k], pos[k + 1]
                    ww = w[a:b]
                    p_lower.append(np.sum(self.p_lower[idx[a:b]] * ww) / np.sum(ww))
                    p_upper.append(np.sum(self.p_upper[idx[a:b]] * ww) / np.sum(ww))
                    flow.append(np.sum(self.flow[idx[a:b]] * ww) / np.sum(ww))
                else:
                    p_lower.append(0.0)
                    p_upper.append(0.0)
                    flow.append(0.0)

        keep = np.concatenate(keep)
        return IdDataset(time=self.time[keep], sensors=self.sensors[keep],
                         p_lower=np.array(p_lower), p_upper=np.array(p_upper), flow=np.array(flow),
                         t_ambient=self.t_ambient[keep], segment=self.segment[keep],
                         regimes=self.regimes)

    def get_pairs(self, dt_bar=None):
        """
        Index pairs (k, k + 1) of consecutive samples within a segment that
        carry no flow. With `dt_bar`, only pairs spaced by `dt_bar` are kept.
        """

        pairs = []
        for k in range(self.time.size - 1):
            if self.segment[k] != self.segment[k + 1] or self.flow[k] > 0:
                continue
            if dt_bar is not None and abs(self.time[k + 1] - self.time[k] - dt_bar) > 1e-6 * dt_bar:
                continue
            pairs.append(k)
        return np.array(pairs, dtype=int)

    #region CSV

    def to_dataframe(self):
        df = pd.DataFrame({'time_s': self.time})
        for i in range(TankSpec.SENSOR_COUNT):
            df[f'sensor_{i + 1}_k'] = self.sensors[:, i]
        df['p_lower_w'] = self.p_lower
        df['p_upper_w'] = self.p_upper
        df['flow_m3s'] = self.flow
        df['t_ambient_k'] = self.t_ambient
        df['segment'] = self.segment
        df['regime'] = [self.regimes.get(s, '') for s in self.segment]
        return df

    def to_csv(self, filename):
        self.to_dataframe().to_csv(filename, index=False)

    @classmethod
    def from_csv(cls, filename, t_ambient=None):
        """
        Read a trajectory log. Logs without segment columns form a single
        segment, logs without an ambient column require `t_ambient`.
        """

        df = pd.read_csv(filename)
        sensors = np.stack([df[f'sensor_{i + 1}_k'].values for i in range(TankSpec.SENSOR_COUNT)], axis=1)
        if 't_ambient_k' in df.columns:
            t_a = df['t_ambient_k'].values
        elif t_ambient is not None:
            t_a = t_ambient
        else:
            raise ValueError(f'Log `{filename}` has no ambient temperature column.')

        segment = df['segment'].values if 'segment' in df.columns else None
        regimes = None
        if 'regime' in df.columns and segment is not None:
            regimes = {int(s): r for s, r in zip(segment, df['regime'].fillna('').values) if r}

        return cls(time=df['time_s'].values, sensors=sensors,
                   p_lower=df['p_lower_w'].values, p_upper=df['p_upper_w'].values,
                   flow=df['flow_m3s'].values, t_ambient=t_a,
                   segment=segment, regimes=regimes)

    #endregion
