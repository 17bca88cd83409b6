from dataclasses import dataclass
from typing import Optional
import numpy as np

@dataclass(frozen=True)
class ControlCommand():
    """
    Element power commands for one control interval. In `continuous` mode the
    powers are interval averages, in `on-off` mode the per-simulation-step
    schedules hold either zero or the rated power.
    """

    p_lower: float = 0.0                            # W, average over the interval
    p_upper: float = 0.0                            # W, average over the interval
    mode: str = 'continuous'
    schedule_lower: Optional[np.ndarray] = None     # W, per simulation step
    schedule_upper: Optional[np.ndarray] = None     # W, per simulation step
    fallback: bool = False

    MODES = ['continuous', 'on-off']

    def __post_init__(self):
        if self.mode not in ControlCommand.MODES:
            raise NotImplementedError(f'Actuation mode `{self.mode}` is not supported.')
        if self.p_lower < 0 or self.p_upper < 0:
            raise ValueError('Element power commands must be non-negative.')

    def get_power_arrays(self, n_steps):
        """Per-step power of the lower and upper elements over `n_steps` simulation steps."""

        if self.mode == 'on-off' and self.schedule_lower is not None:
            lo, up = self.schedule_lower[:n_steps], self.schedule_upper[:n_steps]
            if lo.size < n_steps:
                lo = np.concatenate([lo, np.zeros(n_steps - lo.size)])
                up = np.concatenate([up, np.zeros(n_steps - up.size)])
            return lo, up
        else:
            return np.full(n_steps, self.p_lower), np.full(n_steps, self.p_upper)
