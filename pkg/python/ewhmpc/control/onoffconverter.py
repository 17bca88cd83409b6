import numpy as np

from .controlcommand import ControlCommand

class OnOffConverter():
    """
    Converts average element powers into front-loaded on/off schedules at the
    simulator resolution. The element runs at its rated power for the first
    round(p / p_bar * dt / sim_dt) simulation steps of the interval.
    """

    def __init__(self, dt=600.0, sim_dt=1.0, orig=None):
        if not isinstance(orig, OnOffConverter):
            self.dt = dt
            self.sim_dt = sim_dt
        else:
            self.dt = orig.dt
            self.sim_dt = orig.sim_dt

        self.n_steps = int(round(self.dt / self.sim_dt))
        if abs(self.n_steps * self.sim_dt - self.dt) > 1e-9 * self.dt:
            raise ValueError('Control interval must be a multiple of the simulation step.')

    def get_on_steps(self, avg_power, p_bar):
        if avg_power < -1e-9 * p_bar or avg_power > p_bar * (1 + 1e-9):
            raise ValueError(f'Average power {avg_power} W is outside of [0, {p_bar}] W.')
        frac = min(max(avg_power / p_bar, 0.0), 1.0)
        return int(np.floor(frac * self.n_steps + 0.5))

    def convert(self, avg_power, p_bar):
        """Per-step power schedule, in W, over the control interval."""
        schedule = np.zeros(self.n_steps)
        schedule[:self.get_on_steps(avg_power, p_bar)] = p_bar
        return schedule

    def convert_command(self, command, p_bar_lower, p_bar_upper):
        lo = self.convert(command.p_lower, p_bar_lower)
        up = self.convert(command.p_upper, p_bar_upper)
        return ControlCommand(p_lower=float(np.mean(lo)), p_upper=float(np.mean(up)),
                              mode='on-off', schedule_lower=lo, schedule_upper=up,
                              fallback=command.fallback)

def to_on_off(avg_power, p_bar, dt, sim_dt):
    return OnOffConverter(dt=dt, sim_dt=sim_dt).convert(avg_power, p_bar)
