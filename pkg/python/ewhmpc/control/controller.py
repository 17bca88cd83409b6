from ..units import TankSpec

class Controller():
    """
    Base class of the closed-loop control strategies. The harness calls
    `step` every `period` seconds with the eight sensor readings in K,
    the simulation time, the forecast flow of the next N control intervals
    and the matching prices.
    """

    NAME = None

    def __init__(self, spec=None, orig=None):
        if not isinstance(orig, Controller):
            self.spec = spec if spec is not None else TankSpec.default()
        else:
            self.spec = spec if spec is not None else orig.spec

    @property
    def period(self):
        raise NotImplementedError()

    @property
    def horizon_steps(self):
        """Number of forecast intervals required by `step`, zero if none."""
        return 0

    def reset(self):
        pass

    def step(self, sensors, time, forecast=None, prices=None):
        raise NotImplementedError()
