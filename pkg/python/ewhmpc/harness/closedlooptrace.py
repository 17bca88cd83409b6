class ClosedLoopTrace():
    """
    Receives callbacks from a closed-loop run. Derived classes override the
    hooks they need, the base class ignores every event.
    """

    def __init__(self, id=None, outdir=None):
        self.id = id
        self.outdir = outdir

        self.reset()

    def reset(self):
        self.control_count = 0

    def on_run_start(self, config, sim, controller):
        pass

    def on_control(self, time, sensors, command):
        self.control_count += 1

    def on_log(self, time, state, sensors, p_lower, p_upper, flow, volume, cost):
        pass

    def on_run_finish(self, metrics):
        pass
