import numpy as np

from ..units import AmbientConditions

class StabilityError(ValueError):
    pass

class ControlModel():
    """
    Base class of the grey-box control models. Models are linear in the state
    and the controls for a fixed flow rate, and are discretized with explicit
    (forward Euler) time stepping. All right-hand sides are evaluated at the
    beginning of the step.

    Derived classes implement `get_affine_step`, which returns the matrices of
    the update x' = A x + B u + c.
    """

    STATE_LABELS = []
    CONTROL_LABELS = []

    def __init__(self, params=None, ambient=None, dt_bar=300.0, orig=None):
        if not isinstance(orig, ControlModel):
            self.params = params
            self.ambient = ambient if ambient is not None else AmbientConditions()
            self.dt_bar = dt_bar
        else:
            self.params = params if params is not None else orig.params
            self.ambient = ambient if ambient is not None else orig.ambient
            self.dt_bar = orig.dt_bar

        if not self.dt_bar > 0:
            raise ValueError('Euler time step must be positive.')

        self.check_stability(0.0)

    @property
    def state_count(self):
        return len(self.STATE_LABELS)

    @property
    def control_count(self):
        return len(self.CONTROL_LABELS)

    def get_affine_step(self, flow, dt_bar=None):
        raise NotImplementedError()

    def get_affine_interval(self, flow, dt, m):
        """
        Compose `m` Euler sub-steps of length `dt / m` with constant controls and
        flow into a single affine map over the control interval.
        """

        if m < 1:
            raise ValueError('At least one Euler sub-step is required.')

        A, B, c = self.get_affine_step(flow, dt / m)
        Am, Bm, cm = A.copy(), B.copy(), c.copy()
        for _ in range(m - 1):
            Am, Bm, cm = A @ Am, A @ Bm + B, A @ cm + c
        return Am, Bm, cm

    def step(self, state, controls, flow, dt_bar=None):
        A, B, c = self.get_affine_step(flow, dt_bar)
        return A @ np.atleast_1d(state) + B @ np.atleast_1d(controls) + c

    def discretize_to_control_interval(self, state, controls, flow, dt, m):
        """
        Apply `m` successive Euler sub-steps over a control interval of length `dt`.
        """

        if m < 1:
            raise ValueError('At least one Euler sub-step is required.')

        x = np.atleast_1d(np.array(state, dtype=float))
        for _ in range(m):
            x = self.step(x, controls, flow, dt / m)
        return x

    def spectral_radius(self, flow, dt_bar=None):
        A, _, _ = self.get_affine_step(flow, dt_bar)
        return float(np.max(np.abs(np.linalg.eigvals(A))))

    def check_stability(self, flow, dt_bar=None):
        rho = self.spectral_radius(flow, dt_bar)
        if rho > 1.0:
            dt_bar = dt_bar if dt_bar is not None else self.dt_bar
            raise StabilityError(f'Euler step of {dt_bar} s is unstable for flow {flow:.3e} m3/s '
                                 f'(spectral radius {rho:.4f}).')
        return rho
