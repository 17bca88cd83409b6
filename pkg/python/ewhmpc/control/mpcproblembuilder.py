import numpy as np
from scipy import sparse

from ..units import Physics
from ..qp import VariableLayout, QpProblem

class MpcProblemBuilder():
    """
    Assembles the finite-horizon MPC problem of a control model as a sparse
    QP in scaled variables. Temperatures enter as theta = (T - T_low) / tau
    and element powers as fractions of the rated power, so that the decision
    variables are of order one. The objective is the electricity cost over
    the horizon plus the quadratic deadband penalty on one state, in $.

    The deadband penalty lam * ([T_low - T]_+^2 + beta * [T - T_high]_+^2)
    is written with two non-negative slacks per timestep, constrained by
    s_lo >= T_low - T and s_hi >= T - T_high.

    Variables
    ---------
    model : ControlModel
        Affine prediction model
    config : MpcConfig
        Horizon, deadband and penalty weights
    p_bar : array
        Rated power of each control in W
    penalty_state : int
        Index of the state the deadband penalty is applied to
    ordered : bool
        When True, the states are constrained to be non-decreasing upwards
    """

    def __init__(self, model, config, p_bar, penalty_state=0, ordered=False):
        self.model = model
        self.config = config
        self.p_bar = np.atleast_1d(np.array(p_bar, dtype=float))
        self.penalty_state = penalty_state
        self.ordered = ordered

        if self.p_bar.size != model.control_count:
            raise ValueError('One rated power is required for each control.')

        self.layout = VariableLayout(model.state_count, model.control_count, config.N)

    @property
    def labels(self):
        return self.layout.labels(self.model.STATE_LABELS, self.model.CONTROL_LABELS)

    def scale_temp(self, T):
        return (np.asarray(T, dtype=float) - self.config.T_low) / self.config.temp_scale

    def unscale_temp(self, theta):
        return np.asarray(theta) * self.config.temp_scale + self.config.T_low

    def is_penalized(self, j):
        return j > 0 or self.config.penalize_initial

    def build(self, x0, flows, prices):
        """
        Build the QP for the initial state `x0` in K, the forecast flow of each
        control interval in m3/s and the electricity prices in $/kWh.
        """

        cfg = self.config
        L = self.layout
        N, n, nu = cfg.N, self.model.state_count, self.model.control_count
        tau, T_low = cfg.temp_scale, cfg.T_low

        x0 = np.atleast_1d(np.array(x0, dtype=float))
        flows = np.asarray(flows, dtype=float)
        prices = np.asarray(prices, dtype=float)
        if x0.size != n:
            raise ValueError(f'Initial state must have {n} entries.')
        if flows.size != N or prices.size != N:
            raise ValueError(f'Forecast and price vectors must have {N} entries.')

        self.model.check_stability(float(np.max(flows)), cfg.dt_bar)

        # Objective
        P = np.zeros(L.size)
        q = np.zeros(L.size)
        for j in range(N + 1):
            if self.is_penalized(j):
                P[L.s_lo(j)] = 2.0 * cfg.lam * tau ** 2
                P[L.s_hi(j)] = 2.0 * cfg.lam * cfg.beta * tau ** 2
            if j < N:
                for k in range(nu):
                    q[L.u(j, k)] = cfg.dt / Physics.J_PER_KWH * prices[j] * self.p_bar[k]

        # Equality constraints: initial condition and dynamics
        rows, cols, vals, b_eq = [], [], [], []

        theta0 = self.scale_temp(x0)
        for k in range(n):
            rows.append(len(b_eq)); cols.append(L.x(0, k)); vals.append(1.0)
            b_eq.append(theta0[k])

        ones = np.full(n, T_low)
        for j in range(N):
            A, B, c = self.model.get_affine_interval(flows[j], cfg.dt, cfg.m)
            rhs = (A @ ones + c - ones) / tau
            BD = B * self.p_bar[None, :] / tau
            for k in range(n):
                r = len(b_eq)
                rows.append(r); cols.append(L.x(j + 1, k)); vals.append(1.0)
                for l in range(n):
                    if A[k, l] != 0:
                        rows.append(r); cols.append(L.x(j, l)); vals.append(-A[k, l])
                for l in range(nu):
                    if BD[k, l] != 0:
                        rows.append(r); cols.append(L.u(j, l)); vals.append(-BD[k, l])
                b_eq.append(rhs[k])

        A_eq = sparse.csc_matrix((vals, (rows, cols)), shape=(len(b_eq), L.size))

        # Inequality constraints: power bounds, slack definitions and ordering
        rows, cols, vals, l_in, u_in = [], [], [], [], []

        def add_row(entries, lo, hi):
            r = len(l_in)
            for col, v in entries:
                rows.append(r); cols.append(col); vals.append(v)
            l_in.append(lo)
            u_in.append(hi)

        e = self.penalty_state
        band = (cfg.T_high - cfg.T_low) / tau
        for j in range(N + 1):
            if j < N:
                for k in range(nu):
                    add_row([(L.u(j, k), 1.0)], 0.0, 1.0)
            if self.is_penalized(j):
                add_row([(L.x(j, e), 1.0), (L.s_lo(j), 1.0)], 0.0, np.inf)
                add_row([(L.s_hi(j), 1.0), (L.x(j, e), -1.0)], -band, np.inf)
                add_row([(L.s_lo(j), 1.0)], 0.0, np.inf)
                add_row([(L.s_hi(j), 1.0)], 0.0, np.inf)
            else:
                add_row([(L.s_lo(j), 1.0)], 0.0, 0.0)
                add_row([(L.s_hi(j), 1.0)], 0.0, 0.0)
            # x(0) is fixed by the initial condition, which is ordered already
            if self.ordered and j > 0:
                for k in range(n - 1):
                    add_row([(L.x(j, k + 1), 1.0), (L.x(j, k), -1.0)], 0.0, np.inf)

        A_in = sparse.csc_matrix((vals, (rows, cols)), shape=(len(l_in), L.size))

        return QpProblem(P=sparse.diags(P, format='csc'), q=q,
                         A_eq=A_eq, b_eq=np.array(b_eq),
                         A_in=A_in, l_in=np.array(l_in), u_in=np.array(u_in),
                         layout=L, labels=self.labels)

    #region Solution access

    def get_states(self, v):
        """State trajectory in K, shape (N + 1, state_count)."""
        return self.unscale_temp(self.layout.get_states(v))

    def get_controls(self, v):
        """Element powers in W, shape (N, control_count)."""
        u = np.clip(self.layout.get_controls(v), 0.0, 1.0)
        return u * self.p_bar[None, :]

    def get_first_action(self, v):
        return self.get_controls(v)[0]

    def get_penalty(self, states):
        """Deadband penalty of a state trajectory in K, in $."""
        cfg = self.config
        T = np.asarray(states)[:, self.penalty_state]
        w = np.array([1.0 if self.is_penalized(j) else 0.0 for j in range(T.shape[0])])
        lo = np.maximum(cfg.T_low - T, 0.0)
        hi = np.maximum(T - cfg.T_high, 0.0)
        return float(cfg.lam * np.sum(w * (lo ** 2 + cfg.beta * hi ** 2)))

    def shift_solution(self, v):
        """Shift a previous solution by one control interval to warm start the next solve."""
        L = self.layout
        states = L.get_states(v)
        controls = L.get_controls(v)
        slacks = L.get_slacks(v)
        states = np.concatenate([states[1:], states[-1:]])
        controls = np.concatenate([controls[1:], controls[-1:]])
        slacks = np.concatenate([slacks[1:], slacks[-1:]])
        return L.pack(states, controls, slacks)

    #endregion
