import numpy as np

from ..units import Physics, TankSpec, AmbientConditions
from ..util import is_monotone, pool_adjacent_violators
from .simparams import SimParams
from .tanksimstate import TankSimState

class CflError(ValueError):
    pass

class TankSim():
    """
    One-dimensional multi-node model of a stratified tank with two immersed
    elements. Each step applies plug-flow advection, axial conduction, ambient
    losses, element heat injection and instant-mix buoyancy, in this order.

    Variables
    ---------
    spec : TankSpec
        Tank geometry, ratings and sensor heights
    params : SimParams
        Simulator resolution and conductances
    ambient : AmbientConditions
        Constant ambient and inlet temperatures
    """

    def __init__(self, spec=None, params=None, ambient=None, orig=None):
        if not isinstance(orig, TankSim):
            self.spec = spec if spec is not None else TankSpec.default()
            self.params = params if params is not None else SimParams.from_tank_spec(self.spec)
            self.ambient = ambient if ambient is not None else AmbientConditions()
        else:
            self.spec = spec if spec is not None else orig.spec
            self.params = params if params is not None else SimParams(orig=orig.params)
            self.ambient = ambient if ambient is not None else orig.ambient

        self.reset()

    def reset(self):
        p = self.params
        self.node_volume = p.node_volume
        self.node_capacity = p.node_capacity
        self.node_weights = np.full(p.n_nodes, self.node_volume)
        self.sensor_nodes = self.spec.get_sensor_nodes(p.n_nodes)

        # Per-step loss coefficients
        self.loss_factor = p.sim_dt * p.ua_per_node / self.node_capacity
        self.cond_factor = p.sim_dt * p.k_axial / self.node_capacity

    #region Initial states

    def init_state_uniform(self, t, time=0.0):
        return TankSimState(np.full(self.params.n_nodes, t), time=time)

    def init_state_two_layer(self, t_hot, t_cold, hot_frac=0.5, time=0.0):
        """Nodes above `1 - hot_frac` of the height at `t_hot`, the rest at `t_cold`."""
        n = self.params.n_nodes
        k = TankSpec.node_index(1.0 - hot_frac, n)
        temps = np.full(n, t_cold)
        temps[k:] = t_hot
        return TankSimState(temps, time=time)

    def init_state_closed_loop(self, t_init, time=0.0):
        """Nodes at and above the lower element at `t_init`, below at inlet temperature."""
        temps = np.full(self.params.n_nodes, self.ambient.t_inlet)
        temps[self.params.element_node_index_lower:] = t_init
        return TankSimState(temps, time=time)

    #endregion

    def check_flow(self, flow):
        if flow < 0:
            raise ValueError('Flow rate must be non-negative.')
        f = flow * self.params.sim_dt / self.node_volume
        if f > 1.0 + 1e-12:
            raise CflError(f'Flow {flow:.3e} m3/s advects {f:.3f} node volumes per step, at most one is allowed.')
        return min(f, 1.0)

    def sim_step(self, state, p_lower, p_upper, flow, balance=None):
        """
        Advance the state by one simulation time step.

        Parameters
        ----------
        state : TankSimState
            Current state
        p_lower, p_upper : float
            Element powers in W, within [0, p_bar]
        flow : float
            Draw flow rate in m3/s
        balance : EnergyBalance
            Optional accumulator of energy flows

        Returns
        -------
        TankSimState
            State at `state.time + sim_dt`
        """

        if p_lower < 0 or p_upper < 0 \
            or p_lower > self.spec.p_bar_lower * (1 + 1e-9) \
            or p_upper > self.spec.p_bar_upper * (1 + 1e-9):
            raise ValueError(f'Element powers ({p_lower}, {p_upper}) W out of range.')

        f = self.check_flow(flow)
        dt = self.params.sim_dt
        t_a = self.ambient.t_ambient
        t_i = self.ambient.t_inlet

        T = np.array(state.node_temps, dtype=float)

        # Plug-flow advection, inlet water enters the bottom node
        if f > 0:
            t_out = T[-1]
            T[1:] = (1.0 - f) * T[1:] + f * T[:-1]
            T[0] = (1.0 - f) * T[0] + f * t_i
            if balance is not None:
                v = flow * dt
                balance.outlet_enthalpy += Physics.heat_capacity(v) * (t_out - t_i)
                balance.draw_volume += v

        # Axial conduction between adjacent nodes
        if self.cond_factor > 0:
            q = self.cond_factor * (T[1:] - T[:-1])
            T[:-1] += q
            T[1:] -= q

        # Ambient losses
        loss = self.loss_factor * (T - t_a)
        T -= loss
        if balance is not None:
            balance.ambient_loss += self.node_capacity * float(np.sum(loss))

        # Element heat injection
        if p_lower > 0:
            T[self.params.element_node_index_lower] += p_lower * dt / self.node_capacity
        if p_upper > 0:
            T[self.params.element_node_index_upper] += p_upper * dt / self.node_capacity
        if balance is not None:
            balance.electrical += (p_lower + p_upper) * dt

        # Buoyancy
        if not is_monotone(T):
            T = self.resolve_buoyancy(T)

        return TankSimState(T, time=state.time + dt)

    def resolve_buoyancy(self, temps):
        """Mix inverted layers into their volume-weighted mean."""
        return pool_adjacent_violators(temps, self.node_weights)

    def read_sensors(self, state):
        """Temperatures of the nodes containing sensors 1-8."""
        return state.node_temps[self.sensor_nodes].copy()

    def outlet_temp(self, state):
        return float(state.node_temps[-1])

    def run(self, state, p_lower, p_upper, flow, balance=None):
        """
        Run the simulator over arrays of per-step inputs, return the final state
        and the node temperatures at the beginning of every step.
        """

        n = len(flow)
        p_lower = np.broadcast_to(p_lower, (n,))
        p_upper = np.broadcast_to(p_upper, (n,))

        temps = np.empty((n, self.params.n_nodes))
        for k in range(n):
            temps[k] = state.node_temps
            state = self.sim_step(state, p_lower[k], p_upper[k], flow[k], balance=balance)

        return state, temps
