import numpy as np

from ..units import Physics, TankSpec, read_quantity

class SimParams():
    """
    Numerical parameters of the multi-node tank simulator.

    Variables
    ---------
    n_nodes : int
        Number of equal-volume nodes, node 0 at the bottom.
    sim_dt : float
        Simulation time step in s.
    total_volume : float
        Tank volume in m3, split evenly between the nodes.
    ua_per_node : ndarray
        Ambient loss conductance of each node in W/K.
    k_axial : float
        Effective conductance between adjacent nodes in W/K.
    element_node_index_lower, element_node_index_upper : int
        Nodes receiving the element heat.
    buoyancy_mode : str
        Only `instant-mix` is supported.
    """

    MIN_NODES = 10
    BUOYANCY_MODES = ['instant-mix']

    def __init__(self, n_nodes=20, sim_dt=1.0, total_volume=None,
                 ua_per_node=None, k_axial=8.0,
                 element_node_index_lower=None, element_node_index_upper=None,
                 buoyancy_mode='instant-mix',
                 orig=None):

        if not isinstance(orig, SimParams):
            spec = TankSpec.default()
            self.n_nodes = n_nodes
            self.sim_dt = sim_dt
            self.total_volume = total_volume if total_volume is not None else spec.total_volume
            self.ua_per_node = ua_per_node if ua_per_node is not None else 1.27 / n_nodes
            self.k_axial = k_axial

            lo, up = spec.get_element_nodes(n_nodes)
            self.element_node_index_lower = element_node_index_lower if element_node_index_lower is not None else lo
            self.element_node_index_upper = element_node_index_upper if element_node_index_upper is not None else up

            self.buoyancy_mode = buoyancy_mode
        else:
            self.n_nodes = orig.n_nodes
            self.sim_dt = orig.sim_dt
            self.total_volume = orig.total_volume
            self.ua_per_node = np.copy(orig.ua_per_node)
            self.k_axial = orig.k_axial
            self.element_node_index_lower = orig.element_node_index_lower
            self.element_node_index_upper = orig.element_node_index_upper
            self.buoyancy_mode = orig.buoyancy_mode

        self.ua_per_node = np.broadcast_to(np.asarray(self.ua_per_node, dtype=float), (self.n_nodes,)).copy()

        self.validate()

    @classmethod
    def from_tank_spec(cls, spec, n_nodes=20, sim_dt=1.0, ua_total=1.27, k_axial=8.0):
        """
        Create simulator parameters for a tank, the ambient loss is split evenly
        between the nodes.
        """

        lo, up = spec.get_element_nodes(n_nodes)
        return cls(n_nodes=n_nodes, sim_dt=sim_dt,
                   total_volume=spec.total_volume,
                   ua_per_node=ua_total / n_nodes,
                   k_axial=k_axial,
                   element_node_index_lower=lo,
                   element_node_index_upper=up)

    @classmethod
    def from_config(cls, section, spec):
        section = section or {}
        n_nodes = int(section.get('n_nodes', 20))
        sim_dt = read_quantity(section, 'sim_dt', 'time', 1.0)
        k_axial = float(section.get('k_axial_w_per_k', 8.0))

        p = cls.from_tank_spec(spec, n_nodes=n_nodes, sim_dt=sim_dt,
                               ua_total=float(section.get('ua_total_w_per_k', 1.27)),
                               k_axial=k_axial)
        if 'ua_per_node_w_per_k' in section:
            p.ua_per_node = np.broadcast_to(np.asarray(section['ua_per_node_w_per_k'], dtype=float), (n_nodes,)).copy()
        p.buoyancy_mode = section.get('buoyancy_mode', p.buoyancy_mode)
        p.validate()
        return p

    def to_config(self):
        c = {
            'n_nodes': self.n_nodes,
            'sim_dt_s': float(self.sim_dt),
            'k_axial_w_per_k': float(self.k_axial),
            'buoyancy_mode': self.buoyancy_mode,
        }
        if np.all(self.ua_per_node == self.ua_per_node[0]):
            c['ua_total_w_per_k'] = float(np.sum(self.ua_per_node))
        else:
            c['ua_per_node_w_per_k'] = [float(u) for u in self.ua_per_node]
        return c

    @property
    def node_volume(self):
        return self.total_volume / self.n_nodes

    @property
    def node_capacity(self):
        return Physics.heat_capacity(self.node_volume)

    @property
    def ua_total(self):
        return float(np.sum(self.ua_per_node))

    def validate(self):
        if not self.sim_dt > 0:
            raise ValueError('Simulation time step must be positive.')
        if self.n_nodes < SimParams.MIN_NODES:
            raise ValueError(f'At least {SimParams.MIN_NODES} nodes are required.')
        if not 0 <= self.element_node_index_lower < self.element_node_index_upper < self.n_nodes:
            raise ValueError('Invalid element node indices.')
        if np.any(self.ua_per_node < 0) or self.k_axial < 0:
            raise ValueError('Conductances must be non-negative.')
        if self.buoyancy_mode not in SimParams.BUOYANCY_MODES:
            raise NotImplementedError(f'Buoyancy mode `{self.buoyancy_mode}` is not supported.')

        # Explicit conduction and loss must not overshoot
        r = self.sim_dt * (2 * self.k_axial + np.max(self.ua_per_node)) / self.node_capacity
        if r > 1:
            raise ValueError(f'Simulation time step {self.sim_dt} s is too long for the conduction scheme.')
