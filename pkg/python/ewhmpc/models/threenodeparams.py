from ..units import Physics, read_quantity

class ThreeNodeParams():
    """
    Parameters of the three-node model. Conductances in W/K, volumes in m3.
    The lower volume is not a free parameter, it is derived from the total
    tank volume.
    """

    LABELS = ['U_l', 'U_m', 'U_u', 'K_ml', 'K_um', 'V_m', 'V_u']
    CONDUCTANCES = ['U_l', 'U_m', 'U_u', 'K_ml', 'K_um']

    def __init__(self, U_l=1.15, U_m=0.092, U_u=0.662, K_ml=3.59, K_um=0.703,
                 V_m=0.0932, V_u=0.0546, V_total=Physics.gal_to_m3(50.0),
                 orig=None):

        if not isinstance(orig, ThreeNodeParams):
            self.U_l = U_l
            self.U_m = U_m
            self.U_u = U_u
            self.K_ml = K_ml
            self.K_um = K_um
            self.V_m = V_m
            self.V_u = V_u
            self.V_total = V_total
        else:
            self.U_l = orig.U_l
            self.U_m = orig.U_m
            self.U_u = orig.U_u
            self.K_ml = orig.K_ml
            self.K_um = orig.K_um
            self.V_m = orig.V_m
            self.V_u = orig.V_u
            self.V_total = orig.V_total

        self.validate()

    def validate(self):
        for name in ThreeNodeParams.CONDUCTANCES:
            if not getattr(self, name) > 0:
                raise ValueError(f'Conductance `{name}` must be positive.')
        if not (self.V_m > 0 and self.V_u > 0):
            raise ValueError('Node volumes must be positive.')
        if not self.V_l > 0:
            raise ValueError('Middle and upper volumes exceed the total tank volume.')

    @property
    def V_l(self):
        return self.V_total - self.V_m - self.V_u

    @property
    def C_l(self):
        return Physics.heat_capacity(self.V_l)

    @property
    def C_m(self):
        return Physics.heat_capacity(self.V_m)

    @property
    def C_u(self):
        return Physics.heat_capacity(self.V_u)

    @classmethod
    def from_theta(cls, theta, V_total):
        return cls(*[float(t) for t in theta], V_total=V_total)

    def to_theta(self):
        return [getattr(self, k) for k in ThreeNodeParams.LABELS]

    @classmethod
    def from_config(cls, section):
        d = cls()
        section = section or {}
        kwargs = {k: float(section.get(f'{k}_w_per_k', getattr(d, k))) for k in ThreeNodeParams.CONDUCTANCES}
        kwargs['V_m'] = read_quantity(section, 'V_m', 'volume', d.V_m)
        kwargs['V_u'] = read_quantity(section, 'V_u', 'volume', d.V_u)
        kwargs['V_total'] = read_quantity(section, 'V_total', 'volume', d.V_total)
        return cls(**kwargs)

    def to_config(self):
        c = {f'{k}_w_per_k': float(getattr(self, k)) for k in ThreeNodeParams.CONDUCTANCES}
        c['V_m_m3'] = float(self.V_m)
        c['V_u_m3'] = float(self.V_u)
        c['V_total_m3'] = float(self.V_total)
        return c
