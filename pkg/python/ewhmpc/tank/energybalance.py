import numpy as np

from ..units import Physics

class EnergyBalance():
    """
    Accumulates the energy flows of a simulation in J. Enthalpies of the
    water flows are taken relative to the inlet temperature so the inlet
    contributes nothing.
    """

    def __init__(self, orig=None):
        if not isinstance(orig, EnergyBalance):
            self.reset()
        else:
            self.electrical = orig.electrical
            self.outlet_enthalpy = orig.outlet_enthalpy
            self.ambient_loss = orig.ambient_loss
            self.draw_volume = orig.draw_volume

    def reset(self):
        self.electrical = 0.0           # Element energy input
        self.outlet_enthalpy = 0.0      # Drawn water above inlet temperature
        self.ambient_loss = 0.0         # Heat lost through the insulation
        self.draw_volume = 0.0          # m3

    def internal_energy_change(self, state0, state1, node_volume):
        return Physics.heat_capacity(node_volume) * float(np.sum(state1.node_temps - state0.node_temps))

    def residual(self, state0, state1, node_volume):
        """
        Electrical input minus outlet enthalpy, ambient losses and the change of
        internal energy between two states. Zero for a closed balance.
        """

        du = self.internal_energy_change(state0, state1, node_volume)
        return self.electrical - self.outlet_enthalpy - self.ambient_loss - du

    def relative_residual(self, state0, state1, node_volume):
        scale = max(abs(self.electrical), abs(self.outlet_enthalpy), abs(self.ambient_loss), 1.0)
        return abs(self.residual(state0, state1, node_volume)) / scale
