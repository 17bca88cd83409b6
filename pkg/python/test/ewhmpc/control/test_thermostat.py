import numpy as np

from ewhmpc.units import Physics
from ewhmpc.control import Thermostat, ThermostatState, thermostat_step
from ..testbase import TestBase

class TestThermostat(TestBase):
    def get_sensors(self, lower, upper):
        s = np.full(8, Physics.f_to_k(120.0))
        s[6] = Physics.f_to_k(lower)
        s[7] = Physics.f_to_k(upper)
        return s

    def test_upper_priority(self):
        state = ThermostatState()
        cmd, state = thermostat_step(state, Physics.f_to_k(110.0), Physics.f_to_k(110.0))
        self.assertEqual(1130.0, cmd.p_upper)
        self.assertEqual(0.0, cmd.p_lower)
        self.assertTrue(state.upper_heating)
        self.assertTrue(state.lower_heating)

        # Upper satisfied, the latched lower element takes over
        cmd, state = thermostat_step(state, Physics.f_to_k(126.0), Physics.f_to_k(118.0))
        self.assertEqual(0.0, cmd.p_upper)
        self.assertEqual(1130.0, cmd.p_lower)

    def test_hysteresis(self):
        state = ThermostatState()
        cmd, state = thermostat_step(state, Physics.f_to_k(120.0), Physics.f_to_k(120.0))
        self.assertEqual(0.0, cmd.p_lower + cmd.p_upper)

        cmd, state = thermostat_step(state, Physics.f_to_k(120.0), Physics.f_to_k(114.0))
        self.assertEqual(1130.0, cmd.p_lower)

        # Within the deadband the latch holds
        cmd, state = thermostat_step(state, Physics.f_to_k(120.0), Physics.f_to_k(124.0))
        self.assertEqual(1130.0, cmd.p_lower)

        cmd, state = thermostat_step(state, Physics.f_to_k(120.0), Physics.f_to_k(125.5))
        self.assertEqual(0.0, cmd.p_lower)
        self.assertFalse(state.lower_heating)

    def test_controller(self):
        t = Thermostat(spec=self.get_tank_spec())
        self.assertEqual(30.0, t.period)
        self.assertEqual(0, t.horizon_steps)

        cmd = t.step(self.get_sensors(lower=110.0, upper=120.0), 0.0)
        self.assertEqual(1130.0, cmd.p_lower)
        self.assertEqual('on-off', cmd.mode)
        self.assertTrue(t.state.lower_heating)

        t.reset()
        self.assertFalse(t.state.lower_heating)

    def test_doubled_lower_element(self):
        t = Thermostat(spec=self.get_tank_spec().scale_lower_power(2.0))
        cmd = t.step(self.get_sensors(lower=110.0, upper=120.0), 0.0)
        self.assertEqual(2260.0, cmd.p_lower)

    def test_state_config(self):
        s = ThermostatState.from_config({'T_low_f': 110, 'T_high_f': 130, 'period_s': 60})
        self.assertAlmostEqual(Physics.f_to_k(110.0), s.T_low)
        self.assertEqual(60.0, s.period)
        with self.assertRaises(ValueError):
            ThermostatState(T_low=330.0, T_high=320.0)
