import numpy as np

from ewhmpc.control import OnOffConverter, ControlCommand, to_on_off
from ..testbase import TestBase

class TestOnOffConverter(TestBase):
    def test_to_on_off(self):
        s = to_on_off(1130.0 / 3, 1130.0, 600.0, 1.0)
        self.assertEqual(600, s.size)
        self.assertEqual(200, np.sum(s > 0))
        self.assertTrue(np.all(s[:200] == 1130.0))
        self.assertTrue(np.all(s[200:] == 0.0))

    def test_rounding(self):
        c = OnOffConverter(dt=600.0, sim_dt=1.0)
        self.assertEqual(0, c.get_on_steps(0.0, 1130.0))
        self.assertEqual(600, c.get_on_steps(1130.0, 1130.0))
        self.assertEqual(1, c.get_on_steps(1130.0 * 0.51 / 600, 1130.0))
        self.assertEqual(0, c.get_on_steps(1130.0 * 0.49 / 600, 1130.0))

    def test_energy_error(self):
        c = OnOffConverter(dt=600.0, sim_dt=1.0)
        rng = np.random.default_rng(2)
        for p in rng.uniform(0, 1130.0, size=20):
            s = c.convert(p, 1130.0)
            self.assertLessEqual(abs(np.sum(s) - p * 600.0), 0.5 * 1130.0 + 1e-6)

    def test_range(self):
        c = OnOffConverter()
        with self.assertRaises(ValueError):
            c.convert(1200.0, 1130.0)
        with self.assertRaises(ValueError):
            c.convert(-5.0, 1130.0)
        with self.assertRaises(ValueError):
            OnOffConverter(dt=600.0, sim_dt=7.0)

    def test_convert_command(self):
        c = OnOffConverter(dt=600.0, sim_dt=1.0)
        cmd = c.convert_command(ControlCommand(p_lower=565.0, p_upper=0.0, fallback=True), 1130.0, 1130.0)
        self.assertEqual('on-off', cmd.mode)
        self.assertAlmostEqual(565.0, cmd.p_lower)
        self.assertEqual(0.0, cmd.p_upper)
        self.assertTrue(cmd.fallback)

        lo, up = cmd.get_power_arrays(600)
        self.assertEqual(300, np.sum(lo > 0))
        self.assertEqual(0, np.sum(up > 0))

class TestControlCommand(TestBase):
    def test_power_arrays(self):
        lo, up = ControlCommand(p_lower=100.0, p_upper=200.0).get_power_arrays(5)
        self.assertArrayAlmostEqual(np.full(5, 100.0), lo)
        self.assertArrayAlmostEqual(np.full(5, 200.0), up)

    def test_short_schedule(self):
        cmd = ControlCommand(mode='on-off', schedule_lower=np.full(3, 1130.0), schedule_upper=np.zeros(3))
        lo, _ = cmd.get_power_arrays(5)
        self.assertArrayAlmostEqual([1130.0, 1130.0, 1130.0, 0.0, 0.0], lo)

    def test_validate(self):
        with self.assertRaises(NotImplementedError):
            ControlCommand(mode='pwm')
        with self.assertRaises(ValueError):
            ControlCommand(p_lower=-1.0)
