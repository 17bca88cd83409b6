import numpy as np

from ewhmpc.units import Physics, TankSpec, AmbientConditions, Temperature, Volume
from ..testbase import TestBase

class TestTankSpec(TestBase):
    def test_default(self):
        spec = TankSpec.default()
        self.assertAlmostEqual(Physics.gal_to_m3(50.0), spec.total_volume)
        self.assertEqual(1130.0, spec.p_bar_lower)
        self.assertEqual(8, len(spec.sensor_height_fracs))
        self.assertAlmostEqual(0.5 / 6, spec.sensor_height_fracs[0])

    def test_get_sensor_nodes(self):
        spec = TankSpec.default()
        nodes = spec.get_sensor_nodes(20)
        self.assertEqual([1, 5, 8, 11, 15, 18, 4, 14], list(nodes))
        self.assertEqual((4, 14), spec.get_element_nodes(20))

    def test_node_index(self):
        self.assertEqual(0, TankSpec.node_index(0.0, 20))
        self.assertEqual(19, TankSpec.node_index(1.0, 20))
        self.assertEqual(10, TankSpec.node_index(0.5, 20))

    def test_validate(self):
        with self.assertRaises(ValueError):
            TankSpec(lower_element_height_frac=0.8, upper_element_height_frac=0.7)
        with self.assertRaises(ValueError):
            TankSpec(total_volume=0.0)
        with self.assertRaises(ValueError):
            TankSpec(sensor_height_fracs=(0.1, 0.2))

    def test_from_config(self):
        spec = TankSpec.from_config({'total_volume_gal': 40, 'p_bar_upper_kw': 4.5})
        self.assertAlmostEqual(Physics.gal_to_m3(40.0), spec.total_volume)
        self.assertAlmostEqual(4500.0, spec.p_bar_upper)
        self.assertEqual(1130.0, spec.p_bar_lower)

        spec2 = TankSpec.from_config(spec.to_config())
        self.assertEqual(spec, spec2)

    def test_scale_lower_power(self):
        spec = TankSpec.default().scale_lower_power(2.0)
        self.assertEqual(2260.0, spec.p_bar_lower)
        self.assertEqual(1130.0, spec.p_bar_upper)

    def test_element_volume_fractions(self):
        lo, mid, up = TankSpec.default().element_volume_fractions()
        self.assertAlmostEqual(1.0, lo + mid + up)
        self.assertAlmostEqual(0.5, mid)

class TestAmbientConditions(TestBase):
    def test_default(self):
        a = AmbientConditions()
        self.assertAlmostEqual(Physics.f_to_k(70.0), a.t_ambient)
        self.assertAlmostEqual(Physics.f_to_k(68.0), a.t_inlet)

    def test_validate(self):
        with self.assertRaises(ValueError):
            AmbientConditions(t_ambient=250.0)
        with self.assertRaises(ValueError):
            AmbientConditions(t_inlet=380.0)

    def test_from_config(self):
        a = AmbientConditions.from_config({'t_ambient_c': 20.0})
        self.assertAlmostEqual(293.15, a.t_ambient)
        self.assertAlmostEqual(Physics.f_to_k(68.0), a.t_inlet)

class TestQuantity(TestBase):
    def test_round_trip(self):
        self.assertAlmostEqual(120.0, Temperature.from_f(120.0).to_f())
        self.assertAlmostEqual(np.float64(54.0), Volume.from_gal(54.0).to_gal())
