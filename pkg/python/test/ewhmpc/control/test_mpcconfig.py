from ewhmpc.units import Physics
from ewhmpc.control import MpcConfig
from ..testbase import TestBase

class TestMpcConfig(TestBase):
    def test_default(self):
        c = MpcConfig()
        self.assertEqual(108, c.N)
        self.assertEqual(300.0, c.dt_bar)
        self.assertAlmostEqual(Physics.f_to_k(115.0), c.T_low)

    def test_validate(self):
        with self.assertRaises(ValueError):
            MpcConfig(horizon=1000.0)
        with self.assertRaises(ValueError):
            MpcConfig(m=0)
        with self.assertRaises(ValueError):
            MpcConfig(T_low=330.0, T_high=320.0)
        with self.assertRaises(ValueError):
            MpcConfig(lam=0.0)
        with self.assertRaises(NotImplementedError):
            MpcConfig(one_node_state='sensor3')

    def test_from_config(self):
        c = MpcConfig.from_config({'dt_min': 5, 'horizon_h': 12, 'T_low_f': 110, 'lambda': 0.5,
                                   'one_node_state': 'mean2to6'})
        self.assertEqual(300.0, c.dt)
        self.assertEqual(144, c.N)
        self.assertAlmostEqual(Physics.f_to_k(110.0), c.T_low)
        self.assertEqual(0.5, c.lam)
        self.assertEqual('mean2to6', c.one_node_state)

        d = MpcConfig.from_config(c.to_config())
        self.assertEqual(c.to_config(), d.to_config())

    def test_init_from_args(self):
        c = MpcConfig()
        c.init_from_args({'mpc_dt': 300.0, 'mpc_horizon_h': 6.0, 'no_warm_start': True})
        self.assertEqual(72, c.N)
        self.assertFalse(c.warm_start)

        with self.assertRaises(ValueError):
            c.init_from_args({'mpc_dt': 7000.0})
