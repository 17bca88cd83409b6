import numpy as np

from ewhmpc.units import Physics
from ewhmpc.tank import TankSim, TankSimState, SimParams, EnergyBalance, CflError
from ..testbase import TestBase

class TestTankSim(TestBase):
    def test_init_states(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(330.0)
        self.assertEqual(20, s.n_nodes)
        self.assertAlmostEqual(330.0, s.mean_temp())

        s = sim.init_state_closed_loop(self.f_to_k(120.0))
        self.assertAlmostEqual(sim.ambient.t_inlet, s.node_temps[3])
        self.assertAlmostEqual(self.f_to_k(120.0), s.node_temps[4])

        s = sim.init_state_two_layer(340.0, 300.0)
        self.assertEqual(300.0, s.node_temps[0])
        self.assertEqual(340.0, s.node_temps[-1])
        self.assertEqual(10, np.sum(s.node_temps == 340.0))

    def test_read_sensors(self):
        sim = self.get_sim()
        s = TankSimState(300.0 + np.arange(20, dtype=float))
        sensors = sim.read_sensors(s)
        self.assertArrayAlmostEqual(300.0 + np.array([1, 5, 8, 11, 15, 18, 4, 14]), sensors)
        self.assertEqual(319.0, sim.outlet_temp(s))

    def test_equilibrium(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(sim.ambient.t_ambient)
        s1 = sim.sim_step(s, 0.0, 0.0, 0.0)
        self.assertArrayAlmostEqual(s.node_temps, s1.node_temps, atol=1e-12)
        self.assertEqual(1.0, s1.time)

    def test_standby_decay(self):
        sim = self.get_sim()
        t_a = sim.ambient.t_ambient
        s = sim.init_state_uniform(330.0)
        s1 = sim.sim_step(s, 0.0, 0.0, 0.0)
        factor = 1.0 - 1.0 * (1.27 / 20) / sim.node_capacity
        self.assertArrayAlmostEqual(t_a + (330.0 - t_a) * factor, s1.node_temps, atol=1e-10)

    def test_element_heating(self):
        sim = self.get_sim()
        s = TankSimState(300.0 + np.arange(20, dtype=float))
        s1 = sim.sim_step(s, 0.0, 1130.0, 0.0)
        dT = s1.node_temps - sim.sim_step(s, 0.0, 0.0, 0.0).node_temps
        self.assertAlmostEqual(1130.0 / sim.node_capacity, dT[14], places=9)
        self.assertAlmostEqual(0.0, np.sum(np.abs(np.delete(dT, 14))), places=9)

    def test_buoyancy(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(330.0)
        # Lower element heats its node above the nodes on top of it, which mix
        s1 = sim.sim_step(s, 1130.0, 0.0, 0.0)
        self.assertTrue(np.all(np.diff(s1.node_temps) >= 0))
        self.assertGreater(s1.node_temps[-1], s1.node_temps[0])

    def test_buoyancy_mixing(self):
        sim = self.get_sim()
        rng = np.random.default_rng(7)
        for _ in range(20):
            T = 300.0 + 40.0 * rng.uniform(size=20)
            M = sim.resolve_buoyancy(T)
            self.assertTrue(np.all(np.diff(M) >= 0))
            self.assertAlmostEqual(np.mean(T), np.mean(M), places=10)
            self.assertLessEqual(np.var(M), np.var(T) + 1e-12)

    def test_destratification(self):
        # Three days without draws or heating, coarse step to keep the run short
        spec = self.get_tank_spec()
        params = SimParams.from_tank_spec(spec, sim_dt=60.0, ua_total=1.27, k_axial=8.0)
        sim = TankSim(spec, params, self.get_ambient())
        s0 = sim.init_state_two_layer(340.0, 300.0)
        n = 3 * 24 * 60
        s1, temps = sim.run(s0, 0.0, 0.0, np.zeros(n))

        spread = np.max(temps, axis=1) - np.min(temps, axis=1)
        self.assertTrue(np.all(np.diff(spread) <= 1e-12))
        self.assertLess(spread[-1], spread[0])
        self.assertTrue(np.all(np.diff(temps.mean(axis=1)) <= 1e-12))
        self.assertTrue(np.all(np.diff(temps, axis=1) >= -1e-12))

    def test_draw(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(330.0)
        flow = Physics.gpm_to_m3s(3.0)
        s1 = sim.sim_step(s, 0.0, 0.0, flow)
        self.assertLess(s1.node_temps[0], 330.0)
        self.assertTrue(np.all(np.diff(s1.node_temps) >= 0))

    def test_cfl(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(330.0)
        with self.assertRaises(CflError):
            sim.sim_step(s, 0.0, 0.0, 0.02)
        with self.assertRaises(ValueError):
            sim.sim_step(s, 0.0, 0.0, -1e-5)

    def test_power_range(self):
        sim = self.get_sim()
        s = sim.init_state_uniform(330.0)
        with self.assertRaises(ValueError):
            sim.sim_step(s, 2000.0, 0.0, 0.0)
        with self.assertRaises(ValueError):
            sim.sim_step(s, 0.0, -1.0, 0.0)

    def test_state_range(self):
        with self.assertRaises(ValueError):
            TankSimState(np.full(20, 380.0))
        with self.assertRaises(ValueError):
            TankSimState(np.full(20, np.nan))

    def test_energy_balance(self):
        sim = self.get_sim()
        rng = np.random.default_rng(3)
        n = 3600
        p_lower = np.where(rng.uniform(size=n) < 0.5, 1130.0, 0.0)
        p_upper = np.where(rng.uniform(size=n) < 0.3, 1130.0, 0.0)
        flow = np.where(rng.uniform(size=n) < 0.2, Physics.gpm_to_m3s(2.0), 0.0)

        balance = EnergyBalance()
        s0 = sim.init_state_closed_loop(self.f_to_k(120.0))
        s1, temps = sim.run(s0, p_lower, p_upper, flow, balance=balance)

        self.assertEqual((n, 20), temps.shape)
        self.assertAlmostEqual(n * 1.0, s1.time)
        self.assertGreater(balance.draw_volume, 0)
        self.assertLess(balance.relative_residual(s0, s1, sim.node_volume), 1e-9)

class TestSimParams(TestBase):
    def test_from_tank_spec(self):
        p = SimParams.from_tank_spec(self.get_tank_spec(), ua_total=2.0)
        self.assertEqual(4, p.element_node_index_lower)
        self.assertEqual(14, p.element_node_index_upper)
        self.assertAlmostEqual(2.0, p.ua_total)
        self.assertAlmostEqual(self.get_tank_spec().total_volume / 20, p.node_volume)

    def test_validate(self):
        with self.assertRaises(ValueError):
            SimParams(n_nodes=5)
        with self.assertRaises(ValueError):
            SimParams(sim_dt=0.0)
        with self.assertRaises(ValueError):
            SimParams(sim_dt=5000.0)

    def test_config(self):
        spec = self.get_tank_spec()
        p = SimParams.from_config({'n_nodes': 30, 'sim_dt_s': 2.0, 'k_axial_w_per_k': 4.0}, spec)
        self.assertEqual(30, p.n_nodes)
        self.assertEqual(2.0, p.sim_dt)
        q = SimParams.from_config(p.to_config(), spec)
        self.assertEqual(p.n_nodes, q.n_nodes)
        self.assertAlmostEqual(p.ua_total, q.ua_total)
        self.assertEqual(p.k_axial, q.k_axial)
