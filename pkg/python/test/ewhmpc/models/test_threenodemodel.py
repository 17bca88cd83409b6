import numpy as np

from ewhmpc.units import Physics
from ewhmpc.models import ThreeNodeModel, ThreeNodeParams, OneNodeModel, OneNodeParams, StabilityError
from ..testbase import TestBase

class TestThreeNodeModel(TestBase):
    def test_step(self):
        model = self.get_three_node_model()
        flow = Physics.gpm_to_m3s(1.5)
        x = np.array([300.0, 320.0, 325.0])
        y1 = model.step(x, [1130.0, 0.0], flow)
        y2 = model.three_node_step(x, 1130.0, 0.0, flow)
        self.assertArrayAlmostEqual(y2, y1, atol=1e-10)

    def test_equilibrium(self):
        model = self.get_three_node_model()
        t_a = model.ambient.t_ambient
        x = np.full(3, t_a)
        self.assertArrayAlmostEqual(x, model.three_node_step(x, 0.0, 0.0, 0.0), atol=1e-10)

    def test_internal_exchange(self):
        # Without losses, conduction conserves energy
        p = ThreeNodeParams(U_l=1e-12, U_m=1e-12, U_u=1e-12)
        model = ThreeNodeModel(p, self.get_ambient())
        x = np.array([300.0, 320.0, 340.0])
        y = model.three_node_step(x, 0.0, 0.0, 0.0)
        C = np.array([p.C_l, p.C_m, p.C_u])
        self.assertAlmostEqual(np.sum(C * x), np.sum(C * y), delta=1e-3)

    def test_element_placement(self):
        model = self.get_three_node_model()
        x = np.array([320.0, 320.0, 320.0])
        d_m = model.three_node_step(x, 1000.0, 0.0, 0.0) - model.three_node_step(x, 0.0, 0.0, 0.0)
        d_u = model.three_node_step(x, 0.0, 1000.0, 0.0) - model.three_node_step(x, 0.0, 0.0, 0.0)
        self.assertArrayAlmostEqual([0.0, 300.0 * 1000.0 / model.params.C_m, 0.0], d_m, atol=1e-9)
        self.assertArrayAlmostEqual([0.0, 0.0, 300.0 * 1000.0 / model.params.C_u], d_u, atol=1e-9)

    def test_draw_cools_bottom(self):
        model = self.get_three_node_model()
        x = np.array([320.0, 325.0, 330.0])
        y0 = model.three_node_step(x, 0.0, 0.0, 0.0)
        y1 = model.three_node_step(x, 0.0, 0.0, Physics.gpm_to_m3s(2.0))
        self.assertTrue(np.all(y1 < y0))

    def test_stability(self):
        with self.assertRaises(StabilityError):
            ThreeNodeModel(self.get_three_node_params(), dt_bar=1e5)
        model = self.get_three_node_model(dt_bar=300.0)
        self.assertLessEqual(model.check_stability(Physics.gpm_to_m3s(3.0)), 1.0)

    def test_params(self):
        p = self.get_three_node_params()
        self.assertAlmostEqual(p.V_total - p.V_m - p.V_u, p.V_l)
        q = ThreeNodeParams.from_config(p.to_config())
        self.assertArrayAlmostEqual(p.to_theta(), q.to_theta())
        with self.assertRaises(ValueError):
            ThreeNodeParams(V_m=0.1, V_u=0.1, V_total=0.15)
        with self.assertRaises(ValueError):
            ThreeNodeParams(K_ml=0.0)

    def test_comparative_statics(self):
        model = self.get_three_node_model()
        x = np.array([310.0, 320.0, 330.0])
        flow = Physics.gpm_to_m3s(1.0)

        # More power never lowers any temperature
        base = model.discretize_to_control_interval(x, [500.0, 500.0], flow, 600.0, 2)
        for p in [[1000.0, 500.0], [500.0, 1000.0], [1130.0, 1130.0]]:
            y = model.discretize_to_control_interval(x, p, flow, 600.0, 2)
            self.assertTrue(np.all(y >= base - 1e-12))

        # More flow never warms the node receiving inlet water
        for f in [1.5, 2.0]:
            y = model.discretize_to_control_interval(x, [500.0, 500.0], Physics.gpm_to_m3s(f), 600.0, 2)
            self.assertLessEqual(y[0], base[0])

    def test_matches_one_node_mean(self):
        p = self.get_three_node_params()
        three = self.get_three_node_model(dt_bar=300.0)
        one = OneNodeModel(OneNodeParams(V=p.V_total, U=p.U_l + p.U_m + p.U_u), self.get_ambient(), dt_bar=300.0)
        C = np.array([p.C_l, p.C_m, p.C_u])
        t_a = self.get_ambient().t_ambient

        x3, x1 = np.full(3, 320.0), np.array([320.0])
        for _ in range(12):
            x3 = three.step(x3, [1130.0, 1130.0], 0.0)
            x1 = one.step(x1, [2260.0], 0.0)
            mean = np.sum(C * x3) / np.sum(C)
            self.assertLessEqual(abs(mean - x1[0]), 0.02 * (x1[0] - t_a))
