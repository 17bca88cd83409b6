import numpy as np

from ewhmpc.paramid import OneNodeRegression, RegressionSystem, OlsSolver, \
    UnderdeterminedError, RankDeficiencyError, IdDataset, build_regression_one_node, build_regression_three_node, \
    ols_solve
from .paramidtestbase import ParamIdTestBase

class TestRegression(ParamIdTestBase):
    def test_one_node_rows(self):
        d = self.get_one_node_dataset(n_segments=2, n_steps=10)
        system = build_regression_one_node(d, 300.0)
        self.assertEqual((20, 2), system.W.shape)
        self.assertEqual(['V', 'U'], system.labels)
        self.assertEqual(20, system.pair_count)

    def test_one_node_state(self):
        d = self.get_one_node_dataset(n_segments=1, n_steps=3)
        d.sensors[:, 1:6] += 1.0
        r = OneNodeRegression('mean2to6')
        self.assertArrayAlmostEqual(d.sensors[:, 6] + 1.0, r.get_temperature(d))
        with self.assertRaises(NotImplementedError):
            OneNodeRegression('sensor3')

    def test_three_node_rows(self):
        d = self.get_three_node_dataset(n_segments=1, n_steps=4)
        system = build_regression_three_node(d, 300.0, V_total=0.19)
        self.assertEqual((12, 7), system.W.shape)
        self.assertEqual(['upper', 'middle', 'lower'], system.equations)
        self.assertEqual(4, system.pair_count)
        self.assertEqual(11 * 4, np.count_nonzero(system.W))
        self.assertArrayAlmostEqual(d.p_upper[:4] * 300.0, system.z[0::3])

    def test_underdetermined(self):
        d = self.get_one_node_dataset(n_segments=1, n_steps=1)
        with self.assertRaises(UnderdeterminedError):
            build_regression_one_node(d, 300.0)

    def test_pairs_skip_flow(self):
        d = self.get_one_node_dataset(n_segments=1, n_steps=10)
        d.flow[3] = 1e-5
        system = build_regression_one_node(d, 300.0)
        self.assertEqual(9, system.pair_count)

    def test_system_validate(self):
        with self.assertRaises(ValueError):
            RegressionSystem(np.zeros((3, 2)), np.zeros(4), ['a', 'b'])
        with self.assertRaises(ValueError):
            RegressionSystem(np.zeros((4, 2)), np.zeros(4), ['a', 'b'], ['x', 'y', 'z'])

class TestOlsSolver(ParamIdTestBase):
    def test_one_node_recovery(self):
        d = self.get_one_node_dataset()
        results = ols_solve(build_regression_one_node(d, 300.0))
        p = self.get_one_node_params()
        self.assertAlmostEqual(p.V, results.get_value('V'), delta=1e-9 * p.V)
        self.assertAlmostEqual(p.U, results.get_value('U'), delta=1e-9 * p.U)
        self.assertEqual(2, results.rank)
        self.assertLess(results.rms_residuals['energy'], 1e-3)

    def test_three_node_recovery(self):
        d = self.get_three_node_dataset()
        p = self.get_three_node_params()
        results = ols_solve(build_regression_three_node(d, 300.0, V_total=p.V_total))
        self.assertArrayAlmostEqual(p.to_theta(), results.theta, rtol=1e-6)
        self.assertEqual(7, results.rank)
        self.assertEqual(['upper', 'middle', 'lower'], list(results.rms_residuals.keys()))

    def test_scale_invariance(self):
        d = self.get_one_node_dataset(power_noise=50.0)
        system = build_regression_one_node(d, 300.0)
        a = ols_solve(system)
        b = ols_solve(system.scale(1e-6))
        self.assertArrayAlmostEqual(a.theta, b.theta, rtol=1e-9)

    def test_rank_deficiency(self):
        # Every pair starts at the ambient temperature, the loss term is unobservable
        t_a = self.get_ambient().t_ambient
        rng = np.random.default_rng(1)
        datasets = []
        for s in range(5):
            p = rng.uniform(200.0, 1130.0)
            dT = p * 300.0 / self.get_one_node_params().C
            sensors = np.full((2, 8), t_a)
            sensors[1] += dT
            datasets.append(IdDataset(time=[0.0, 300.0], sensors=sensors, p_lower=[p, 0.0], t_ambient=t_a,
                                      segment=[s, s]))
        system = build_regression_one_node(IdDataset.concatenate(datasets), 300.0)

        with self.assertRaises(RankDeficiencyError) as cm:
            OlsSolver().solve(system)
        self.assertEqual(1, cm.exception.rank)
        self.assertEqual(1, len(cm.exception.directions))
        self.assertEqual(['U'], list(cm.exception.directions[0].keys()))

    def test_power_noise_convergence(self):
        # Noise in the logged power only enters the target, the error shrinks with the data
        rng = np.random.default_rng(42)
        p = self.get_one_node_params()

        def rms_error(n_segments):
            errors = []
            for _ in range(100):
                d = self.get_one_node_dataset(n_segments=n_segments, n_steps=25, power_noise=100.0, rng=rng)
                results = ols_solve(build_regression_one_node(d, 300.0))
                errors.append((results.get_value('V') - p.V) / p.V)
            return np.sqrt(np.mean(np.square(errors)))

        small, large = rms_error(2), rms_error(20)
        self.assertGreater(small, 0.0)
        self.assertGreaterEqual(small / large, 2.0)
