import numpy as np

from ewhmpc.paramid import IdDataset
from .paramidtestbase import ParamIdTestBase

class TestIdDataset(ParamIdTestBase):
    def get_test_dataset(self, n=11, dt=60.0, p=1000.0):
        time = dt * np.arange(n)
        sensors = np.repeat((320.0 + 0.1 * np.arange(n))[:, None], 8, axis=1)
        power = np.full(n, p)
        power[-1] = 0.0
        return IdDataset(time=time, sensors=sensors, p_lower=power, t_ambient=294.0)

    def test_validate(self):
        d = self.get_test_dataset()
        with self.assertRaises(ValueError):
            IdDataset(time=d.time, sensors=d.sensors[:, :7], t_ambient=294.0)
        with self.assertRaises(ValueError):
            IdDataset(time=d.time[::-1], sensors=d.sensors, t_ambient=294.0)
        with self.assertRaises(ValueError):
            IdDataset(time=d.time, sensors=d.sensors, segment=[0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0], t_ambient=294.0)
        with self.assertRaises(ValueError):
            IdDataset(time=d.time, sensors=d.sensors, p_lower=d.p_lower, t_ambient=294.0,
                      regimes={0: IdDataset.AT_REST})
        with self.assertRaises(ValueError):
            IdDataset(time=d.time, sensors=d.sensors, t_ambient=294.0, regimes={0: IdDataset.HEATING})
        with self.assertRaises(ValueError):
            IdDataset(time=d.time, sensors=d.sensors, t_ambient=294.0, regimes={0: 'boiling'})

    def test_resample(self):
        d = self.get_test_dataset(n=11, dt=60.0)
        d.p_lower[:5] = 500.0
        r = d.resample(300.0)
        self.assertEqual(3, len(r))
        self.assertArrayAlmostEqual([0.0, 300.0, 600.0], r.time)
        self.assertArrayAlmostEqual([320.0, 320.5, 321.0], r.sensors[:, 0])
        self.assertArrayAlmostEqual([500.0, 1000.0, 0.0], r.p_lower)

    def test_resample_off_grid(self):
        d = self.get_test_dataset(n=11, dt=70.0)
        with self.assertRaises(ValueError):
            d.resample(300.0)

    def test_get_pairs(self):
        d = self.get_test_dataset(n=6)
        d.flow[2] = 1e-5
        self.assertEqual([0, 1, 3, 4], list(d.get_pairs()))

        e = IdDataset.concatenate([self.get_test_dataset(n=3), self.get_test_dataset(n=3)])
        self.assertEqual([0, 1, 3, 4], list(e.get_pairs(60.0)))

    def test_concatenate(self):
        a = self.get_test_dataset(n=3)
        a.regimes = {0: IdDataset.HEATING}
        b = self.get_test_dataset(n=4, p=0.0)
        b.regimes = {0: IdDataset.AT_REST}
        c = IdDataset.concatenate([a, b])
        self.assertEqual(7, len(c))
        self.assertEqual([0, 1], c.get_segment_ids())
        self.assertEqual({0: IdDataset.HEATING, 1: IdDataset.AT_REST}, c.regimes)

    def test_csv(self):
        d = self.get_one_node_dataset(n_segments=2, n_steps=5)
        d.p_lower[0] = 500.0
        d.regimes = {0: IdDataset.HEATING}
        filename = self.get_temp_file('log.csv')
        d.to_csv(filename)
        e = IdDataset.from_csv(filename)
        self.assertEqual(len(d), len(e))
        self.assertArrayAlmostEqual(d.sensors, e.sensors)
        self.assertArrayAlmostEqual(d.segment, e.segment)
        self.assertEqual(d.regimes, e.regimes)
