import pandas as pd

from ewhmpc.harness import AcceptanceCheck, RunMetrics
from ..testbase import TestBase

class TestAcceptanceCheck(TestBase):
    def get_row(self, controller, cost, volume=54.0, alpha=1.0, actuation='on-off', **kwargs):
        row = {
            'controller': controller, 'daily_volume_gal': volume, 'alpha': alpha, 'actuation': actuation,
            'status': 'ok', 'cost': cost, 'cost_per_kwh': 0.22, 'cost_per_kwh_drawn': cost / 5.0,
            'draw_temp_p10_k': self.f_to_k(116.0), 'draw_temp_p90_k': self.f_to_k(124.0),
        }
        row.update(kwargs)
        return row

    def test_check_run(self):
        check = AcceptanceCheck()
        m = RunMetrics(controller='three-node', cost_per_kwh=0.22,
                       draw_temp_p10_k=self.f_to_k(112.0), draw_temp_p90_k=self.f_to_k(128.0))
        self.assertTrue(check.check_run(m))
        self.assertEqual(['load-shifting', 'comfort'], [r['criterion'] for r in check.results])

        check = AcceptanceCheck()
        m = RunMetrics(controller='thermostat', cost_per_kwh=0.40,
                       draw_temp_p10_k=self.f_to_k(105.0), draw_temp_p90_k=self.f_to_k(124.0))
        self.assertFalse(check.check_run(m))
        self.assertEqual(['comfort'], [r['criterion'] for r in check.results])

    def test_load_shifting_fails(self):
        check = AcceptanceCheck()
        check.check_run({'controller': 'three-node', 'cost_per_kwh': 0.30,
                         'draw_temp_p10_k': self.f_to_k(118.0), 'draw_temp_p90_k': self.f_to_k(122.0)})
        self.assertFalse(check.passed)
        self.assertFalse(check.results[0]['passed'])

    def get_volume_table(self, costs=(1.00, 0.90, 0.70)):
        rows = []
        for v in [36.0, 54.0, 72.0]:
            for c, cost in zip(['thermostat', 'one-node', 'three-node'], costs):
                rows.append(self.get_row(c, cost * v / 54.0, volume=v))
        return pd.DataFrame(rows)

    def get_alpha_table(self):
        rows = []
        for a in [0.3, 0.5, 0.7, 1.0, 1.3, 1.5, 1.7]:
            p10 = 110.0 if a == 0.3 else 116.0
            rows.append(self.get_row('thermostat', 1.00, alpha=a))
            rows.append(self.get_row('one-node', 0.90, alpha=a))
            rows.append(self.get_row('three-node', 0.90 if a == 0.3 else 0.70 + 0.02 * abs(a - 1.0),
                                     alpha=a, draw_temp_p10_k=self.f_to_k(p10)))
        return pd.DataFrame(rows)

    def test_check_sweep_ordering(self):
        table = self.get_volume_table()
        check = AcceptanceCheck()
        self.assertTrue(check.check_sweep(table, axis='volume'))
        criteria = [r['criterion'] for r in check.results]
        self.assertEqual(3, criteria.count('ordering'))
        self.assertEqual(3, criteria.count('load-shifting'))
        self.assertEqual(3, criteria.count('comfort'))
        self.assertNotIn('forecast-error', criteria)

        # Too small a saving
        table = self.get_volume_table(costs=(1.00, 0.90, 0.85))
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table, axis='volume'))

    def test_check_sweep_missing_rows(self):
        table = pd.DataFrame([
            self.get_row('thermostat', 1.00),
            self.get_row('one-node', 0.90),
            self.get_row('three-node', 0.70),
        ])
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table, axis='volume'))
        failed = [r for r in check.results if not r['passed']]
        self.assertEqual(2, len(failed))
        self.assertTrue(all(r['criterion'] == 'ordering' for r in failed))
        self.assertIn('no successful rows', failed[0]['message'])

    def test_check_sweep_failed_rows(self):
        table = self.get_volume_table()
        table.loc[(table['controller'] == 'three-node') & (table['daily_volume_gal'] == 54.0), 'status'] = 'failed'
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table, axis='volume'))
        failed = [r['criterion'] for r in check.results if not r['passed']]
        self.assertEqual(['ordering', 'comfort'], failed)

    def test_check_sweep_alpha(self):
        check = AcceptanceCheck()
        self.assertTrue(check.check_sweep(self.get_alpha_table(), axis='alpha'))
        criteria = [r['criterion'] for r in check.results]
        self.assertEqual(5, criteria.count('forecast-error'))
        self.assertIn('overprediction', criteria)
        self.assertIn('underprediction', criteria)
        self.assertNotIn('ordering', criteria)

        # A grid without the underprediction point
        table = self.get_alpha_table()
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table[table['alpha'] != 0.3], axis='alpha'))
        self.assertEqual(['underprediction'], [r['criterion'] for r in check.results if not r['passed']])

    def test_check_sweep_actuation(self):
        table = pd.DataFrame([
            self.get_row('three-node', 0.70, actuation='continuous'),
            self.get_row('three-node', 0.71, actuation='on-off'),
        ])
        check = AcceptanceCheck()
        self.assertTrue(check.check_sweep(table, axis='actuation'))
        self.assertEqual(['actuation'], [r['criterion'] for r in check.results])

        table.loc[0, 'cost'] = 0.60
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table, axis='actuation'))

    def test_check_sweep_all_criteria(self):
        # Without an axis every criterion is required
        table = pd.DataFrame([
            self.get_row('three-node', 0.70, actuation='continuous'),
            self.get_row('three-node', 0.71, actuation='on-off'),
        ])
        check = AcceptanceCheck()
        self.assertFalse(check.check_sweep(table))
        self.assertEqual(set(AcceptanceCheck.CRITERIA), set(r['criterion'] for r in check.results))
