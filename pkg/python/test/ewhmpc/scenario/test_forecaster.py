import numpy as np

from ewhmpc.units import Physics
from ewhmpc.scenario import DrawEvent, DrawProfile, ForecastSpec, Forecaster, make_forecast
from ..testbase import TestBase

class TestForecaster(TestBase):
    def get_single_draw_profile(self):
        # 6 gal over 10 minutes starting at 7:00
        return DrawProfile([DrawEvent(7 * 3600.0, 600.0, Physics.gpm_to_m3s(0.6))])

    def test_hourly_mean(self):
        f = make_forecast(self.get_single_draw_profile(), ForecastSpec(), 7 * 3600.0, 6, 600.0)
        self.assertArrayAlmostEqual(np.full(6, Physics.gal_to_m3(6.0) / 3600.0), f, atol=1e-15)

        f = make_forecast(self.get_single_draw_profile(), ForecastSpec(), 6 * 3600.0, 6, 600.0)
        self.assertArrayAlmostEqual(np.zeros(6), f)

    def test_alpha(self):
        f = make_forecast(self.get_single_draw_profile(), ForecastSpec(alpha=1.5), 7 * 3600.0, 1, 600.0)
        self.assertAlmostEqual(1.5 * Physics.gal_to_m3(6.0) / 3600.0, f[0])
        with self.assertRaises(ValueError):
            ForecastSpec(alpha=0.0)
        with self.assertRaises(NotImplementedError):
            ForecastSpec(aggregation='daily')

    def test_volume_conservation(self):
        p = self.get_profile()
        fc = Forecaster(p)
        f = fc.make_forecast(600.0, 144, 600.0)
        self.assertAlmostEqual(p.daily_volume, np.sum(f) * 600.0, places=12)

        f = fc.make_forecast(0.0, 12, 7200.0)
        self.assertAlmostEqual(p.daily_volume, np.sum(f) * 7200.0, places=12)

    def test_wrap(self):
        fc = Forecaster(self.get_single_draw_profile())
        f = fc.make_forecast(23 * 3600.0, 60, 1800.0)
        self.assertEqual(60, f.size)
        # 7:00 of the next day is 16 intervals later
        self.assertAlmostEqual(Physics.gal_to_m3(6.0) / 3600.0, f[16])
        self.assertEqual(0.0, f[15])

    def test_check_interval(self):
        Forecaster.check_interval(600.0)
        Forecaster.check_interval(7200.0)
        with self.assertRaises(ValueError):
            Forecaster.check_interval(700.0)

    def test_export_csv(self):
        fc = Forecaster(self.get_profile())
        df = fc.export_csv(self.get_temp_file('forecast.csv'), 0.0, 144, 600.0)
        self.assertEqual(144, len(df))
        self.assertIn('flow_gpm', df.columns)
