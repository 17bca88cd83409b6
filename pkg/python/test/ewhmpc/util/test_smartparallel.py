from ewhmpc.util import SmartParallel
from ..testbase import TestBase

def square(x):
    if x < 0:
        raise ValueError('negative')
    return x * x

def on_error(x, ex):
    return None

class TestSmartParallel(TestBase):
    def test_map_serial(self):
        with SmartParallel(parallel=False) as p:
            results = list(p.map(square, None, [1, 2, 3]))
        self.assertEqual([1, 4, 9], results)

    def test_map_parallel(self):
        with SmartParallel(parallel=True, threads=2) as p:
            results = sorted(p.map(square, None, range(6)))
        self.assertEqual([0, 1, 4, 9, 16, 25], results)

    def test_error_handler(self):
        with SmartParallel(parallel=False) as p:
            results = list(p.map(square, on_error, [2, -1]))
        self.assertEqual([4, None], results)

        with self.assertRaises(ValueError):
            with SmartParallel(parallel=False) as p:
                list(p.map(square, None, [-1]))
