import numpy as np

from ewhmpc.qp import VariableLayout
from ..testbase import TestBase

class TestVariableLayout(TestBase):
    def test_offsets(self):
        layout = VariableLayout(1, 1, 3)
        self.assertEqual(15, layout.size)
        self.assertEqual(0, layout.x(0))
        self.assertEqual(1, layout.u(0))
        self.assertEqual(2, layout.s_lo(0))
        self.assertEqual(3, layout.s_hi(0))
        self.assertEqual(12, layout.x(3))
        self.assertEqual(14, layout.s_hi(3))
        with self.assertRaises(IndexError):
            layout.u(3)

    def test_three_node(self):
        layout = VariableLayout(3, 2, 2)
        self.assertEqual(2 * 7 + 5, layout.size)
        self.assertEqual((7, 14), layout.block(1))
        # Block 1 starts at 7 with three states ahead of the controls
        self.assertEqual(11, layout.u(1, 1))
        self.assertEqual(12, layout.s_lo(1))
        self.assertEqual(13, layout.s_hi(1))

    def test_pack(self):
        layout = VariableLayout(3, 2, 4)
        rng = np.random.default_rng(0)
        states = rng.normal(size=(5, 3))
        controls = rng.uniform(size=(4, 2))
        slacks = rng.uniform(size=(5, 2))
        v = layout.pack(states, controls, slacks)
        self.assertArrayAlmostEqual(states, layout.get_states(v))
        self.assertArrayAlmostEqual(controls, layout.get_controls(v))
        self.assertArrayAlmostEqual(slacks, layout.get_slacks(v))

    def test_labels(self):
        layout = VariableLayout(1, 1, 1)
        self.assertEqual(['T[0]', 'p[0]', 's_lo[0]', 's_hi[0]', 'T[1]', 's_lo[1]', 's_hi[1]'],
                         layout.labels(['T'], ['p']))
