#  Copyright (c) 2024. Affects AI LLC
#
#  Licensed under the Creative Common CC BY-NC-SA 4.0 International License (the "License");
#  you may not use this file except in compliance with the License. The full text of the License is
#  provided in the included LICENSE file. If this file is not available, you may obtain a copy of the
#  License at
#
#       https://creativecommons.org/licenses/by-nc-sa/4.0/deed.en
#
#  Unless required by applicable law or agreed to in writing, software distributed under the License
#  is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
#  express or implied. See the License for the specific language governing permissions and limitations
#  under the License.
import os
import unittest
from unittest import mock

import numpy as np

from pitower.counting import (MatrixGenSet, OrderSpec, closure, image_order, count_series, gl_order,
                              gl_generators, sl_generators, embed_order, unit_generators, image_order_omega,
                              omega_count_series, scalar_subgroup_check)
from pitower.config import enumeration_budget
from pitower.errors import BudgetExceeded, PrecisionTooLow, ValidationError
from pitower.rings import LocalRingSpec, make_ring

Z3 = LocalRingSpec.create(3)
Z2_SQRT2 = LocalRingSpec.create(2, eis=(-2, 0, 1))


class EnumerationTest(unittest.TestCase):
    def test_cyclic_image_orders(self):
        """
        2 is a primitive root mod 9, so it generates (Z/9)^x of order 6.
        """
        gens = MatrixGenSet(h=1, M=3, p=3, gens=[[[2]]])
        self.assertEqual(image_order(gens, 2), 6)
        self.assertEqual(count_series(gens, 3).orders, [(1, 2), (2, 6), (3, 18)])

    def test_general_linear_group(self):
        self.assertEqual(gl_order(2, 3, 1), 48)
        self.assertEqual(gl_order(2, 3, 2), 48 * 81)
        gens = gl_generators(2, 3, 2)
        self.assertEqual(image_order(gens, 1), 48)
        self.assertEqual(image_order(gens, 2), 48 * 81)

    def test_special_linear_group(self):
        self.assertEqual(image_order(sl_generators(2, 3, 1), 1), 24)

    def test_budget(self):
        gens = gl_generators(2, 3, 2)
        with self.assertRaises(BudgetExceeded):
            closure(gens.reduced(2), 2, 9, budget=100)
        with mock.patch.dict(os.environ, {'PITOWER_BUDGET': '50'}):
            self.assertEqual(enumeration_budget(), 50)
            with self.assertRaises(BudgetExceeded):
                image_order(gens, 2)
        for value in ('many', '0'):
            with mock.patch.dict(os.environ, {'PITOWER_BUDGET': value}):
                with self.assertRaises(ValidationError):
                    image_order(gens, 2)

    def test_precision_too_low(self):
        gens = MatrixGenSet(h=1, M=3, p=3, gens=[[[2]]])
        with self.assertRaises(PrecisionTooLow):
            image_order(gens, 4)

    def test_generator_validation(self):
        with self.assertRaises(ValidationError):
            MatrixGenSet(h=1, M=2, p=3, gens=[[[3]]])
        with self.assertRaises(ValidationError):
            MatrixGenSet(h=2, M=2, p=3, gens=[[[1]]])
        gens = MatrixGenSet.from_dict({'h': 2, 'M': 6, 'p': 3, 'gens': [[[1, 1], [0, 1]], [[-1, 0], [0, 1]]]})
        self.assertEqual(gens.gens[1].tolist(), [[3 ** 6 - 1, 0], [0, 1]])

    def test_conjugation_preserves_orders(self):
        gens = gl_generators(2, 3, 2)
        conjugated = gens.conjugated(np.array([[1, 2], [0, 1]]))
        self.assertEqual(count_series(conjugated, 2).orders, count_series(gens, 2).orders)

    def test_scalar_model_of_z3(self):
        gens = embed_order(OrderSpec(Z3), 4)
        self.assertEqual(len(gens.gens), 1)
        self.assertEqual(count_series(gens, 4).orders, [(1, 2), (2, 6), (3, 18), (4, 54)])

    def test_unit_generators(self):
        ring = make_ring(Z2_SQRT2.with_precision(4))
        gens = unit_generators(ring)
        self.assertIn(ring.from_int(-1), gens)
        self.assertIn(ring.one + ring.uniformizer, gens)
        self.assertTrue(all(g.is_unit() for g in gens))

    def test_omega_filtration(self):
        """
        |(O / w^n)^x| = (q-1) q^(n-1) for O = Z_2[sqrt 2], where q = 2.
        """
        spec = OrderSpec(Z2_SQRT2)
        gens = embed_order(spec, 3)
        self.assertEqual([image_order_omega(gens, spec, n) for n in range(1, 5)], [1, 2, 4, 8])
        self.assertEqual(count_series(gens, 3).orders, [(1, 2), (2, 8), (3, 32)])
        series = omega_count_series(gens, spec, 6)
        self.assertEqual(series.filtration, 'omega')
        self.assertEqual(series.orders[-1], (6, 32))
        with self.assertRaises(PrecisionTooLow):
            image_order_omega(gens, spec, 7)

    def test_scalar_subgroup(self):
        host = gl_generators(2, 3, 2)
        self.assertTrue(scalar_subgroup_check(OrderSpec(Z3, h_r=2), host))
        self.assertFalse(scalar_subgroup_check(OrderSpec(Z3, h_r=1), host))

    def test_count_series_document(self):
        series = count_series(MatrixGenSet(h=1, M=2, p=3, gens=[[[2]]]), 2)
        self.assertEqual(series.kernel_indices(), [(1, 1), (2, 3)])
        self.assertEqual(series.to_dict()['orders'], [[1, '2'], [2, '6']])
        self.assertEqual(series.to_csv(), 'n,order\n1,2\n2,6\n')


if __name__ == '__main__':
    unittest.main()
