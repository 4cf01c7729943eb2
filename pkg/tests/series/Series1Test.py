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
import unittest

import numpy as np

from pitower.errors import NonzeroConstantTerm, ShapeMismatch, NonUnit, NonUnitLinearTerm
from pitower.rings import LocalRingSpec, make_ring
from pitower.series import Series1, s_combine, s_compose, weierstrass_degree, reversion

Z3 = make_ring(LocalRingSpec.create(3))
Z9 = make_ring(LocalRingSpec.create(3, f=2, unram_poly=(-1, -1, 1)))
Z2_SQRT2 = make_ring(LocalRingSpec.create(2, eis=(-2, 0, 1)))


def random_series(ring, D, rng, linear=None):
    terms = {i: ring.random_element(rng) for i in range(1, D + 1)}
    if linear is not None:
        terms[1] = linear
    return Series1.from_terms(ring, D, terms)


class Series1Test(unittest.TestCase):
    def test_product(self):
        left = Series1.from_ints(Z3, [1, 1, 0, 0, 0])
        right = Series1.from_ints(Z3, [1, -1, 0, 0, 0])
        self.assertEqual(left * right, Series1.from_ints(Z3, [1, 0, -1, 0, 0]))
        self.assertEqual(s_combine(left, right, 'add'), Series1.from_ints(Z3, [2, 0, 0, 0, 0]))

    def test_truncation_mismatch(self):
        with self.assertRaises(ShapeMismatch):
            Series1.from_ints(Z3, [0, 1]) + Series1.from_ints(Z3, [0, 1, 1])

    def test_compose(self):
        s = Series1.from_ints(Z3, [0, 3, 0, 1, 0, 0, 0])
        identity = Series1.identity(Z3, 6)
        self.assertEqual(s.compose(identity), s)
        self.assertEqual(identity.compose(s), s)

        # (X + X^2)(X + X^2) = X + 2X^2 + 2X^3 + X^4
        g = Series1.from_ints(Z3, [0, 1, 1, 0, 0])
        self.assertEqual(s_compose(g, g), Series1.from_ints(Z3, [0, 1, 2, 2, 1]))

        with self.assertRaises(NonzeroConstantTerm):
            s.compose(Series1.from_ints(Z3, [1, 1, 0, 0, 0, 0, 0]))

    def test_inverse(self):
        s = Series1.from_ints(Z3, [1, -1, 0, 0, 0, 0])
        self.assertEqual(s.inverse(), Series1.from_ints(Z3, [1] * 6))
        with self.assertRaises(NonUnit):
            Series1.from_ints(Z3, [3, 1, 0]).inverse()

    def test_reversion(self):
        s = Series1.from_ints(Z3, [0, 1, 1, 0, 0, 0, 0])
        r = reversion(s)
        self.assertEqual(s.compose(r), Series1.identity(Z3, 6))
        self.assertEqual(r.compose(s), Series1.identity(Z3, 6))
        with self.assertRaises(NonUnitLinearTerm):
            Series1.from_ints(Z3, [0, 3, 1]).reversion()

    def test_weierstrass_degree(self):
        self.assertEqual(weierstrass_degree(Series1.from_ints(Z3, [0, 3, 6, 1, 1])), 3)
        self.assertIsNone(Series1.from_ints(Z3, [0, 3, 9]).weierstrass_degree())

    def test_derivative_and_shift(self):
        s = Series1.from_ints(Z3, [0, 0, 0, 1])
        self.assertEqual(s.derivative(), Series1.from_ints(Z3, [0, 0, 3]))
        self.assertEqual(s.shift_down(), Series1.from_ints(Z3, [0, 0, 1]))
        with self.assertRaises(NonzeroConstantTerm):
            Series1.from_ints(Z3, [1, 1]).shift_down()

    def test_scale_by_ring_element(self):
        s = Series1.from_ints(Z3, [0, 1, 2])
        self.assertEqual(s.scale(Z3.from_int(3)), Series1.from_ints(Z3, [0, 3, 6]))
        self.assertEqual(s * 3, Series1.from_ints(Z3, [0, 3, 6]))

    def test_agrees_with_respects_precision(self):
        s = Series1.from_ints(Z3, [0, 1, 2])
        t = Series1.from_ints(Z3, [0, 1, 2 + 3 ** 5])
        self.assertFalse(s.agrees_with(t))
        t.prec[2] = 5
        self.assertTrue(s.agrees_with(t))

    def test_document(self):
        s = Series1.from_ints(Z3, [0, 3, -1])
        data = s.to_dict()
        self.assertEqual(data['coeffs'][2], [str(3 ** 12 - 1)])
        self.assertEqual(Series1.from_dict(Z3, data), s)

    def test_random_composition_is_associative(self):
        rng = np.random.default_rng(21)
        for ring in (Z3, Z9, Z2_SQRT2):
            for _ in range(10):
                a, b, c = (random_series(ring, 8, rng) for _ in range(3))
                self.assertEqual(a.compose(b).compose(c), a.compose(b.compose(c)), str(ring.spec))

    def test_random_reversion_is_two_sided(self):
        rng = np.random.default_rng(22)
        for ring in (Z3, Z9, Z2_SQRT2):
            identity = Series1.identity(ring, 8)
            for _ in range(10):
                s = random_series(ring, 8, rng, linear=ring.random_element(rng, unit=True))
                r = s.reversion()
                self.assertEqual(s.compose(r), identity, str(ring.spec))
                self.assertEqual(r.compose(s), identity, str(ring.spec))


if __name__ == '__main__':
    unittest.main()
