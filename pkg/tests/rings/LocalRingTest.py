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
from fractions import Fraction

import numpy as np

from pitower.errors import NonPrime, ReducibleUnramPoly, NotEisenstein, SpecMismatch, NonUnit, PrecisionExhausted
from pitower.rings import LocalRingSpec, make_ring, INFTY

Z3 = LocalRingSpec.create(3)
Z9 = LocalRingSpec.create(3, f=2, unram_poly=(-1, -1, 1))
Z2_SQRT2 = LocalRingSpec.create(2, eis=(-2, 0, 1))
Z3_SQRT3 = LocalRingSpec.create(3, eis=(-3, 0, 1))


class LocalRingTest(unittest.TestCase):
    def test_integer_arithmetic(self):
        ring = make_ring(Z3)
        self.assertEqual(ring.from_int(2) * ring.from_int(5), ring.from_int(10))
        self.assertEqual(ring.from_int(7) - 9, ring.from_int(-2))
        self.assertEqual(ring.from_int(2) * ring.from_int(2).inverse(), ring.one)
        self.assertEqual(ring.from_int(-1).coords, (3 ** 12 - 1,))

    def test_ring_handles_are_shared(self):
        self.assertIs(make_ring(Z3), make_ring(LocalRingSpec.create(3)))
        self.assertEqual(make_ring(Z3).with_precision(5).N, 5)

    def test_invalid_specs(self):
        with self.assertRaises(NonPrime):
            make_ring(LocalRingSpec.create(4))
        with self.assertRaises(ReducibleUnramPoly):
            make_ring(LocalRingSpec.create(3, f=2, unram_poly=(-1, 0, 1)))
        with self.assertRaises(NotEisenstein):
            make_ring(LocalRingSpec.create(3, eis=(-9, 1)))
        with self.assertRaises(NotEisenstein):
            make_ring(LocalRingSpec.create(3, eis=(-3, 1, 1)))

    def test_unramified_multiplication(self):
        ring = make_ring(Z9)
        u = ring.u
        # u^2 = u + 1
        self.assertEqual(u * u, u + 1)
        self.assertEqual(ring.mult_matrix(u).tolist(), [[0, 1], [1, 1]])
        self.assertEqual(ring.q, 9)
        self.assertEqual(ring.degree, 2)

    def test_eisenstein_uniformizer(self):
        ring = make_ring(Z2_SQRT2)
        w = ring.uniformizer
        self.assertEqual(w * w, ring.from_int(2))
        self.assertEqual(ring.e, 2)
        self.assertEqual(w.valuation(), 1)
        self.assertEqual(ring.from_int(2).valuation(), 2)
        self.assertEqual((w * 6).valuation(), 3)
        self.assertFalse(w.is_unit())
        self.assertTrue((w + 1).is_unit())

    def test_valuations(self):
        ring = make_ring(Z3)
        self.assertEqual(ring.from_int(3).valuation(), 1)
        self.assertEqual(ring.from_int(18).valuation(), 2)
        self.assertEqual(ring.from_int(5).valuation(), 0)
        self.assertIs(ring.zero.valuation(), INFTY)
        self.assertEqual(ring.from_int(3 ** 11).valuation().value, Fraction(11))

        # the coordinate path agrees with the determinant path
        sqrt2 = make_ring(Z2_SQRT2)
        values = sqrt2.valuations([list((sqrt2.uniformizer * 4).coords), list(sqrt2.zero.coords)])
        self.assertEqual(values[0], 5)
        self.assertTrue(values[1].is_infinite)

    def test_spec_mismatch(self):
        with self.assertRaises(SpecMismatch):
            make_ring(Z3).one + make_ring(LocalRingSpec.create(5)).one

    def test_non_unit_inverse(self):
        with self.assertRaises(NonUnit):
            make_ring(Z3).from_int(6).inverse()

    def test_divide_by_uniformizer(self):
        ring = make_ring(Z3)
        self.assertEqual(ring.divide_by_uniformizer(ring.from_int(6)), ring.from_int(2))
        with self.assertRaises(PrecisionExhausted):
            ring.divide_by_uniformizer(ring.from_int(2))

        sqrt2 = make_ring(Z2_SQRT2)
        w = sqrt2.uniformizer
        x = sqrt2.from_int(5) + w
        quotient = sqrt2.divide_by_uniformizer(x * w)
        # one p-digit is consumed
        self.assertTrue(all((a - b) % 2 ** 11 == 0 for a, b in zip(quotient.coords, x.coords)))

    def test_teichmueller_lifts(self):
        ring = make_ring(Z3)
        self.assertEqual(ring.residue_generator, ring.from_int(2))
        self.assertEqual(ring.teichmueller(0), ring.one)
        self.assertEqual(ring.teichmueller(1), ring.from_int(-1))

        z5 = make_ring(LocalRingSpec.create(5))
        t = z5.teichmueller(1)
        self.assertEqual(t.coords[0] % 5, 2)
        self.assertEqual(t * t, z5.from_int(-1))

        z9 = make_ring(Z9)
        t = z9.teichmueller(1)
        self.assertEqual(t ** 8, z9.one)
        self.assertNotEqual(t ** 4, z9.one)

    def test_spec_round_trip_keeps_rational_coefficients_plain(self):
        data = Z2_SQRT2.to_dict()
        self.assertEqual(data['eis'], [-2, 0, 1])
        self.assertEqual(LocalRingSpec.from_dict(data), Z2_SQRT2)

    def test_random_arithmetic_laws(self):
        rng = np.random.default_rng(11)
        for spec in (Z3, Z9, Z2_SQRT2, Z3_SQRT3):
            ring = make_ring(spec)
            for _ in range(20):
                x, y, z = (ring.random_element(rng) for _ in range(3))
                self.assertEqual((x * y) * z, x * (y * z), str(spec))
                self.assertEqual(x * (y + z), x * y + x * z, str(spec))
                self.assertEqual(x * y, y * x, str(spec))

    def test_random_valuations_add(self):
        rng = np.random.default_rng(12)
        for spec in (Z3, Z9, Z2_SQRT2, Z3_SQRT3):
            ring = make_ring(spec)
            w = ring.uniformizer
            for _ in range(20):
                i, j = (int(k) for k in rng.integers(0, 4, size=2))
                x = w ** i * ring.random_element(rng, unit=True)
                y = w ** j * ring.random_element(rng, unit=True)
                self.assertEqual(x.valuation(), i, str(spec))
                self.assertEqual((x * y).valuation(), x.valuation() + y.valuation(), str(spec))

    def test_random_inverses_are_two_sided(self):
        rng = np.random.default_rng(13)
        for spec in (Z3, Z9, Z2_SQRT2, Z3_SQRT3):
            ring = make_ring(spec)
            for _ in range(20):
                x = ring.random_element(rng, unit=True)
                self.assertEqual(x * x.inverse(), ring.one, str(spec))
                self.assertEqual(x.inverse() * x, ring.one, str(spec))
                self.assertEqual(ring.inv(ring.inv(x)), x, str(spec))


if __name__ == '__main__':
    unittest.main()
