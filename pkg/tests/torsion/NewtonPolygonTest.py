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

from pitower.errors import NoUnitCoefficient
from pitower.rings import LocalRingSpec, make_ring
from pitower.series import Series1
from pitower.torsion import NewtonPolygon, newton_polygon


class NewtonPolygonTest(unittest.TestCase):
    def test_lower_hull(self):
        polygon = NewtonPolygon.from_points([(0, 2), (1, 1), (2, 1), (3, 0)])
        self.assertEqual(polygon.vertices, ((0, 2), (1, 1), (3, 0)))
        self.assertEqual(polygon.root_valuations(), [(Fraction(1), 1), (Fraction(1, 2), 2)])
        self.assertEqual(polygon.width, 3)

    def test_collinear_points_merge(self):
        polygon = NewtonPolygon.from_points([(0, 1), (1, Fraction(1, 2)), (2, 0)])
        self.assertEqual(polygon.segments, ((Fraction(-1, 2), 2),))

    def test_polygon_of_series(self):
        ring = make_ring(LocalRingSpec.create(3))
        # 9 + 3X + X^2: both roots have valuation 1
        polygon = newton_polygon(Series1.from_ints(ring, [9, 3, 1, 5]))
        self.assertEqual(polygon.root_valuations(), [(Fraction(1), 2)])

        # zero coefficients are skipped: 3 + X^3 has three roots of valuation 1/3
        polygon = newton_polygon(Series1.from_ints(ring, [3, 0, 0, 1]))
        self.assertEqual(polygon.root_valuations(), [(Fraction(1, 3), 3)])

        with self.assertRaises(NoUnitCoefficient):
            newton_polygon(Series1.from_ints(ring, [0, 3, 9]))

    def test_document(self):
        polygon = NewtonPolygon.from_points([(0, 1), (2, 0)])
        self.assertEqual(polygon.to_dict(), {'vertices': [[0, '1'], [2, '0']], 'segments': [['-1/2', 2]]})

    def test_polygon_is_unchanged_by_unit_factors(self):
        rng = np.random.default_rng(31)
        for spec in (LocalRingSpec.create(3), LocalRingSpec.create(3, f=2, unram_poly=(-1, -1, 1))):
            ring = make_ring(spec)
            # X (27 + 9X + 3X^3 + X^5): vertices (1, 3), (2, 2) and (6, 0)
            s = Series1.from_ints(ring, [0, 27, 9, 0, 3, 0, 1, 0, 0])
            expected = newton_polygon(s)
            self.assertEqual(expected.vertices, ((1, 3), (2, 2), (6, 0)))
            for _ in range(10):
                terms = {i: ring.random_element(rng) for i in range(1, 9)}
                terms[0] = ring.random_element(rng, unit=True)
                unit = Series1.from_terms(ring, 8, terms)
                self.assertEqual(newton_polygon(s * unit), expected, str(spec))


if __name__ == '__main__':
    unittest.main()
