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

from pitower.errors import NotPPower, Mismatch
from pitower.formal import (LTFrobeniusSeries, AdditiveLaw, HeightResult, lt_law, additive_law, height_of,
                            zp_height_check, divisibility_check)
from pitower.rings import LocalRingSpec, make_ring
from pitower.series import Series1


class FixedBracketLaw(AdditiveLaw):
    """
    The additive law with a prescribed [pi], for exercising the height rules on series no Lubin-Tate law produces.
    """

    def __init__(self, ring, bracket_pi):
        super().__init__(ring, bracket_pi.D)
        self._bracket_pi = bracket_pi

    def _compute_bracket(self, a):
        if a == self.pi:
            return self._bracket_pi
        return super()._compute_bracket(a)


class HeightTest(unittest.TestCase):
    def test_height_of_lubin_tate_laws(self):
        z3 = make_ring(LocalRingSpec.create(3))
        self.assertEqual(height_of(lt_law(LTFrobeniusSeries.default(z3, 9), 9)), HeightResult.finite(1))

        z4 = make_ring(LocalRingSpec.create(2, f=2, unram_poly=(1, 1, 1)))
        height = height_of(lt_law(LTFrobeniusSeries.default(z4, 4), 4))
        self.assertEqual(height, HeightResult.finite(2))
        self.assertEqual(height.pi_height(z4.f), 1)

    def test_additive_law_has_lower_bound(self):
        ring = make_ring(LocalRingSpec.create(3))
        law = additive_law(ring, 10)
        height = height_of(law)
        self.assertEqual(height, HeightResult.lower_bound(2))
        self.assertFalse(height.is_finite)
        self.assertIsNone(height.pi_height(1))
        self.assertEqual(str(height), 'LOWER_BOUND(2)')
        self.assertFalse(divisibility_check(law))
        with self.assertRaises(Mismatch):
            zp_height_check(law)

    def test_zp_height_of_ramified_laws(self):
        """
        Over O with w^2 = p the law of w X + X^p has height 1 over O and height 2 as a Z_p-module: [p] has
        Weierstrass degree p^2.
        """
        for p, D in ((2, 8), (3, 12)):
            ring = make_ring(LocalRingSpec.create(p, eis=(-p, 0, 1)))
            law = lt_law(LTFrobeniusSeries.default(ring, D), D)
            self.assertEqual(height_of(law), HeightResult.finite(1))
            self.assertEqual(zp_height_check(law), 2)
            self.assertEqual(law.bracket(p).weierstrass_degree(), p ** 2)
            self.assertTrue(divisibility_check(law))

    def test_first_unit_must_sit_at_a_power_of_p(self):
        ring = make_ring(LocalRingSpec.create(2))
        law = FixedBracketLaw(ring, Series1.from_ints(ring, [0, 2, 0, 1, 0, 0]))
        with self.assertRaises(NotPPower):
            height_of(law)

    def test_document(self):
        height = HeightResult.finite(3)
        self.assertEqual(height.to_dict(), {'kind': 'FINITE', 'h': 3})
        self.assertEqual(HeightResult.from_dict(height.to_dict()), height)


if __name__ == '__main__':
    unittest.main()
