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
import warnings

import numpy as np

from pitower.formal import LTFrobeniusSeries, lt_law
from pitower.rings import LocalRingSpec, make_ring, modular
from pitower.series import Series2


class ModularTest(unittest.TestCase):
    def test_small_moduli_stay_int64(self):
        a = modular.as_coefficients([1, 2, 3], 3 ** 12)
        self.assertEqual(a.dtype, np.int64)
        out = modular.convolve_mod(a, a, 3 ** 12)
        self.assertEqual(out.dtype, np.int64)
        self.assertEqual(out.tolist(), [1, 4, 10, 12, 9])

    def test_large_moduli_use_python_integers(self):
        modulus = 5 ** 15
        a = modular.as_coefficients([modulus - 1, 2, 0, 1], modulus)
        b = modular.as_coefficients([modulus - 1, 1], modulus)
        self.assertEqual(a.dtype, object)
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            out = modular.convolve_mod(a, b, modulus)
        # (-1 + 2X + X^3)(-1 + X) = 1 - 3X + 2X^2 - X^3 + X^4
        self.assertEqual(out.tolist(), [1, modulus - 3, 2, modulus - 1, 1])

    def test_guard_precision_construction_raises_no_warnings(self):
        ring = make_ring(LocalRingSpec.create(5))
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            law = lt_law(LTFrobeniusSeries.gm(ring, 16), 16)
        self.assertEqual(law.F, Series2.from_terms(ring, 16, {(1, 0): 1, (0, 1): 1, (1, 1): 1}))


if __name__ == '__main__':
    unittest.main()
