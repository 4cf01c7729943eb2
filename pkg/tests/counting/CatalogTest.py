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

from pitower import config
from pitower.counting import CatalogFit, CountSeries, DimFit, run_catalog, fit_entry, dimension_catalog_check
from pitower.errors import BudgetExceeded, CatalogViolation


class CatalogTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.fits = {fit.label: fit for fit in run_catalog()}

    def test_catalog_fits(self):
        expected = {
            'Z3^x': (1, Fraction(2, 3), 1),
            'GL2(Z3)': (4, Fraction(48, 81), 4),
            'Z9^x': (2, Fraction(8, 9), 1),
            'Z2[sqrt2]^x': (2, Fraction(1, 2), 1),
            'Z4^x': (2, Fraction(3, 4), 1),
        }
        self.assertEqual(set(self.fits), set(expected))
        for label, (d, vol, d_A) in expected.items():
            fit = self.fits[label]
            self.assertEqual((fit.d, fit.fit.vol, fit.d_A), (d, vol, d_A), label)
            self.assertTrue(fit.fit.stable, label)

    def test_dimension_identities(self):
        report = dimension_catalog_check(list(self.fits.values()))
        self.assertTrue(report['passed'])
        for entry in report['entries']:
            self.assertTrue(entry['checks']['e d_A f = d'], entry['label'])
            self.assertTrue(entry['checks']['d_A = h_r^2'], entry['label'])

        pair = next(p for p in report['pairs']
                    if p['kind'] == 'equal (ef, h_r)' and set(p['labels']) == {'Z2[sqrt2]^x', 'Z4^x'})
        self.assertTrue(pair['interleaved'])
        self.assertTrue(pair['pass'])

    def test_violation(self):
        orders = CountSeries(p=3, orders=[(1, 2), (2, 6), (3, 18)])
        bad = CatalogFit('bad', 1, 1, 1, orders, orders, DimFit(2, Fraction(2, 9), 1, True, 3),
                         DimFit(1, Fraction(2, 3), 1, True, 3))
        report = dimension_catalog_check([bad], strict=False)
        self.assertFalse(report['passed'])
        with self.assertRaises(CatalogViolation):
            dimension_catalog_check([bad])

    def test_budget(self):
        gl2 = next(entry for entry in config['catalog'] if entry['label'] == 'GL2(Z3)')
        with self.assertRaises(BudgetExceeded):
            fit_entry(gl2, budget=1000)


if __name__ == '__main__':
    unittest.main()
