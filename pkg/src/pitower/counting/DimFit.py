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
from dataclasses import dataclass
from fractions import Fraction

from pitower.rationals import format_rational, parse_rational


@dataclass(frozen=True)
class DimFit:
    """
    The fitted volume law |I_n| = vol * base^(n*d) for n >= n0. base is p for the p-adic filtration and q = p^f
    for the w-adic one. stable is False when no two consecutive ratios agreed; d then comes from the last ratio.
    """
    d: int
    vol: Fraction
    n0: int
    stable: bool
    base: int

    def to_dict(self):
        return {'d': self.d, 'vol': format_rational(self.vol), 'n0': self.n0, 'stable': self.stable,
                'base': self.base}

    @classmethod
    def from_dict(cls, data):
        return cls(int(data['d']), parse_rational(data['vol']), int(data['n0']), bool(data['stable']),
                   int(data['base']))
