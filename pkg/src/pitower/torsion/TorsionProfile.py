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
from dataclasses import dataclass, field
from fractions import Fraction

from pitower.rationals import format_rational


@dataclass
class TorsionProfile:
    """
    Valuation data of the pi^n-torsion of a law. order = |F[pi^n]| is the Weierstrass degree of [pi^n];
    root_valuations describe the primitive points (roots of [pi^n] / [pi^(n-1)]) in w-adic units, with the
    p-adic values alongside.
    """
    level: int
    order: int
    wdeg: int
    primitive_degree: int
    root_valuations: list = field(default_factory=list)
    root_valuations_p: list = field(default_factory=list)
    ram_lower_bound: int = 1
    shape_ok: bool = True

    def to_dict(self):
        return {
            'level': self.level,
            'order': str(self.order),
            'wdeg': self.wdeg,
            'primitive_degree': self.primitive_degree,
            'root_valuations': [[format_rational(v), m] for v, m in self.root_valuations],
            'root_valuations_p': [[format_rational(v), m] for v, m in self.root_valuations_p],
            'ram_lower_bound': self.ram_lower_bound,
            'shape_ok': self.shape_ok,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(level=int(data['level']), order=int(data['order']), wdeg=int(data['wdeg']),
                   primitive_degree=int(data['primitive_degree']),
                   root_valuations=[(Fraction(v), int(m)) for v, m in data['root_valuations']],
                   root_valuations_p=[(Fraction(v), int(m)) for v, m in data['root_valuations_p']],
                   ram_lower_bound=int(data['ram_lower_bound']), shape_ok=bool(data['shape_ok']))
