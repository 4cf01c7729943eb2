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


@dataclass
class TowerLevel:
    """
    One level of a pi-power division tower. predicted_degree is the full-height prediction (q-1)q^(n-1) and is None
    when the law is not of full height; certified_bound is what the Newton polygon proves.
    """
    n: int
    torsion_order: int
    primitive_count: int
    certified_bound: int
    predicted_degree: int = None
    generator_bound: dict = None
    pi_generators: dict = None
    shape_checks: list = field(default_factory=list)

    @property
    def bound_divides(self):
        return self.predicted_degree is None or self.predicted_degree % self.certified_bound == 0

    def to_dict(self):
        return {
            'n': self.n,
            'torsion_order': str(self.torsion_order),
            'primitive_count': str(self.primitive_count),
            'predicted_degree': None if self.predicted_degree is None else str(self.predicted_degree),
            'certified_bound': str(self.certified_bound),
            'bound_divides': self.bound_divides,
            'generator_bound': self.generator_bound,
            'pi_generators': self.pi_generators,
            'shape_checks': self.shape_checks,
        }


@dataclass
class TowerReport:
    q: int
    height: int
    full_height: bool
    levels: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def predicted_degrees(self):
        return [level.predicted_degree for level in self.levels]

    def to_dict(self):
        return {
            'q': self.q,
            'height': self.height,
            'full_height': self.full_height,
            'levels': [level.to_dict() for level in self.levels],
            'checks': dict(self.checks),
            'passed': self.passed,
        }
