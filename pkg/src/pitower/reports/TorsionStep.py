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
from fractions import Fraction

from pitower.formal import LubinTateLaw
from pitower.reports.ScenarioStep import ScenarioStep
from pitower.torsion import torsion_profile, height_factorisation_check


class TorsionStep(ScenarioStep):
    name = 'torsion'

    def __init__(self, parent_step=None, child_step=None):
        """
        Torsion profiles of levels 1..levels. For Lubin-Tate laws the primitive points of level n must all have
        valuation 1/((q-1)q^(n-1)) in w-adic units.
        """
        ScenarioStep.__init__(self, parent_step, child_step)

    def run_step(self, context):
        scenario, law, height = context['scenario'], context['law'], context['height']
        if not height.is_finite:
            return {'skipped': f'height {height}'}

        ring = law.ring
        q, p = ring.q, ring.p
        profiles = [torsion_profile(law, n) for n in range(1, scenario.levels + 1)]
        checks = {
            'orders': all(t.order == p ** (t.level * height.h) for t in profiles),
            'shapes': all(t.shape_ok for t in profiles),
        }
        if isinstance(law, LubinTateLaw):
            checks['np_slopes'] = all(
                t.root_valuations == [(Fraction(1, (q - 1) * q ** (t.level - 1)), t.primitive_degree)]
                for t in profiles)
        if scenario.levels >= 2:
            checks['height_factorisation'] = height_factorisation_check(law, 1, scenario.levels - 1)

        self.record_checks(checks)
        return {'profiles': [t.to_dict() for t in profiles]}
