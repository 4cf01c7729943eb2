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
import logging

from pitower.counting import OrderSpec, embed_order, count_series, omega_count_series
from pitower.reports.ScenarioStep import ScenarioStep

logger = logging.getLogger('CountStep')
logger.level = logging.DEBUG


class CountStep(ScenarioStep):
    name = 'count'

    def __init__(self, parent_step=None, child_step=None):
        """
        Counts the scalar model O^x in GL_(ef)(Z_p), the image of Galois in the full-height case, along both the
        p-adic and the w-adic filtration, and compares the w-adic orders |(O/w^n)^x| with the degrees the tower
        predicted.
        """
        ScenarioStep.__init__(self, parent_step, child_step)

    def run_step(self, context):
        scenario, ring = context['scenario'], context['ring']
        n_max = scenario.nmax
        spec = OrderSpec(ring.spec.with_precision(n_max), h_r=1, label=f'{scenario.name} scalar model')
        gens = embed_order(spec, n_max)
        series = count_series(gens, n_max)
        omega_series = omega_count_series(gens, spec, spec.e * n_max)
        context['count'] = {'spec': spec, 'gens': gens, 'series': series, 'omega_series': omega_series}

        result = {'label': spec.label, 'h': spec.h, 'series': series.to_dict(), 'omega_series': omega_series.to_dict()}

        tower = context.get('tower')
        if tower is not None and tower.full_height:
            orders = dict(omega_series.orders)
            comparison = [{'n': level.n, 'predicted': str(level.predicted_degree), 'counted': str(orders[level.n]),
                           'pass': level.predicted_degree == orders[level.n]}
                          for level in tower.levels if level.n in orders]
            result['tower_comparison'] = comparison
            self.record_checks({'matches_tower': all(c['pass'] for c in comparison)})
            logger.debug(f'Tower comparison for {spec.label}: {comparison}')
        return result
