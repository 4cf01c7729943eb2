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

import sympy

from pitower.counting import fit_dimension, fit_dimension_over_O, count_series
from pitower.errors import RelationViolated
from pitower.reports.ScenarioStep import ScenarioStep
from pitower.torsion import generator_bound_check, min_generators

logger = logging.getLogger('FitStep')
logger.level = logging.DEBUG


def random_conjugator(h, p, M, rng):
    while True:
        C = rng.integers(0, p ** M, size=(h, h))
        if int(sympy.Matrix(C.tolist()).det()) % p:
            return C


class FitStep(ScenarioStep):
    name = 'fit'

    def __init__(self, conjugators=5, parent_step=None, child_step=None):
        """
        Fits the volume law to the counted series and checks the dimension relations: e d_A f = d, d_A = 1 for the
        scalar model, the generator bound d <= h m with m = 1, and the invariance of the fit under conjugation.

        :param conjugators: number of random conjugating matrices
        """
        ScenarioStep.__init__(self, parent_step, child_step)
        self._conjugators = conjugators

    def run_step(self, context):
        count, rng = context['count'], context['rng']
        spec, gens, series = count['spec'], count['gens'], count['series']

        fit = fit_dimension(series)
        result = {'fit': fit.to_dict()}
        checks = {}
        try:
            omega_fit, relation = fit_dimension_over_O(count['omega_series'], spec, fit)
            result['omega_fit'] = omega_fit.to_dict()
            checks['d_A = h_r^2'] = omega_fit.d == spec.h_r ** 2
        except RelationViolated as ex:
            logger.debug(f'{ex}')
            relation = {'e': spec.e, 'f': spec.f, 'd': fit.d, 'pass': False}
        result['relation'] = relation
        checks['e d_A f = d'] = relation['pass']

        result['generator_bound'] = {'d': fit.d, 'h': spec.h, 'm': 1, 'min_m': min_generators(fit.d, spec.h),
                                     'pass': generator_bound_check(fit.d, spec.h, 1)}
        checks['generator_bound'] = result['generator_bound']['pass']

        conjugation = []
        for _ in range(self._conjugators):
            C = random_conjugator(gens.h, gens.p, gens.M, rng)
            other = fit_dimension(count_series(gens.conjugated(C), len(series)))
            conjugation.append((other.d, other.vol, other.n0) == (fit.d, fit.vol, fit.n0))
        result['conjugation_invariant'] = conjugation
        checks['conjugation_invariant'] = all(conjugation)

        self.record_checks(checks)
        return result
