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

from pitower.formal import height_of, zp_height_check, divisibility_check, check_axioms, formal_log
from pitower.reports.LawArchive import LawArchive
from pitower.reports.ScenarioStep import ScenarioStep
from pitower.rings import make_ring

logger = logging.getLogger('ConstructLawStep')
logger.level = logging.DEBUG


class ConstructLawStep(ScenarioStep):
    name = 'construct'

    def __init__(self, archive=None, parent_step=None, child_step=None):
        """
        Builds (or loads from the law archive) the scenario's law and records its height, the Z_p-height relation,
        divisibility, the formal module axioms and the O-linearity of its logarithm.

        Leaves 'ring', 'law' and 'height' in the context for the later steps.

        :param archive: the LawArchive to use; defaults to one in config['working_dir']
        """
        ScenarioStep.__init__(self, parent_step, child_step)
        self._archive = archive

    def run_step(self, context):
        scenario = context['scenario']
        rng = context['rng']
        ring = make_ring(scenario.ring_spec)
        archive = self._archive if self._archive is not None else LawArchive()
        law = archive.load_or_build(ring, scenario.law, scenario.degree, scenario.group_degree)
        height = height_of(law)
        context['ring'], context['law'], context['height'] = ring, law, height

        axioms = check_axioms(law, rng, trials=scenario.trials, pairs=scenario.pairs)
        checks = dict(axioms)
        result = {
            'kind': law.kind,
            'ring': ring.spec.to_dict(),
            'D': law.D,
            'group_degree': law.group_degree,
            'height': height.to_dict(),
            'pi_height': height.pi_height(ring.f),
            'divisible': divisibility_check(law),
            'axioms': axioms,
        }

        if height.is_finite and ring.p ** (ring.e * height.h) <= law.D:
            result['zp_height'] = zp_height_check(law)
            checks['zp_height'] = result['zp_height'] == ring.e * height.h

        log = formal_log(law)
        linearity = {}
        for label, a in (('2', ring.from_int(2)), ('3', ring.from_int(3)), ('pi', law.pi)):
            linearity[label] = log.compose_with(law.bracket(a)).agrees_with(log.scaled_by(a))
        result['log'] = {'S': log.S, 'lowest_floor': int(log.floors.min()), 'linear': linearity}
        checks['log_linear'] = all(linearity.values())

        self.record_checks(checks)
        logger.debug(f'Constructed {law} of height {height}')
        return result
