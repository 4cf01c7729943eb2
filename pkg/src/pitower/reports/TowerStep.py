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

from pitower.errors import NotFullHeight
from pitower.reports.ScenarioStep import ScenarioStep
from pitower.torsion import full_height_tower, certified_tower

logger = logging.getLogger('TowerStep')
logger.level = logging.DEBUG


class TowerStep(ScenarioStep):
    name = 'tower'

    def __init__(self, parent_step=None, child_step=None):
        ScenarioStep.__init__(self, parent_step, child_step)

    def run_step(self, context):
        scenario, law, height = context['scenario'], context['law'], context['height']
        if not height.is_finite:
            return {'skipped': f'height {height}'}

        try:
            report = full_height_tower(law, scenario.levels)
        except NotFullHeight as ex:
            logger.debug(f'{ex}; falling back to the certified tower')
            report = certified_tower(law, scenario.levels)
        context['tower'] = report
        self.record_checks(report.checks)
        return report.to_dict()
