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
from pitower.counting import run_catalog, dimension_catalog_check
from pitower.reports.ScenarioStep import ScenarioStep


class CatalogStep(ScenarioStep):
    name = 'catalog'

    def __init__(self, parent_step=None, child_step=None):
        ScenarioStep.__init__(self, parent_step, child_step)

    def run_step(self, context):
        entries = context['scenario'].catalog
        if not entries:
            return {'skipped': 'no catalog entries'}

        fits = run_catalog(entries)
        report = dimension_catalog_check(fits, strict=False)
        checks = {entry['label']: entry['pass'] for entry in report['entries']}
        for pair in report['pairs']:
            checks[f'{pair["kind"]}: {" / ".join(pair["labels"])}'] = pair['pass']
        self.record_checks(checks)
        return {'fits': [fit.to_dict() for fit in fits], **report}
