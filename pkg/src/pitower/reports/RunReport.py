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

import pitower


@dataclass
class RunReport:
    """
    Outcome of a scenario run: the tool version, an echo of the inputs, the JSON-ready results of every step in run
    order and the named relation checks. Carries no timestamps or host data, so identical inputs give identical
    reports.
    """
    version: str = pitower.__version__
    inputs: dict = field(default_factory=dict)
    steps: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def failed_checks(self):
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self):
        return {'version': self.version, 'inputs': self.inputs, 'steps': self.steps, 'checks': self.checks,
                'passed': self.passed}

    @classmethod
    def from_dict(cls, data):
        return cls(version=data['version'], inputs=data.get('inputs', {}), steps=data.get('steps', {}),
                   checks=data.get('checks', {}))
