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
import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from pitower import config
from pitower.errors import ParseError, ValidationError
from pitower.reports.CatalogStep import CatalogStep
from pitower.reports.ConstructLawStep import ConstructLawStep
from pitower.reports.CountStep import CountStep
from pitower.reports.FitStep import FitStep
from pitower.reports.LawArchive import LAW_CHOICES
from pitower.reports.RunReport import RunReport
from pitower.reports.TorsionStep import TorsionStep
from pitower.reports.TowerStep import TowerStep
from pitower.reports.emit import emit
from pitower.rings import LocalRingSpec

logger = logging.getLogger('Scenario')
logger.level = logging.DEBUG


def _positive(data, key, default=None, minimum=1):
    value = data.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValidationError(f'Scenario field "{key}" must be an integer >= {minimum}, got {value!r}')
    return value


def _catalog_entries(value):
    """
    true selects the whole built-in catalog; a list may mix built-in labels and full entries.
    """
    if value is None or value is False:
        return []
    if value is True:
        return list(config['catalog'])
    if not isinstance(value, list):
        raise ValidationError(f'Scenario field "catalog" must be true or a list, got {value!r}')
    builtin = {entry['label']: entry for entry in config['catalog']}
    entries = []
    for item in value:
        if isinstance(item, str):
            if item not in builtin:
                raise ValidationError(f'Unknown catalog label {item!r}; built-in labels are {sorted(builtin)}')
            entries.append(builtin[item])
        elif isinstance(item, dict) and 'ring' in item:
            LocalRingSpec.from_dict(item['ring'])
            entries.append({'label': item.get('label', f'entry {len(entries)}'), **item})
        else:
            raise ValidationError(f'Catalog entries are labels or objects with a "ring", got {item!r}')
    return entries


@dataclass
class Scenario:
    """
    A reproducible experiment read from JSON:

    {"name": "gm_p3", "ring": {"p": 3}, "law": "gm", "degree": 27, "levels": 3, "nmax": 4, "catalog": ["Z3^x"],
     "out": "gm_p3.report.json"}

    Optional fields are group_degree (defaults to min(degree, config['series']['max_group_degree'])), nmax (the
    counting depth, defaults to max(levels, 3)), catalog, trials and pairs (sizes of the randomised axiom checks)
    and out (report path, relative to the scenario file).
    """
    name: str
    ring_spec: LocalRingSpec
    law: str
    degree: int
    levels: int
    nmax: int
    group_degree: int = None
    catalog: list = field(default_factory=list)
    trials: int = 50
    pairs: int = 20
    out: str = None
    inputs: dict = field(default_factory=dict)

    @property
    def seed(self):
        """
        Seed of every randomised check, derived from the canonical form of the inputs.
        """
        digest = hashlib.sha256(json.dumps(self.inputs, sort_keys=True).encode('utf-8')).digest()
        return int.from_bytes(digest[:8], 'big')

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ValidationError(f'A scenario must be a JSON object, got {type(data).__name__}')
        if 'ring' not in data:
            raise ValidationError('Scenario needs a "ring" field')
        ring_spec = LocalRingSpec.from_dict(data['ring'])

        law = data.get('law', 'default')
        if law not in LAW_CHOICES:
            raise ValidationError(f'Unknown law choice {law!r}; expected one of {LAW_CHOICES}')
        degree = _positive(data, 'degree', minimum=2)
        if degree is None:
            raise ValidationError('Scenario needs a "degree" field')
        if degree > config['series']['max_degree']:
            raise ValidationError(f'degree {degree} exceeds the limit of {config["series"]["max_degree"]}')
        levels = _positive(data, 'levels', default=1)
        nmax = _positive(data, 'nmax', default=max(levels, 3), minimum=3)

        # Lubin-Tate laws have height f
        if law != 'additive' and ring_spec.p ** (levels * ring_spec.f) > degree:
            raise ValidationError(f'{levels} tower levels need degree >= {ring_spec.p}^{levels * ring_spec.f}, '
                                  f'got {degree}')

        out = data.get('out')
        if out is not None and not isinstance(out, str):
            raise ValidationError(f'Scenario field "out" must be a path, got {out!r}')

        return cls(name=str(data.get('name', 'scenario')), ring_spec=ring_spec, law=law, degree=degree,
                   levels=levels, nmax=nmax, group_degree=_positive(data, 'group_degree', minimum=2),
                   catalog=_catalog_entries(data.get('catalog')), trials=_positive(data, 'trials', 50),
                   pairs=_positive(data, 'pairs', 20), out=out, inputs=data)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, 'r') as f:
                data = json.load(f)
        except json.JSONDecodeError as ex:
            raise ParseError(f'Cannot parse scenario {path}: {ex}')
        return cls.from_dict(data)

    def pipeline(self, archive=None):
        """
        construct -> torsion -> tower -> count -> fit -> catalog, chained through parent steps so that calling the
        last step runs the whole scenario.
        """
        step = ConstructLawStep(archive=archive)
        for step_type in (TorsionStep, TowerStep, CountStep, FitStep, CatalogStep):
            step = step_type(parent_step=step)
        return step

    def run(self, archive=None):
        context = {'scenario': self, 'rng': np.random.default_rng(self.seed)}
        logger.debug(f'Running scenario {self.name} with seed {self.seed}')
        context = self.pipeline(archive)(context)
        return RunReport(inputs=self.inputs, steps=context.get('steps', {}), checks=context.get('checks', {}))


def run_scenario(path, archive=None):
    """
    Runs the scenario file at path and returns its RunReport. When the scenario names an output file the JSON
    report is written there as well.

    :raises ParseError: the file is not valid JSON
    :raises ValidationError: a field is missing or inconsistent
    """
    scenario = Scenario.from_file(path)
    report = scenario.run(archive)
    if scenario.out is not None:
        out = Path(path).parent / Path(scenario.out)
        out.write_bytes(emit(report, 'json'))
        logger.debug(f'Wrote report of {scenario.name} to {out}')
    return report
