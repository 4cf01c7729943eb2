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
from pathlib import Path

import ijson

from pitower import config
from pitower.errors import ParseError, ValidationError
from pitower.formal import LTFrobeniusSeries, LubinTateLaw, AdditiveLaw, lt_law, additive_law
from pitower.rings import LocalRingSpec, make_ring
from pitower.series import Series1, Series2

logger = logging.getLogger('LawArchive')
logger.level = logging.DEBUG

LAW_CHOICES = ('default', 'gm', 'additive')


def build_law(ring, choice, D, group_degree=None):
    """
    Constructs the law named by choice: the Lubin-Tate law of w X + X^q ("default") or of (1+X)^p - 1 ("gm"), or
    the additive law.
    """
    if choice == 'additive':
        return additive_law(ring, D, group_degree)
    if choice not in LAW_CHOICES:
        raise ValidationError(f'Unknown law choice {choice!r}; expected one of {LAW_CHOICES}')
    return lt_law(LTFrobeniusSeries.from_choice(ring, choice, max(D, ring.q)), D, group_degree)


def law_from_dict(data):
    """
    Rebuilds a law from its archived form without re-solving it. Archived brackets are seeded into the cache.
    """
    try:
        ring = make_ring(LocalRingSpec.from_dict(data['ring']))
        kind, D, group_degree = data['kind'], int(data['D']), int(data['group_degree'])
        if kind == LubinTateLaw.kind:
            frobenius = LTFrobeniusSeries(Series1.from_dict(ring, data['f']))
            law = LubinTateLaw(frobenius, D, group_degree, F=Series2.from_dict(ring, data['F']))
        elif kind == AdditiveLaw.kind:
            law = AdditiveLaw(ring, D, group_degree)
        else:
            raise ParseError(f'Unknown law kind {kind!r}')
        for entry in data.get('brackets', []):
            law.seed_bracket(ring.element([int(c) for c in entry['a']]), Series1.from_dict(ring, entry['series']))
    except (KeyError, TypeError) as ex:
        raise ParseError(f'Malformed law archive: {ex}')
    return law


def read_law(path):
    """
    Streams the top-level keys of a law archive with ijson, so the large series entries are parsed one at a time.
    """
    data = {}
    try:
        with open(path, 'rb') as f:
            for key, value in ijson.kvitems(f, ''):
                data[key] = value
    except ijson.JSONError as ex:
        raise ParseError(f'Cannot parse law archive {path}: {ex}')
    return law_from_dict(data)


def write_law(law, path, extra=None):
    data = law.to_dict()
    if extra:
        data.update(extra)
    Path(path).write_text(json.dumps(data, indent=1))


class LawArchive:
    """
    Cache of constructed laws in the working directory. Laws are stored as laws/<sha256>.json, where the hash
    covers the ring spec, the law choice and both truncations; a request first checks the cache and only solves
    the law when it is missing.
    """

    def __init__(self, working_dir=None):
        self._working_dir = working_dir

    def get_working_dir(self):
        """
        Returns the archive directory, config['working_dir'] / laws unless another working_dir was given.
        """
        base = Path(self._working_dir) if self._working_dir is not None else Path(config['working_dir'])
        path = base / Path('laws')
        path.mkdir(parents=True, exist_ok=True)
        return path

    @staticmethod
    def key(ring_spec, choice, D, group_degree=None):
        payload = json.dumps({'ring': ring_spec.to_dict(), 'law': choice, 'D': D, 'group_degree': group_degree},
                             sort_keys=True)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    def path_for(self, ring_spec, choice, D, group_degree=None):
        return self.get_working_dir() / Path(f'{self.key(ring_spec, choice, D, group_degree)}.json')

    def load_or_build(self, ring, choice, D, group_degree=None):
        if not config['cache_laws']:
            return build_law(ring, choice, D, group_degree)

        path = self.path_for(ring.spec, choice, D, group_degree)
        if path.exists():
            logger.debug(f'Loading cached law {path.name}')
            return read_law(path)

        law = build_law(ring, choice, D, group_degree)
        write_law(law, path)
        logger.debug(f'Cached law as {path.name}')
        return law
