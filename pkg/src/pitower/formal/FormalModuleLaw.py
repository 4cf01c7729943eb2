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
import abc
import logging
import threading

from pitower import config
from pitower.errors import ValidationError

logger = logging.getLogger('FormalModuleLaw')
logger.level = logging.DEBUG


class FormalModuleLaw(abc.ABC):
    """
    A one-dimensional formal O-module over the ring O it is acted on by: a group law F(X, Y) together with the
    series [a](X) for a in O.

    Two truncations are kept. D bounds every one-variable series (brackets, torsion iterates, the logarithm) while
    the two-variable law F is carried to total degree group_degree = min(D, max_group_degree).
    """
    kind = None

    def __init__(self, ring, D, group_degree=None):
        if D < 2:
            raise ValidationError(f'Truncation degree must be at least 2, got {D}')
        if D > config['series']['max_degree']:
            raise ValidationError(f'Truncation degree {D} exceeds the configured maximum {config["series"]["max_degree"]}')
        self.ring = ring
        self.D = D
        cap = config['series']['max_group_degree']
        self.group_degree = min(D, cap if group_degree is None else group_degree)
        if self.group_degree < 2:
            raise ValidationError(f'Group law degree must be at least 2, got {self.group_degree}')
        self._brackets = {}
        self._lock = threading.Lock()

    @property
    @abc.abstractmethod
    def F(self):
        """
        The group law as a Series2 of total degree group_degree.
        """
        pass

    @property
    @abc.abstractmethod
    def pi(self):
        """
        The uniformizer whose bracket is the distinguished endomorphism [pi].
        """
        pass

    @abc.abstractmethod
    def _compute_bracket(self, a):
        pass

    def bracket(self, a):
        """
        [a](X) truncated at D. Results are cached; concurrent callers computing the same a store identical values
        and the first one wins.

        :param a: a RingElem of the law's ring, or an integer
        """
        if isinstance(a, int):
            a = self.ring.from_int(a)
        key = a.coords
        cached = self._brackets.get(key)
        if cached is None:
            logger.debug(f'Computing bracket [{list(key)}] at D={self.D}')
            computed = self._compute_bracket(a)
            with self._lock:
                cached = self._brackets.setdefault(key, computed)
        return cached

    def bracket_pi(self):
        return self.bracket(self.pi)

    def seed_bracket(self, a, series):
        """
        Stores a bracket restored from an archive without recomputing it.
        """
        with self._lock:
            self._brackets.setdefault(a.coords, series)

    def cached_brackets(self):
        with self._lock:
            items = sorted(self._brackets.items())
        return [(self.ring.element(key), series) for key, series in items]

    def to_dict(self):
        return {
            'kind': self.kind,
            'ring': self.ring.spec.to_dict(),
            'D': self.D,
            'group_degree': self.group_degree,
            'F': self.F.to_dict(),
            'brackets': [{'a': a.to_json(), 'series': s.to_dict()} for a, s in self.cached_brackets()],
        }

    def __repr__(self):
        return f'{type(self).__name__}({self.ring}, D={self.D}, group_degree={self.group_degree})'
