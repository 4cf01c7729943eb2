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
from dataclasses import dataclass


@dataclass(frozen=True)
class HeightResult:
    """
    FINITE(h) when the first unit coefficient of [pi] sits at index p^h; LOWER_BOUND(b) when [pi] has no unit
    coefficient up to the truncation D, with b = floor(log_p D).
    """
    kind: str
    h: int

    FINITE = 'FINITE'
    LOWER_BOUND = 'LOWER_BOUND'

    @classmethod
    def finite(cls, h):
        return cls(cls.FINITE, h)

    @classmethod
    def lower_bound(cls, b):
        return cls(cls.LOWER_BOUND, b)

    @property
    def is_finite(self):
        return self.kind == self.FINITE

    def pi_height(self, f):
        """
        h_r = h / f, the rank of the Tate module over O; None unless the height is finite and divisible by f.
        """
        if not self.is_finite or self.h % f:
            return None
        return self.h // f

    def to_dict(self):
        return {'kind': self.kind, 'h': self.h}

    @classmethod
    def from_dict(cls, data):
        return cls(data['kind'], int(data['h']))

    def __str__(self):
        return f'{self.kind}({self.h})'
