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
from dataclasses import dataclass, replace

from pitower import config
from pitower.errors import ValidationError


def _int(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValidationError(f'Expected an integer (or decimal string), got {value!r}')


@dataclass(frozen=True)
class LocalRingSpec:
    """
    Defining data of a ring of integers O presented as a two-step tower Z_p -> Z_p[u] (unramified of degree f) ->
    Z_p[u][w] (Eisenstein of degree e), known modulo p^N.

    - unram_poly: ascending coefficients of the monic degree-f polynomial defining u
    - eis: ascending coefficients of the monic degree-e Eisenstein polynomial defining the uniformizer w; every
      coefficient is an f-tuple of integers in the basis 1, u, ..., u^(f-1)
    """
    p: int
    f: int
    eis: tuple
    N: int
    unram_poly: tuple

    @property
    def e(self):
        return len(self.eis) - 1

    @property
    def degree(self):
        return self.e * self.f

    @property
    def q(self):
        return self.p ** self.f

    @property
    def modulus(self):
        return self.p ** self.N

    def with_precision(self, N):
        return replace(self, N=N)

    @classmethod
    def create(cls, p, f=1, eis=None, N=None, unram_poly=None):
        """
        Convenience constructor. eis entries may be plain integers (rational coefficients) or lists of length
        <= f. Defaults give the unramified ring of degree f with uniformizer p.
        """
        if N is None:
            N = config['precision']['default_N']
        if unram_poly is None:
            if f != 1:
                raise ValidationError('unram_poly is required when f > 1')
            unram_poly = (0, 1)
        if eis is None:
            eis = (-p, 1)

        blocks = []
        for c in eis:
            if isinstance(c, (list, tuple)):
                if len(c) > f:
                    raise ValidationError(f'Eisenstein coefficient {c} has more than f={f} entries')
                block = [_int(v) for v in c] + [0] * (f - len(c))
            else:
                block = [_int(c)] + [0] * (f - 1)
            blocks.append(tuple(block))

        return cls(p=_int(p), f=_int(f), eis=tuple(blocks), N=_int(N),
                   unram_poly=tuple(_int(v) for v in unram_poly))

    @classmethod
    def from_dict(cls, data, N=None):
        """
        Parses the JSON form {"p":3,"f":2,"unram":[...],"eis":[...],"N":12}. An explicit N argument overrides
        the one stored in the document.
        """
        if not isinstance(data, dict) or 'p' not in data:
            raise ValidationError(f'Ring spec must be an object with at least a "p" field, got {data!r}')
        if N is None:
            N = data.get('N')
        return cls.create(p=data['p'], f=data.get('f', 1), eis=data.get('eis'), N=N,
                          unram_poly=data.get('unram'))

    def to_dict(self):
        eis = []
        for block in self.eis:
            if all(v == 0 for v in block[1:]):
                eis.append(block[0])
            else:
                eis.append(list(block))
        return {'p': self.p, 'f': self.f, 'unram': list(self.unram_poly), 'eis': eis, 'N': self.N}
