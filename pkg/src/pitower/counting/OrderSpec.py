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

from pitower.rings import LocalRingSpec, make_ring


@dataclass(frozen=True)
class OrderSpec:
    """
    GL_(h_r)(A) for the ring of integers A described by ring_spec, embedded in GL_h(Z_p), h = e*f*h_r, through the
    regular representation on the basis u^i w^j of A.
    """
    ring_spec: LocalRingSpec
    h_r: int = 1
    label: str = ''

    @property
    def e(self):
        return self.ring_spec.e

    @property
    def f(self):
        return self.ring_spec.f

    @property
    def p(self):
        return self.ring_spec.p

    @property
    def h(self):
        return self.e * self.f * self.h_r

    def ring(self, M):
        return make_ring(self.ring_spec.with_precision(M))

    @classmethod
    def from_catalog(cls, entry, M):
        return cls(LocalRingSpec.from_dict(entry['ring'], N=M), int(entry.get('h_r', 1)), entry.get('label', ''))
