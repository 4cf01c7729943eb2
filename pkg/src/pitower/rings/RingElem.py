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
from pitower.errors import SpecMismatch


class RingElem:
    """
    An immutable element of a LocalRing, stored as its e*f coordinates in the basis u^i w^j (index j*f + i),
    each reduced modulo p^N.
    """
    __slots__ = ('_ring', '_coords')

    def __init__(self, ring, coords):
        coords = tuple(int(c) % ring.modulus for c in coords)
        if len(coords) != ring.degree:
            raise ValueError(f'Expected {ring.degree} coordinates, got {len(coords)}')
        self._ring = ring
        self._coords = coords

    @property
    def ring(self):
        return self._ring

    @property
    def coords(self):
        return self._coords

    def _coerce(self, other):
        if isinstance(other, int):
            return self._ring.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        if other._ring.spec != self._ring.spec:
            raise SpecMismatch(f'Cannot combine elements of {self._ring.spec} and {other._ring.spec}')
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._ring.arith(self, other, 'add')

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._ring.arith(self, other, 'sub')

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._ring.arith(self, other, 'mul')

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._ring.arith(other, self, 'sub')

    def __neg__(self):
        return RingElem(self._ring, [-c for c in self._coords])

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self._ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._ring.from_int(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self._ring.spec == other._ring.spec and self._coords == other._coords

    def __hash__(self):
        return hash((self._ring.spec, self._coords))

    def is_zero(self):
        return not any(self._coords)

    def is_unit(self):
        return self._ring.is_unit(self)

    def inverse(self):
        return self._ring.inv(self)

    def valuation(self):
        return self._ring.valuation(self)

    def to_json(self):
        return [str(c) for c in self._coords]

    def __repr__(self):
        return f'RingElem({list(self._coords)} mod {self._ring.p}^{self._ring.N})'
