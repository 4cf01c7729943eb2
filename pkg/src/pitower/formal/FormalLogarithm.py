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

import numpy as np
import sympy

from pitower.errors import PrecisionExhausted, SpecMismatch
from pitower.rings.modular import floor_log
from pitower.series import Series1

logger = logging.getLogger('FormalLogarithm')
logger.level = logging.DEBUG


class FormalLogarithm:
    """
    The logarithm L(X) = X + c_2 X^2 + ... of a formal group law, with L(F(X, Y)) = L(X) + L(Y).

    L has coefficients in the fraction field, so it is stored through the integral numerators M = p^S L with
    S = max v_p(i) over i <= D; M is exact mod p^N. floors[i] = N - floor(log_p i) is the number of p-adic digits
    of the value c_i that survive, and omega_floors gives the same in w-adic units.
    """

    def __init__(self, ring, numerators: Series1, S, floors):
        self.ring = ring
        self.numerators = numerators
        self.S = S
        self.floors = np.asarray(floors, dtype=np.int64)

    @property
    def D(self):
        return self.numerators.D

    @property
    def omega_floors(self):
        return self.ring.e * self.floors

    @classmethod
    def of_law(cls, law):
        """
        Builds L from the invariant differential: L'(T) = 1 / (dF/dY)(T, 0), then c_i = b_(i-1) / i.

        :raises PrecisionExhausted: some floor would reach 0
        """
        ring = law.ring
        p, N, m = ring.p, ring.N, ring.modulus
        D = law.group_degree
        S = floor_log(p, D)
        if N - S <= 0:
            raise PrecisionExhausted(f'Logarithm up to degree {D} needs more than {N} p-adic digits')

        differential = law.F.partial_y_at_zero().inverse()
        numerators = Series1.zero(ring, D)
        for i in range(1, D + 1):
            v = sympy.multiplicity(p, i)
            factor = p ** (S - v) * pow(i // p ** v, -1, m) % m
            numerators.coeffs[i] = (differential.coeffs[i - 1] * factor) % m

        floors = [N] + [N - floor_log(p, i) for i in range(1, D + 1)]
        logger.debug(f'Logarithm of {law} to degree {D}: denominator {p}^{S}, lowest floor {floors[-1]}')
        return cls(ring, numerators, S, floors)

    def _check(self, other):
        if other.ring.spec != self.ring.spec or other.S != self.S or other.D != self.D:
            raise SpecMismatch('Logarithms differ in ring, denominator or truncation')

    def compose_with(self, g):
        """
        L(g(X)) for a series g with zero constant term; composition is linear in L, so it acts on the numerators.
        """
        composed = self.numerators.compose(g.truncate(self.D) if g.D > self.D else g)
        floors = np.minimum.accumulate(self.floors)[:composed.D + 1]
        return FormalLogarithm(self.ring, composed, self.S, floors)

    def scaled_by(self, a):
        return FormalLogarithm(self.ring, self.numerators.scale(a), self.S, self.floors.copy())

    def plus(self, other):
        self._check(other)
        return FormalLogarithm(self.ring, self.numerators + other.numerators, self.S,
                               np.minimum(self.floors, other.floors))

    def agrees_with(self, other):
        """
        Coefficientwise equality within the tracked floors. Since S >= floor(log_p i) for every i <= D, this is
        equality of the numerators mod p^N.
        """
        self._check(other)
        p = self.ring.p
        floors = np.minimum(self.floors, other.floors)
        diff = (self.numerators.coeffs - other.numerators.coeffs) % self.ring.modulus
        for i in range(self.D + 1):
            scale = p ** min(self.ring.N, int(floors[i]) + self.S)
            if (diff[i] % scale).any():
                return False
        return True

    def exponential(self):
        """
        exp = L^-1 by reversion; only available when L is integral (D < p).
        """
        if self.S > 0:
            raise PrecisionExhausted(f'Exponential needs integral logarithm coefficients (D < {self.ring.p})')
        return self.numerators.reversion()

    def to_dict(self):
        return {
            'S': self.S,
            'numerators': self.numerators.to_dict(),
            'floors': [int(v) for v in self.floors],
            'omega_floors': [int(v) for v in self.omega_floors],
        }

    def __repr__(self):
        return f'FormalLogarithm(D={self.D}, denominator p^{self.S})'


def formal_log(law):
    return FormalLogarithm.of_law(law)
