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
from math import comb

from pitower.errors import NotLTSeries
from pitower.rings import modular
from pitower.series import Series1


class LTFrobeniusSeries:
    """
    A Lubin-Tate series f(X) = pi X + ... over O with f = X^q mod w: every coefficient a_2..a_(q-1) lies in wO,
    a_q is 1 mod w and coefficients beyond q are arbitrary. The linear coefficient pi may be any uniformizer.
    """

    def __init__(self, series: Series1):
        self.series = series
        self.ring = series.ring
        self._validate()

    def _validate(self):
        s, ring = self.series, self.ring
        q = ring.q
        if s.D < q:
            raise NotLTSeries(f'Lubin-Tate series must be known up to X^{q}, truncation is {s.D}')
        if s.has_constant_term():
            raise NotLTSeries('Lubin-Tate series must have zero constant term')
        if s.coefficient(1).valuation() != 1:
            raise NotLTSeries(f'Linear coefficient {s.coefficient(1)} is not a uniformizer')
        for i in range(2, q):
            if s.coefficient(i).is_unit():
                raise NotLTSeries(f'Coefficient of X^{i} is a unit; f must reduce to X^{q} mod the uniformizer')
        if (s.coefficient(q) - 1).is_unit() or not s.coefficient(q).is_unit():
            raise NotLTSeries(f'Coefficient of X^{q} must be 1 mod the uniformizer')

    @classmethod
    def default(cls, ring, D=None):
        """
        f = w X + X^q for the ring's uniformizer w.
        """
        D = ring.q if D is None else D
        return cls(Series1.from_terms(ring, D, {1: ring.uniformizer, ring.q: 1}))

    @classmethod
    def gm(cls, ring, D=None):
        """
        f = (1+X)^p - 1, the Lubin-Tate series of the multiplicative formal group over Z_p.
        """
        if ring.e != 1 or ring.f != 1:
            raise NotLTSeries('(1+X)^p - 1 is a Lubin-Tate series only over an unramified ring with q = p')
        p = ring.p
        D = p if D is None else D
        return cls(Series1.from_terms(ring, D, {k: comb(p, k) for k in range(1, p + 1)}))

    @classmethod
    def from_choice(cls, ring, choice, D=None):
        if choice == 'default':
            return cls.default(ring, D)
        if choice == 'gm':
            return cls.gm(ring, D)
        raise ValueError(f'Unknown Lubin-Tate series choice {choice}; use "default" or "gm"')

    @property
    def pi(self):
        return self.series.coefficient(1)

    @property
    def q(self):
        return self.ring.q

    def has_terms_beyond_q(self):
        return self.series.degree_bound() > self.q

    def lifted(self, ring, D):
        """
        The series with the same integer coordinates over another precision of the ring, truncated or zero-padded to
        D. The lift is itself a Lubin-Tate series over O.
        """
        s = self.series.extend(D)
        return Series1(ring, modular.as_coefficients(s.coeffs % ring.modulus, ring.modulus))
