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

from pitower.errors import PrecisionExhausted
from pitower.formal.FormalModuleLaw import FormalModuleLaw
from pitower.formal.LTFrobeniusSeries import LTFrobeniusSeries
from pitower.rings import modular
from pitower.series import Series1, Series2

logger = logging.getLogger('LubinTateLaw')
logger.level = logging.DEBUG


class LubinTateLaw(FormalModuleLaw):
    """
    The Lubin-Tate formal O-module attached to a Lubin-Tate series f. F and every bracket [a] are solved degree by
    degree: if G agrees with the true series below degree k, its degree-k correction is

        coeff_k(f(G) - G(f)) / (pi^k - pi)

    which only divides by pi times a unit. Solving happens at guard precision and the result is reduced to N and
    checked again.
    """
    kind = 'lubin-tate'

    def __init__(self, frobenius: LTFrobeniusSeries, D, group_degree=None, F=None, shuffle_seed=None):
        """
        :param frobenius: the Lubin-Tate series f; it becomes [pi] for pi its linear coefficient
        :param D: truncation of one-variable series
        :param group_degree: total degree of the two-variable law, capped at D
        :param F: a previously constructed group law (for example from an archive); skips construction
        :param shuffle_seed: when given, monomials of each degree are solved one at a time in a seeded random order
        """
        super().__init__(frobenius.ring, D, group_degree)
        self.frobenius = frobenius
        self.guard_N = self.guard_precision()
        if F is None:
            F = self._construct_group_law(shuffle_seed)
        self._F = F

    def guard_precision(self):
        q = self.ring.q
        if self.frobenius.has_terms_beyond_q():
            extra = -(-self.D // q)
        else:
            extra = 0
            while q ** (extra + 1) <= self.D:
                extra += 1
        return self.ring.N + 2 + extra

    @property
    def F(self):
        return self._F

    @property
    def pi(self):
        return self.frobenius.pi

    def _guard_ring(self):
        return self.ring.with_precision(self.guard_N)

    def _correction_matrix(self, R, pi, k):
        # 1 / (pi^k - pi) = w / pi * (pi^(k-1) - 1)^-1 / w
        unit = R.inv(R.divide_by_uniformizer(pi))
        return R.mult_matrix(unit * R.inv(pi ** (k - 1) - 1))

    def _solve(self, R, residual_rows, matrix):
        quotient = R.divide_by_uniformizer_array(residual_rows)
        return modular.apply_matrix(quotient, matrix, R.modulus)

    def _group_residual(self, F, f, k):
        Fk = F.truncate(k)
        fk = f.truncate(k)
        return (fk.compose(Fk) - Fk.substitute_separate(fk, fk)).degree_slice(k)

    def _construct_group_law(self, shuffle_seed=None):
        R = self._guard_ring()
        G = self.group_degree
        f = self.frobenius.lifted(R, G)
        pi = f.coefficient(1)
        m = R.modulus
        rng = None if shuffle_seed is None else np.random.default_rng(shuffle_seed)

        F = Series2.from_terms(R, G, {(1, 0): 1, (0, 1): 1})
        for k in range(2, G + 1):
            matrix = self._correction_matrix(R, pi, k)
            if rng is None:
                residual = self._group_residual(F, f, k)
                F.set_degree_slice(k, (F.degree_slice(k) + self._solve(R, residual, matrix)) % m)
            else:
                for i in rng.permutation(k + 1):
                    residual = self._group_residual(F, f, k)[i:i + 1]
                    F.coeffs[i, k - i] = (F.coeffs[i, k - i] + self._solve(R, residual, matrix)[0]) % m
            logger.debug(f'Solved group law degree {k}/{G} at precision {R.p}^{R.N}')

        F = F.reduce_to(self.ring)
        f_N = self.frobenius.lifted(self.ring, G)
        if f_N.compose(F) != F.substitute_separate(f_N, f_N):
            raise PrecisionExhausted(f'Group law fails f(F) = F(f, f) after reduction to precision '
                                     f'{self.ring.p}^{self.ring.N}; guard precision {self.guard_N} was too small')
        return F

    def _compute_bracket(self, a):
        D = self.D
        if a == self.ring.one:
            return Series1.identity(self.ring, D)
        if a == self.pi:
            return self.frobenius.lifted(self.ring, D)
        if a.is_zero():
            return Series1.zero(self.ring, D)

        R = self._guard_ring()
        f = self.frobenius.lifted(R, D)
        pi = f.coefficient(1)
        g = Series1.from_terms(R, D, {1: R.element(a.coords)})
        for k in range(2, D + 1):
            fk, gk = f.truncate(k), g.truncate(k)
            residual = (fk.compose(gk) - gk.compose(fk)).coeffs[k:k + 1]
            if residual.any():
                g.coeffs[k] = self._solve(R, residual, self._correction_matrix(R, pi, k))[0]

        g = g.reduce_to(self.ring)
        f_N = self.frobenius.lifted(self.ring, D)
        if f_N.compose(g) != g.compose(f_N):
            raise PrecisionExhausted(f'Bracket of {a} does not commute with f at precision '
                                     f'{self.ring.p}^{self.ring.N}')
        g.prec = np.minimum(g.prec, self.bracket_floors())
        return g

    def bracket_floors(self):
        """
        Digits of [a] that do not depend on how a is lifted from O / p^N. Changing a by p^N c changes the degree-k
        coefficient of [a] by a multiple of w^(eN - floor(log_q k)), so only N - ceil(floor(log_q k) / e) p-digits
        of it are known.
        """
        ring = self.ring
        floors = np.full(self.D + 1, ring.N, dtype=np.int64)
        for k in range(1, self.D + 1):
            floors[k] = ring.N + (-modular.floor_log(ring.q, k) // ring.e)
        return np.maximum(floors, 0)

    def to_dict(self):
        data = super().to_dict()
        data['f'] = self.frobenius.series.to_dict()
        return data


def lt_law(frobenius, D, group_degree=None, shuffle_seed=None):
    """
    Constructs the Lubin-Tate formal O-module of frobenius at truncation D.

    :raises NotLTSeries: frobenius fails the Lubin-Tate conditions (raised when it is built)
    :raises PrecisionExhausted: a division by the uniformizer failed or the reduced law fails verification
    """
    if not isinstance(frobenius, LTFrobeniusSeries):
        frobenius = LTFrobeniusSeries(frobenius)
    return LubinTateLaw(frobenius, D, group_degree, shuffle_seed=shuffle_seed)
