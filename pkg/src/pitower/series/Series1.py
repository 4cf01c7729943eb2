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

from pitower.errors import ShapeMismatch, NonzeroConstantTerm, NonUnitLinearTerm, NonUnit, SpecMismatch, ParseError
from pitower.rings import modular

logger = logging.getLogger('Series1')


class Series1:
    """
    A one-variable power series a_0 + a_1 X + ... + a_D X^D over a LocalRing, truncated at degree D.

    coeffs has shape (D+1, r): row i holds the ring coordinates of a_i. prec[i] is the number of p-adic digits of a_i
    that are known (between 0 and N); operations which divide by p lower it. A series with some prec[i] = 0 is
    DEGRADED.
    """

    def __init__(self, ring, coeffs, prec=None):
        coeffs = np.asarray(coeffs)
        if coeffs.ndim != 2 or coeffs.shape[1] != ring.degree or coeffs.shape[0] < 1:
            raise ShapeMismatch(f'Series1 coefficients must have shape (D+1, {ring.degree}), got {coeffs.shape}')
        self.ring = ring
        self.coeffs = coeffs
        if prec is None:
            prec = np.full(coeffs.shape[0], ring.N, dtype=np.int64)
        self.prec = np.minimum(np.asarray(prec, dtype=np.int64), ring.N)
        if self.prec.shape != (coeffs.shape[0],):
            raise ShapeMismatch(f'Precision floors must have length {coeffs.shape[0]}, got {self.prec.shape}')

    # -- constructors ---------------------------------------------------------------------------------------------

    @classmethod
    def zero(cls, ring, D):
        return cls(ring, modular.zeros((D + 1, ring.degree), ring.modulus))

    @classmethod
    def identity(cls, ring, D):
        return cls.from_terms(ring, D, {1: 1})

    @classmethod
    def from_terms(cls, ring, D, terms):
        """
        :param terms: mapping from exponent to coefficient (a RingElem or an integer); exponents beyond D are dropped
        """
        s = cls.zero(ring, D)
        for i, c in terms.items():
            if i <= D:
                s.coeffs[i] = _row(ring, c)
        return s

    @classmethod
    def from_ints(cls, ring, values):
        """
        Series with integer coefficients values[0] + values[1] X + ..., truncated at len(values) - 1.
        """
        return cls.from_terms(ring, len(values) - 1, dict(enumerate(values)))

    # -- basic accessors ------------------------------------------------------------------------------------------

    @property
    def D(self):
        return self.coeffs.shape[0] - 1

    @property
    def is_degraded(self):
        return bool((self.prec == 0).any())

    def coefficient(self, i):
        return self.ring.element(self.coeffs[i])

    def constant_term(self):
        return self.coefficient(0)

    def valuations(self):
        return self.ring.valuations(self.coeffs)

    def degree_bound(self):
        """
        Index of the highest nonzero coefficient (-1 for the zero series).
        """
        nonzero = np.flatnonzero(self.coeffs.any(axis=1))
        return int(nonzero[-1]) if len(nonzero) else -1

    def _check(self, other):
        if not isinstance(other, Series1):
            raise ShapeMismatch(f'Expected a Series1, got {type(other).__name__}')
        if other.ring.spec != self.ring.spec:
            raise SpecMismatch(f'Series over {self.ring.spec} and {other.ring.spec} cannot be combined')
        if other.D != self.D:
            raise ShapeMismatch(f'Truncation mismatch: D={self.D} vs D={other.D}')

    # -- arithmetic -----------------------------------------------------------------------------------------------

    def _add(self, other):
        self._check(other)
        return Series1(self.ring, (self.coeffs + other.coeffs) % self.ring.modulus, np.minimum(self.prec, other.prec))

    def _mul(self, other):
        self._check(other)
        ring = self.ring
        coeffs = modular.ring_convolve(self.coeffs, other.coeffs, ring.table, ring.modulus, self.D + 1)
        prec = np.minimum(np.minimum.accumulate(self.prec), np.minimum.accumulate(other.prec))
        return Series1(ring, coeffs, prec)

    def __add__(self, other):
        return self._add(other)

    def __sub__(self, other):
        self._check(other)
        return Series1(self.ring, (self.coeffs - other.coeffs) % self.ring.modulus, np.minimum(self.prec, other.prec))

    def __neg__(self):
        return Series1(self.ring, (-self.coeffs) % self.ring.modulus, self.prec)

    def __mul__(self, other):
        if isinstance(other, Series1):
            return self._mul(other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return other.ring.spec == self.ring.spec and other.D == self.D and np.array_equal(self.coeffs, other.coeffs)

    def scale(self, x):
        """
        Multiplies every coefficient by the ring element (or integer) x.
        """
        if isinstance(x, int):
            x = self.ring.from_int(x)
        return Series1(self.ring, modular.apply_matrix(self.coeffs, self.ring.mult_matrix(x), self.ring.modulus),
                       self.prec)

    def add_constant(self, row, prec=None):
        coeffs = self.coeffs.copy()
        coeffs[0] = (coeffs[0] + row) % self.ring.modulus
        out_prec = self.prec.copy()
        if prec is not None:
            out_prec[0] = min(out_prec[0], prec)
        return Series1(self.ring, coeffs, out_prec)

    def constant_like(self, row, prec=None):
        s = Series1.zero(self.ring, self.D)
        s.coeffs[0] = row
        if prec is not None:
            s.prec[:] = prec
        return s

    def compose(self, inner):
        """
        self(inner) truncated at inner.D, evaluated by Horner's rule from the highest nonzero coefficient.
        inner may be a Series1 or a Series2 and must have zero constant term.

        :raises NonzeroConstantTerm: inner has a nonzero constant term
        """
        if inner.ring.spec != self.ring.spec:
            raise SpecMismatch(f'Series over {self.ring.spec} and {inner.ring.spec} cannot be composed')
        if inner.has_constant_term():
            raise NonzeroConstantTerm('Inner series of a composition must have zero constant term')
        top = min(self.degree_bound(), inner.D)
        if top < 0:
            return inner.constant_like(self.coeffs[0])
        outer_prec = np.minimum.accumulate(self.prec)
        result = inner.constant_like(self.coeffs[top], outer_prec[top])
        for i in range(top - 1, -1, -1):
            result = result * inner
            if self.coeffs[i].any():
                result = result.add_constant(self.coeffs[i], outer_prec[i])
        return result

    def has_constant_term(self):
        return bool(self.coeffs[0].any())

    def weierstrass_degree(self):
        """
        Smallest index i <= D whose coefficient is a unit, or None when there is none up to D. Coefficients with no
        known digits never count as units.
        """
        if self.is_degraded:
            logger.warning(f'Weierstrass degree requested for a degraded series (D={self.D})')
        units = np.flatnonzero(self.ring.unit_mask(self.coeffs) & (self.prec > 0))
        return int(units[0]) if len(units) else None

    def truncate(self, D):
        if D > self.D:
            raise ShapeMismatch(f'Cannot truncate a series at D={self.D} to the larger D={D}')
        return Series1(self.ring, self.coeffs[:D + 1].copy(), self.prec[:D + 1].copy())

    def extend(self, D):
        """
        Zero-pads to truncation D >= self.D. The padded coefficients are only meaningful for polynomials.
        """
        if D < self.D:
            return self.truncate(D)
        coeffs = modular.zeros((D + 1, self.ring.degree), self.ring.modulus)
        coeffs[:self.D + 1] = self.coeffs
        prec = np.full(D + 1, self.ring.N, dtype=np.int64)
        prec[:self.D + 1] = self.prec
        return Series1(self.ring, coeffs, prec)

    def shift_down(self):
        """
        (s - s(0)) / X for a series with zero constant term; the result has truncation D-1.
        """
        if self.has_constant_term():
            raise NonzeroConstantTerm('shift_down requires a zero constant term')
        return Series1(self.ring, self.coeffs[1:].copy(), self.prec[1:].copy())

    def derivative(self):
        m = self.ring.modulus
        factors = np.arange(1, self.D + 1, dtype=object if self.coeffs.dtype == object else np.int64) % m
        coeffs = (self.coeffs[1:] * factors[:, None]) % m
        return Series1(self.ring, coeffs, self.prec[1:].copy())

    def inverse(self):
        """
        Multiplicative inverse of a series with unit constant term, by Newton iteration y <- y (2 - s y).

        :raises NonUnit: the constant term is not a unit
        """
        a0 = self.constant_term()
        if not a0.is_unit():
            raise NonUnit('Series with non-unit constant term has no multiplicative inverse')
        y = self.constant_like(_row(self.ring, a0.inverse()))
        two = self.constant_like(_row(self.ring, 2))
        known = 1
        while known <= self.D:
            y = y * (two - self * y)
            known *= 2
        return y

    def reversion(self):
        """
        Compositional inverse of a series with zero constant term and unit linear coefficient, solved degree by
        degree: the degree-k coefficient of self(r) - X is cancelled by adjusting r_k.

        :raises NonUnitLinearTerm: the linear coefficient is not a unit
        """
        if self.has_constant_term():
            raise NonzeroConstantTerm('reversion requires a zero constant term')
        if self.D < 1 or not self.coefficient(1).is_unit():
            raise NonUnitLinearTerm('reversion requires a unit linear coefficient')
        m = self.ring.modulus
        a1_inv = self.coefficient(1).inverse()
        a1_inv_matrix = self.ring.mult_matrix(a1_inv)
        r = Series1.from_terms(self.ring, self.D, {1: a1_inv})
        identity = Series1.identity(self.ring, self.D)
        for k in range(2, self.D + 1):
            error = (self.compose(r.truncate(k)).coeffs[k] - identity.coeffs[k]) % m
            if error.any():
                correction = modular.apply_matrix(error[None, :], a1_inv_matrix, m)[0]
                r.coeffs[k] = (r.coeffs[k] - correction) % m
        r.prec = np.minimum.accumulate(self.prec).copy()
        return r

    def reduce_to(self, ring):
        """
        The same series over a lower-precision copy of the ring.
        """
        if ring.spec.with_precision(self.ring.N) != self.ring.spec or ring.N > self.ring.N:
            raise SpecMismatch(f'Cannot reduce a series over {self.ring.spec} to {ring.spec}')
        coeffs = modular.as_coefficients(self.coeffs % ring.modulus, ring.modulus)
        return Series1(ring, coeffs.reshape(self.coeffs.shape), np.minimum(self.prec, ring.N))

    def agrees_with(self, other):
        """
        True when both series coincide modulo p^prec coefficientwise, using the smaller floor of the two.
        """
        self._check(other)
        floors = np.minimum(self.prec, other.prec)
        p = self.ring.p
        for i in range(self.D + 1):
            scale = p ** int(floors[i])
            if scale > 1 and ((self.coeffs[i] - other.coeffs[i]) % scale).any():
                return False
        return True

    # -- serialization --------------------------------------------------------------------------------------------

    def to_dict(self):
        return {
            'D': self.D,
            'coeffs': [[str(int(c)) for c in row] for row in self.coeffs],
            'prec': [int(v) for v in self.prec],
        }

    @classmethod
    def from_dict(cls, ring, data):
        try:
            D = int(data['D'])
            coeffs = modular.as_coefficients([[int(c) for c in row] for row in data['coeffs']], ring.modulus)
            prec = data.get('prec')
        except (KeyError, TypeError, ValueError) as ex:
            raise ParseError(f'Malformed series document: {ex}')
        if coeffs.shape != (D + 1, ring.degree):
            raise ParseError(f'Series document declares D={D} but holds coefficients of shape {coeffs.shape}')
        return cls(ring, coeffs, prec)

    def __repr__(self):
        terms = []
        for i in range(self.D + 1):
            if self.coeffs[i].any():
                terms.append(f'{list(int(c) for c in self.coeffs[i])}*X^{i}')
        return f'Series1({" + ".join(terms) or "0"}; D={self.D})'


def _row(ring, c):
    if isinstance(c, int):
        c = ring.from_int(c)
    return modular.as_coefficients(list(c.coords), ring.modulus)

