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
import numpy as np

from pitower.errors import ShapeMismatch, SpecMismatch, NonzeroConstantTerm, ParseError
from pitower.rings import modular
from pitower.series.Series1 import Series1


class Series2:
    """
    A two-variable power series sum c_ij X^i Y^j over a LocalRing, truncated at total degree D. coeffs has shape
    (D+1, D+1, r) and vanishes wherever i + j > D. Two-variable series never divide by p, so no precision floors are
    carried.
    """

    def __init__(self, ring, coeffs):
        coeffs = np.asarray(coeffs)
        if coeffs.ndim != 3 or coeffs.shape[0] != coeffs.shape[1] or coeffs.shape[2] != ring.degree:
            raise ShapeMismatch(f'Series2 coefficients must have shape (D+1, D+1, {ring.degree}), got {coeffs.shape}')
        self.ring = ring
        self.coeffs = coeffs
        self.coeffs[~_mask(self.D)] = 0

    @classmethod
    def zero(cls, ring, D):
        return cls(ring, modular.zeros((D + 1, D + 1, ring.degree), ring.modulus))

    @classmethod
    def from_terms(cls, ring, D, terms):
        """
        :param terms: mapping from (i, j) to a RingElem or an integer; terms with i + j > D are dropped
        """
        s = cls.zero(ring, D)
        for (i, j), c in terms.items():
            if i + j <= D:
                if isinstance(c, int):
                    c = ring.from_int(c)
                s.coeffs[i, j] = modular.as_coefficients(list(c.coords), ring.modulus)
        return s

    @classmethod
    def x(cls, ring, D):
        return cls.from_terms(ring, D, {(1, 0): 1})

    @classmethod
    def y(cls, ring, D):
        return cls.from_terms(ring, D, {(0, 1): 1})

    @classmethod
    def from_series_in_x(cls, s, D=None):
        """
        The one-variable series s(X) viewed in two variables.
        """
        D = s.D if D is None else D
        out = cls.zero(s.ring, D)
        k = min(D, s.D)
        out.coeffs[:k + 1, 0] = s.coeffs[:k + 1]
        return out

    @property
    def D(self):
        return self.coeffs.shape[0] - 1

    def coefficient(self, i, j):
        return self.ring.element(self.coeffs[i, j])

    def degree_slice(self, k):
        """
        Coordinates of the homogeneous degree-k part as an array of shape (k+1, r), row i holding c_{i,k-i}.
        """
        i = np.arange(k + 1)
        return self.coeffs[i, k - i]

    def set_degree_slice(self, k, rows):
        i = np.arange(k + 1)
        self.coeffs[i, k - i] = rows

    def has_constant_term(self):
        return bool(self.coeffs[0, 0].any())

    def _check(self, other):
        if not isinstance(other, Series2):
            raise ShapeMismatch(f'Expected a Series2, got {type(other).__name__}')
        if other.ring.spec != self.ring.spec:
            raise SpecMismatch(f'Series over {self.ring.spec} and {other.ring.spec} cannot be combined')
        if other.D != self.D:
            raise ShapeMismatch(f'Truncation mismatch: D={self.D} vs D={other.D}')

    def _add(self, other):
        self._check(other)
        return Series2(self.ring, (self.coeffs + other.coeffs) % self.ring.modulus)

    def _mul(self, other):
        """
        Product via Kronecker flattening: (i, j) -> i*W + j with W = 2D+1 turns the two-variable product into one
        convolution with no carries between rows.
        """
        self._check(other)
        D, r, m = self.D, self.ring.degree, self.ring.modulus
        W = 2 * D + 1
        left = modular.zeros(((D + 1) * W, r), m)
        right = modular.zeros(((D + 1) * W, r), m)
        left.reshape(D + 1, W, r)[:, :D + 1] = self.coeffs
        right.reshape(D + 1, W, r)[:, :D + 1] = other.coeffs
        flat = modular.ring_convolve(left, right, self.ring.table, m, (D + 1) * W)
        return Series2(self.ring, flat.reshape(D + 1, W, r)[:, :D + 1].copy())

    def __add__(self, other):
        return self._add(other)

    def __sub__(self, other):
        self._check(other)
        return Series2(self.ring, (self.coeffs - other.coeffs) % self.ring.modulus)

    def __neg__(self):
        return Series2(self.ring, (-self.coeffs) % self.ring.modulus)

    def __mul__(self, other):
        if isinstance(other, Series2):
            return self._mul(other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        return other.ring.spec == self.ring.spec and other.D == self.D and np.array_equal(self.coeffs, other.coeffs)

    def scale(self, x):
        if isinstance(x, int):
            x = self.ring.from_int(x)
        return Series2(self.ring, modular.apply_matrix(self.coeffs, self.ring.mult_matrix(x), self.ring.modulus))

    def add_constant(self, row, prec=None):
        coeffs = self.coeffs.copy()
        coeffs[0, 0] = (coeffs[0, 0] + row) % self.ring.modulus
        return Series2(self.ring, coeffs)

    def constant_like(self, row, prec=None):
        s = Series2.zero(self.ring, self.D)
        s.coeffs[0, 0] = row
        return s

    def truncate(self, D):
        if D > self.D:
            raise ShapeMismatch(f'Cannot truncate a series at D={self.D} to the larger D={D}')
        return Series2(self.ring, self.coeffs[:D + 1, :D + 1].copy())

    def swap(self):
        return Series2(self.ring, self.coeffs.transpose(1, 0, 2).copy())

    def is_symmetric(self):
        return np.array_equal(self.coeffs, self.coeffs.transpose(1, 0, 2))

    def restrict_x(self):
        """
        F(X, 0) as a one-variable series.
        """
        return Series1(self.ring, self.coeffs[:, 0].copy())

    def partial_y_at_zero(self):
        """
        dF/dY (T, 0) as a one-variable series truncated at D-1.
        """
        return Series1(self.ring, self.coeffs[:self.D, 1].copy())

    def substitute(self, a, b):
        """
        F(a(T), b(T)) for one-variable series a, b with zero constant term, truncated at min(D, a.D).

        :raises NonzeroConstantTerm: a or b has a nonzero constant term
        """
        if a.has_constant_term() or b.has_constant_term():
            raise NonzeroConstantTerm('Substituted series must have zero constant term')
        if a.D != b.D:
            raise ShapeMismatch(f'Substituted series must share a truncation, got {a.D} and {b.D}')
        top = min(self.D, a.D)
        powers = [b.constant_like(_one(self.ring))]
        for _ in range(top):
            powers.append(powers[-1] * b)

        def column(i):
            acc = Series1.zero(self.ring, a.D)
            for j in range(top - i + 1):
                c = self.coeffs[i, j]
                if c.any():
                    acc = acc + powers[j].scale(self.ring.element(c))
            return acc

        result = column(top)
        for i in range(top - 1, -1, -1):
            result = result * a + column(i)
        return result.truncate(top)

    def substitute_separate(self, a, b):
        """
        F(a(X), b(Y)) for one-variable series a, b with zero constant term, truncated at total degree D.
        """
        if a.has_constant_term() or b.has_constant_term():
            raise NonzeroConstantTerm('Substituted series must have zero constant term')
        ax = Series2.from_series_in_x(a, self.D)
        by = Series2.from_series_in_x(b, self.D).swap()
        powers = [ax.constant_like(_one(self.ring))]
        for _ in range(self.D):
            powers.append(powers[-1] * by)
        result = Series2.zero(self.ring, self.D)
        x_power = ax.constant_like(_one(self.ring))
        for i in range(self.D + 1):
            inner = Series2.zero(self.ring, self.D)
            for j in range(self.D - i + 1):
                c = self.coeffs[i, j]
                if c.any():
                    inner = inner + powers[j].scale(self.ring.element(c))
            result = result + x_power * inner
            x_power = x_power * ax
        return result

    def reduce_to(self, ring):
        if ring.spec.with_precision(self.ring.N) != self.ring.spec or ring.N > self.ring.N:
            raise SpecMismatch(f'Cannot reduce a series over {self.ring.spec} to {ring.spec}')
        return Series2(ring, modular.as_coefficients(self.coeffs % ring.modulus, ring.modulus))

    def to_dict(self):
        """
        Triangular JSON form: coeffs[i][j] holds the coordinates of c_ij for j <= D - i.
        """
        return {
            'D': self.D,
            'coeffs': [[[str(int(c)) for c in self.coeffs[i, j]] for j in range(self.D - i + 1)]
                       for i in range(self.D + 1)],
        }

    @classmethod
    def from_dict(cls, ring, data):
        try:
            D = int(data['D'])
            rows = data['coeffs']
            s = cls.zero(ring, D)
            for i in range(D + 1):
                if len(rows[i]) != D - i + 1:
                    raise ParseError(f'Row {i} of a two-variable series must have {D - i + 1} entries')
                for j in range(D - i + 1):
                    s.coeffs[i, j] = modular.as_coefficients([int(c) for c in rows[i][j]], ring.modulus)
        except (KeyError, TypeError, ValueError, IndexError) as ex:
            if isinstance(ex, ParseError):
                raise
            raise ParseError(f'Malformed two-variable series document: {ex}')
        return s

    def __repr__(self):
        terms = []
        for i in range(self.D + 1):
            for j in range(self.D - i + 1):
                if self.coeffs[i, j].any():
                    terms.append(f'{list(int(c) for c in self.coeffs[i, j])}*X^{i}Y^{j}')
        return f'Series2({" + ".join(terms) or "0"}; D={self.D})'


def _mask(D):
    i = np.arange(D + 1)
    return (i[:, None] + i[None, :]) <= D


def _one(ring):
    return modular.as_coefficients(list(ring.one.coords), ring.modulus)
