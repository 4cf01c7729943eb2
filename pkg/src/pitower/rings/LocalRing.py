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
import itertools
import logging
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcd, gf_pow_mod, gf_sub

from pitower.errors import NonPrime, ReducibleUnramPoly, NotEisenstein, NonUnit, PrecisionExhausted, SpecMismatch, \
    ValidationError
from pitower.rings import modular
from pitower.rings.LocalRingSpec import LocalRingSpec
from pitower.rings.RingElem import RingElem
from pitower.rings.ValuationValue import ValuationValue, INFTY

logger = logging.getLogger('LocalRing')
logger.level = logging.DEBUG

PRIME_LIMIT = 1 << 31


def make_ring(spec: LocalRingSpec):
    """
    Validates spec and returns the (shared, immutable) ring handle for it.

    :raises NonPrime: p is not a prime below 2^31
    :raises ReducibleUnramPoly: the unramified polynomial is not irreducible mod p
    :raises NotEisenstein: eis is not an Eisenstein polynomial over the unramified subring
    """
    return _make_ring(spec)


@lru_cache(maxsize=None)
def _make_ring(spec):
    return LocalRing(spec)


class LocalRing:
    """
    The ring of integers O = Z_p[u][w] of a local field, known modulo p^N. Elements are RingElem coordinate
    vectors in the basis u^i w^j, index j*f + i.
    """

    def __init__(self, spec: LocalRingSpec):
        self._spec = spec
        self._validate()

        self.p = spec.p
        self.f = spec.f
        self.e = spec.e
        self.N = spec.N
        self.q = spec.q
        self.degree = spec.degree
        self.modulus = spec.modulus
        self.dtype = modular.coefficient_dtype(self.modulus)

        m = self.modulus
        self._unram = [c % m for c in spec.unram_poly]
        self._eis = [[c % m for c in block] for block in spec.eis]

        r = self.degree
        self._table = modular.zeros((r, r, r), m)
        for a in range(r):
            for b in range(a, r):
                prod = self._mul_raw(self._basis(a), self._basis(b))
                self._table[a, b] = prod
                self._table[b, a] = prod

        logger.debug(f'Built ring p={self.p} f={self.f} e={self.e} N={self.N} (dtype {self.dtype})')

    # -- validation -----------------------------------------------------------------------------------------------

    def _validate(self):
        spec = self._spec
        p, f = spec.p, spec.f
        if p < 2 or p >= PRIME_LIMIT or not sympy.isprime(p):
            raise NonPrime(f'p={p} is not a prime below 2^31')
        if f < 1:
            raise ValidationError(f'Inertia degree f must be >= 1, got {f}')
        if spec.N < 1:
            raise ValidationError(f'Precision exponent N must be >= 1, got {spec.N}')

        unram = list(spec.unram_poly)
        if len(unram) != f + 1 or unram[-1] != 1:
            raise ReducibleUnramPoly(f'Unramified polynomial {unram} is not monic of degree {f}')
        if f > 1:
            g = gf_from_int_poly(list(reversed(unram)), p)
            x = [1, 0]
            for i in range(1, f):
                h = gf_sub(gf_pow_mod(x, p ** i, g, p, ZZ), x, p, ZZ)
                if gf_gcd(h, g, p, ZZ) != [1]:
                    raise ReducibleUnramPoly(f'Unramified polynomial {unram} has a factor of degree dividing {i} mod {p}')

        eis = spec.eis
        if len(eis) < 2:
            raise NotEisenstein(f'Eisenstein polynomial must have degree >= 1, got {len(eis) - 1}')
        if any(len(block) != f for block in eis):
            raise NotEisenstein(f'Every Eisenstein coefficient must have {f} coordinates')
        if tuple(eis[-1]) != (1,) + (0,) * (f - 1):
            raise NotEisenstein(f'Eisenstein polynomial must be monic, leading coefficient is {eis[-1]}')
        for j, block in enumerate(eis[:-1]):
            if any(c % p for c in block):
                raise NotEisenstein(f'Coefficient {j} = {block} is not divisible by {p}')
        if all(c % (p * p) == 0 for c in eis[0]):
            raise NotEisenstein(f'Constant coefficient {eis[0]} is divisible by {p}^2')

    # -- raw arithmetic on Python ints ----------------------------------------------------------------------------

    def _basis(self, index):
        coords = [0] * self.degree
        coords[index] = 1
        return coords

    def _unram_mul(self, a, b):
        f, m = self.f, self.modulus
        prod = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for k in range(2 * f - 2, f - 1, -1):
            c = prod[k] % m
            if c:
                for t in range(f):
                    prod[k - f + t] -= c * self._unram[t]
        return [c % m for c in prod[:f]]

    def _mul_raw(self, x, y):
        e, f, m = self.e, self.f, self.modulus
        xb = [x[j * f:(j + 1) * f] for j in range(e)]
        yb = [y[j * f:(j + 1) * f] for j in range(e)]
        prod = [[0] * f for _ in range(2 * e - 1)]
        for i in range(e):
            if not any(xb[i]):
                continue
            for j in range(e):
                if not any(yb[j]):
                    continue
                term = self._unram_mul(xb[i], yb[j])
                prod[i + j] = [(s + t) % m for s, t in zip(prod[i + j], term)]
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if any(c):
                for t in range(e):
                    term = self._unram_mul(c, self._eis[t])
                    prod[k - e + t] = [(s - v) % m for s, v in zip(prod[k - e + t], term)]
        return [v for block in prod[:e] for v in block]

    # -- public surface ---------------------------------------------------------------------------------------------

    @property
    def spec(self):
        return self._spec

    @property
    def table(self):
        """
        Structure constants: table[a, b] holds the coordinates of basis_a * basis_b.
        """
        return self._table

    def with_precision(self, N):
        return make_ring(self._spec.with_precision(N))

    def element(self, coords):
        return RingElem(self, coords)

    def from_int(self, n):
        coords = [0] * self.degree
        coords[0] = n
        return RingElem(self, coords)

    def from_unram(self, block):
        """
        The element sum_i block[i] u^i of the unramified subring.
        """
        coords = [0] * self.degree
        coords[:len(block)] = block
        return RingElem(self, coords)

    def coerce(self, x):
        """
        Reduces an element of the same tower at another precision into this ring.
        """
        if x.ring.spec.with_precision(self.N) != self._spec:
            raise ValidationError(f'Cannot coerce an element of {x.ring.spec} into {self._spec}')
        return RingElem(self, x.coords)

    @cached_property
    def zero(self):
        return RingElem(self, [0] * self.degree)

    @cached_property
    def one(self):
        return self.from_int(1)

    @cached_property
    def u(self):
        return self.element(self._basis(1)) if self.f > 1 else self.from_int(-self._spec.unram_poly[0])

    @cached_property
    def uniformizer(self):
        if self.e > 1:
            return self.element(self._basis(self.f))
        return self.from_unram([-c for c in self._spec.eis[0]])

    def random_element(self, rng, unit=False):
        coords = [int(rng.integers(0, self.p)) for _ in range(self.degree)]
        for _ in range(1, self.N):
            coords = [c * self.p + int(rng.integers(0, self.p)) for c in coords]
        if unit:
            coords[0] = coords[0] - coords[0] % self.p + int(rng.integers(1, self.p))
        return RingElem(self, coords)

    def arith(self, x, y, kind):
        """
        Exact add/sub/mul mod p^N.

        :raises SpecMismatch: x and y belong to different rings
        """
        if x.ring.spec != self._spec or y.ring.spec != self._spec:
            raise SpecMismatch(f'Cannot combine elements of {x.ring.spec} and {y.ring.spec} in {self._spec}')
        if kind == 'add':
            return RingElem(self, [a + b for a, b in zip(x.coords, y.coords)])
        if kind == 'sub':
            return RingElem(self, [a - b for a, b in zip(x.coords, y.coords)])
        if kind == 'mul':
            return RingElem(self, self._mul_raw(list(x.coords), list(y.coords)))
        raise ValueError(f'Unknown arithmetic kind {kind}')

    def mult_matrix(self, x):
        """
        Matrix of multiplication by x over Z/p^N: column a holds the coordinates of x * basis_a.
        """
        r = self.degree
        cols = [self._mul_raw(list(x.coords), self._basis(a)) for a in range(r)]
        return modular.as_coefficients([[cols[a][k] for a in range(r)] for k in range(r)], self.modulus)

    def is_unit(self, x):
        return any(c % self.p for c in x.coords[:self.f])

    def inv(self, x):
        """
        :raises NonUnit: x has positive valuation (or is zero at precision)
        """
        if not self.is_unit(x):
            raise NonUnit(f'{x} is not a unit')
        M = sympy.Matrix(self.mult_matrix(x).tolist())
        inverse = M.inv_mod(self.modulus)
        return RingElem(self, [int(inverse[k, 0]) for k in range(self.degree)])

    def valuation(self, x):
        """
        v(x) normalized with v(w) = 1, read off v_p(det M_x) / f. When the determinant vanishes at precision the
        tower coordinates give the same value as min_j (e * v_p(block_j) + j). INFTY only for zero.
        """
        if x.is_zero():
            return INFTY
        det = int(sympy.Matrix(self.mult_matrix(x).tolist()).det(method='bareiss')) % self.modulus
        if det:
            return ValuationValue(Fraction(sympy.multiplicity(self.p, det), self.f))
        return self.valuations(np.array([x.coords], dtype=object))[0]

    def valuations(self, coefficients):
        """
        Valuations of every coordinate row of an array of shape (L, r), from the tower coordinates.
        """
        coefficients = np.asarray(coefficients)
        L = coefficients.shape[0]
        if L == 0:
            return []
        vp = modular.p_valuations(coefficients, self.p, self.N).reshape(L, self.e, self.f).min(axis=2)
        candidates = self.e * vp + np.arange(self.e)[None, :]
        candidates = np.where(vp >= self.N, np.iinfo(np.int64).max, candidates)
        best = candidates.min(axis=1)
        return [INFTY if v == np.iinfo(np.int64).max else ValuationValue(int(v)) for v in best]

    def unit_mask(self, coefficients):
        """
        Boolean mask over the rows of an (L, r) coefficient array marking units.
        """
        return (np.asarray(coefficients)[:, :self.f] % self.p != 0).any(axis=1)

    @cached_property
    def _eta(self):
        # w^e = p * eta with eta = -sum_j (c_j / p) w^j a unit
        coords = []
        for block in self._spec.eis[:-1]:
            coords.extend(-(c // self.p) for c in block)
        return RingElem(self, coords)

    @cached_property
    def _division_factor(self):
        # x / w = (x * w^(e-1) * eta^-1) / p
        return self.uniformizer ** (self.e - 1) * self.inv(self._eta)

    @cached_property
    def division_matrix(self):
        return self.mult_matrix(self._division_factor)

    def divide_by_uniformizer(self, x):
        """
        Exact division by w of an element of wO. Consumes one p-digit of precision (the top digit becomes 0).

        :raises PrecisionExhausted: x is not divisible by w at working precision
        """
        y = x * self._division_factor
        if any(c % self.p for c in y.coords):
            raise PrecisionExhausted(f'{x} is not divisible by the uniformizer at precision {self.p}^{self.N}')
        return RingElem(self, [c // self.p for c in y.coords])

    def divide_by_uniformizer_array(self, coefficients):
        """
        Row-wise divide_by_uniformizer on an (L, r) coefficient array.
        """
        y = modular.apply_matrix(np.asarray(coefficients), self.division_matrix, self.modulus)
        if (y % self.p != 0).any():
            raise PrecisionExhausted(f'Coefficient array is not divisible by the uniformizer at precision {self.p}^{self.N}')
        return y // self.p

    @cached_property
    def residue_generator(self):
        """
        The first element of the unramified residue representatives (ordered by sum c_i p^i) generating the
        residue field multiplicatively.
        """
        order = self.q - 1
        primes = list(sympy.factorint(order)) if order > 1 else []
        for digits in itertools.product(range(self.p), repeat=self.f):
            candidate = tuple(reversed(digits))
            if not any(candidate):
                continue
            z = self.from_unram(list(candidate))
            if all(self.is_unit((z ** (order // ell)) - 1) for ell in primes):
                logger.debug(f'Residue generator for q={self.q}: {list(candidate)}')
                return z
        raise ValidationError(f'No multiplicative generator found for the residue field of order {self.q}')

    def lift_residue(self, x):
        """
        Teichmueller lift of the residue class of the unit x: iterate z -> z^q until stable.
        """
        if not self.is_unit(x):
            raise NonUnit(f'{x} has no Teichmueller lift among the roots of unity')
        z = x
        for _ in range(self.N + 1):
            nxt = z ** self.q
            if nxt == z:
                break
            z = nxt
        if z ** (self.q - 1) != self.one:
            raise PrecisionExhausted(f'Teichmueller iteration did not converge for {x}')
        return z

    def teichmueller(self, k):
        """
        Teichmueller lift of g^k where g is residue_generator; k=0 gives 1.
        """
        if not 0 <= k < max(self.q - 1, 1):
            raise ValidationError(f'Residue index must lie in [0, {self.q - 1}), got {k}')
        return self.lift_residue(self.residue_generator ** k)

    def __repr__(self):
        return f'LocalRing(p={self.p}, f={self.f}, e={self.e}, N={self.N})'
