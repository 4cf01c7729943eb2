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

from pitower.config import enumeration_budget
from pitower.errors import BudgetExceeded, PrecisionTooLow, Mismatch
from pitower.counting.CountSeries import CountSeries
from pitower.counting.MatrixGenSet import matrix_dtype

logger = logging.getLogger('enumeration')
logger.level = logging.DEBUG


def encode(matrix):
    if matrix.dtype == object:
        return tuple(int(v) for v in matrix.ravel())
    return matrix.tobytes()


def decode(key, h):
    """
    Inverse of the canonical encoding used by closure().
    """
    if isinstance(key, tuple):
        return np.array(key, dtype=object).reshape(h, h)
    return np.frombuffer(key, dtype=np.int64).reshape(h, h)


def closure(gens, h, modulus, budget=None):
    """
    Breadth-first closure of the identity under right multiplication by gens mod modulus. In a finite group the
    generated monoid is the generated subgroup. Returns the set of canonical encodings of its elements.

    :raises BudgetExceeded: more than budget elements were reached
    """
    budget = enumeration_budget() if budget is None else budget
    dtype = matrix_dtype(h, modulus)
    identity = np.eye(h, dtype=dtype)
    if dtype is object:
        identity = np.array(identity.tolist(), dtype=object)
    gens = [np.array((np.asarray(g) % modulus).tolist(), dtype=dtype) for g in gens]

    seen = {encode(identity)}
    frontier = [identity]
    while frontier:
        stack = np.stack(frontier)
        discovered = []
        for g in gens:
            for product in (stack @ g) % modulus:
                key = encode(product)
                if key not in seen:
                    seen.add(key)
                    discovered.append(product)
            if len(seen) > budget:
                raise BudgetExceeded(f'Closure mod {modulus} exceeded the budget of {budget} elements')
        frontier = discovered
    return seen


def image_order(g, n, budget=None):
    """
    |I_n|, the order of the subgroup of GL_h(Z/p^n) generated by g mod p^n.

    :raises PrecisionTooLow: n > M
    :raises BudgetExceeded: the closure is larger than the budget
    """
    if n > g.M:
        raise PrecisionTooLow(f'Generators are known mod {g.p}^{g.M}; cannot count mod {g.p}^{n}')
    order = len(closure(g.reduced(n), g.h, g.p ** n, budget))
    logger.debug(f'|I_{n}| = {order} for {g.label or "generator set"}')
    return order


def gl_order(h, p, n):
    """
    |GL_h(Z/p^n)| = p^((n-1)h^2) * prod_(i<h) (p^h - p^i).
    """
    order = p ** ((n - 1) * h * h)
    for i in range(h):
        order *= p ** h - p ** i
    return order


def count_series(g, n_max, budget=None):
    """
    The series (n, |I_n|) for n = 1..n_max.

    :raises Mismatch: some |I_n| fails to divide |GL_h(Z/p^n)| or |I_(n+1)|
    """
    if n_max > g.M:
        raise PrecisionTooLow(f'Generators are known mod {g.p}^{g.M}; cannot count up to {g.p}^{n_max}')
    orders = []
    for n in range(1, n_max + 1):
        order = image_order(g, n, budget)
        if gl_order(g.h, g.p, n) % order:
            raise Mismatch(f'|I_{n}| = {order} does not divide |GL_{g.h}(Z/{g.p}^{n})|')
        if orders and order % orders[-1][1]:
            raise Mismatch(f'|I_{n}| = {order} is not a multiple of |I_{n - 1}| = {orders[-1][1]}')
        orders.append((n, order))
    return CountSeries(p=g.p, orders=orders)


def _omega_reduction_moduli(spec, n):
    # coordinate (i, j) of u^i w^j lives in w^n O iff v_p(c) >= ceil((n - j) / e)
    e, f, p = spec.e, spec.f, spec.p
    return [p ** max(0, -(-(n - j) // e)) for j in range(e) for _ in range(f)]


def image_order_omega(g, spec, n, budget=None):
    """
    Order of the image mod w^n of an A-linear generator set in the regular representation: the closure is taken mod
    p^ceil(n/e) and each element's A-entries (first column of every r x r block) are then reduced mod w^n.
    """
    k = -(-n // spec.e)
    if k > g.M:
        raise PrecisionTooLow(f'Generators are known mod {g.p}^{g.M}; cannot count mod w^{n}')
    r = spec.e * spec.f
    moduli = np.array(_omega_reduction_moduli(spec, n), dtype=object)
    elements = closure(g.reduced(k), g.h, g.p ** k, budget)
    images = set()
    for key in elements:
        matrix = decode(key, g.h)
        entries = []
        for bi in range(spec.h_r):
            for bj in range(spec.h_r):
                column = np.array(matrix[bi * r:(bi + 1) * r, bj * r].tolist(), dtype=object)
                entries.extend(int(v) for v in column % moduli)
        images.add(tuple(entries))
    logger.debug(f'|I_(w^{n})| = {len(images)} for {g.label or "generator set"}')
    return len(images)


def omega_count_series(g, spec, n_max, budget=None):
    return CountSeries(p=g.p, orders=[(n, image_order_omega(g, spec, n, budget)) for n in range(1, n_max + 1)],
                       filtration='omega')
