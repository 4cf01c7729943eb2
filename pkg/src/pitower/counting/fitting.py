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
from fractions import Fraction

from pitower.counting.DimFit import DimFit
from pitower.errors import NonMultiplicativeSeries, RelationViolated, ValidationError
from pitower.rings.modular import exact_log

logger = logging.getLogger('fitting')
logger.level = logging.DEBUG


def _exponents(cs, base):
    exponents = []
    for (n, a), (_, b) in zip(cs.orders, cs.orders[1:]):
        if a <= 0 or b % a:
            raise NonMultiplicativeSeries(f'|I_{n + 1}| = {b} is not a multiple of |I_{n}| = {a}')
        d = exact_log(base, b // a)
        if d is None:
            raise NonMultiplicativeSeries(f'Ratio |I_{n + 1}|/|I_{n}| = {b // a} is not a power of {base}')
        exponents.append(d)
    return exponents


def fit_dimension(cs, base=None):
    """
    Fits |I_n| = vol * base^(n*d). d is declared once the ratio |I_(n+1)|/|I_n| takes the same value base^d for at
    least two consecutive steps through the end of the series; n0 is the first level from which the law holds.

    :param base: p (default) or q = p^f for counts along the w-filtration
    :raises ValidationError: fewer than three levels
    :raises NonMultiplicativeSeries: some ratio is not an integral power of base
    """
    base = cs.p if base is None else base
    if len(cs) < 3:
        raise ValidationError(f'A dimension fit needs at least 3 levels, got {len(cs)}')
    exponents = _exponents(cs, base)
    last = exponents[-1]

    start = len(exponents) - 1
    while start > 0 and exponents[start - 1] == last:
        start -= 1
    stable = len(exponents) - start >= 2
    if not stable:
        start = len(exponents) - 1

    n0, order = cs.orders[start]
    vol = Fraction(order, base ** (n0 * last))
    logger.debug(f'Fit d={last}, vol={vol}, n0={n0}, stable={stable} for ratios {exponents}')
    return DimFit(d=last, vol=vol, n0=n0, stable=stable, base=base)


def fit_dimension_over_O(cs_omega, spec, qp_fit):
    """
    Fits the w-filtration counts against q = p^f, giving d_A with |Y_n| = vol * p^(n*d_A*f), and checks the
    relation e * d_A * f = d against the Z_p-side fit.

    :raises RelationViolated: e * d_A * f != d
    """
    fit = fit_dimension(cs_omega, base=spec.p ** spec.f)
    relation = {'e': spec.e, 'f': spec.f, 'd_A': fit.d, 'd': qp_fit.d,
                'pass': spec.e * fit.d * spec.f == qp_fit.d}
    if not relation['pass']:
        raise RelationViolated(f'e*d_A*f = {spec.e}*{fit.d}*{spec.f} differs from d = {qp_fit.d}')
    return fit, relation


def interleaving_check(cs1, cs2, c):
    """
    |I_n(1)| <= |I_(n+c)(2)| and |I_n(2)| <= |I_(n+c)(1)| wherever both levels are present.
    """
    first, second = dict(cs1.orders), dict(cs2.orders)
    for n in sorted(set(first) & set(second)):
        if n + c in second and first[n] > second[n + c]:
            return False
        if n + c in first and second[n] > first[n + c]:
            return False
    return True
