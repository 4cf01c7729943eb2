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
import math
from fractions import Fraction

from pitower.errors import TruncationTooSmall, NoUnitCoefficient, NotFullHeight, Mismatch
from pitower.formal import height_of
from pitower.series import Series1
from pitower.torsion.NewtonPolygon import NewtonPolygon
from pitower.torsion.TorsionProfile import TorsionProfile
from pitower.torsion.TowerReport import TowerReport, TowerLevel

logger = logging.getLogger('torsion')
logger.level = logging.DEBUG


def _finite_height(law, n):
    height = height_of(law)
    p = law.ring.p
    if not height.is_finite:
        raise TruncationTooSmall(f'[pi] has no unit coefficient up to D={law.D}; torsion of level {n} is not visible')
    if p ** (n * height.h) > law.D:
        raise TruncationTooSmall(f'[pi^{n}] needs truncation {p}^{n * height.h} > D={law.D}')
    return height.h


def iterate_bracket(law, n):
    """
    [pi^n] = [pi]([pi^(n-1)]) truncated at D.

    :raises TruncationTooSmall: p^(nh) > D
    """
    _finite_height(law, n)
    result = Series1.identity(law.ring, law.D)
    bracket_pi = law.bracket_pi()
    for level in range(n):
        result = bracket_pi.compose(result)
        logger.debug(f'[pi^{level + 1}] composed at D={law.D}')
    return result


def primitive_quotient(law, n):
    """
    [pi^n] / [pi^(n-1)] without dividing: with [pi](T) = T E(T), the quotient is E([pi^(n-1)]). The result is
    truncated at D-1.
    """
    _finite_height(law, n)
    inner = iterate_bracket(law, n - 1).truncate(law.D - 1)
    return law.bracket_pi().shift_down().compose(inner)


def newton_polygon(s):
    """
    Newton polygon of the distinguished part of s: the points (i, v(a_i)) for i up to the Weierstrass degree w,
    skipping coefficients that vanish at precision.

    :raises NoUnitCoefficient: s has no unit coefficient up to its truncation
    """
    w = s.weierstrass_degree()
    if w is None:
        raise NoUnitCoefficient(f'Series has no unit coefficient up to D={s.D}')
    valuations = s.ring.valuations(s.coeffs[:w + 1])
    points = [(i, v.value) for i, v in enumerate(valuations) if not v.is_infinite]
    return NewtonPolygon.from_points(points)


def torsion_profile(law, n):
    """
    Order of F[pi^n], the primitive degree and the valuations of primitive pi^n-torsion points with the
    ramification they certify.

    :raises Mismatch: the Weierstrass degree of [pi^n] is not p^(nh)
    """
    ring = law.ring
    if n == 0:
        return TorsionProfile(level=0, order=1, wdeg=1, primitive_degree=0)
    h = _finite_height(law, n)
    p = ring.p

    wdeg = iterate_bracket(law, n).weierstrass_degree()
    if wdeg != p ** (n * h):
        raise Mismatch(f'Weierstrass degree of [pi^{n}] is {wdeg}, expected {p}^{n * h}')

    polygon = newton_polygon(primitive_quotient(law, n))
    roots = polygon.root_valuations()
    primitive_degree = wdeg - p ** ((n - 1) * h)
    if sum(m for _, m in roots) != primitive_degree:
        raise Mismatch(f'Primitive quotient of level {n} has {sum(m for _, m in roots)} roots, '
                       f'expected {primitive_degree}')

    ram = 1
    for v, _ in roots:
        ram = math.lcm(ram, v.denominator)

    order_shape = ring.q ** (n * h // ring.f) if h % ring.f == 0 else None
    return TorsionProfile(level=n, order=wdeg, wdeg=wdeg, primitive_degree=primitive_degree,
                          root_valuations=roots,
                          root_valuations_p=[(v / ring.e, m) for v, m in roots],
                          ram_lower_bound=ram,
                          shape_ok=order_shape is None or order_shape == wdeg)


def height_factorisation_check(law, mu, nu):
    """
    wdeg([pi^(mu+nu)]) = wdeg([pi^mu]) * wdeg([pi^nu]).
    """
    wdeg = {k: iterate_bracket(law, k).weierstrass_degree() for k in {mu, nu, mu + nu}}
    return wdeg[mu + nu] == wdeg[mu] * wdeg[nu]


def min_generators(d, h):
    """
    Least m compatible with d <= h*m.
    """
    return -(-d // h)


def generator_bound_check(d, h, m):
    """
    True iff d <= h*m.
    """
    if min(d, h, m) < 1:
        raise ValueError(f'Generator bound check needs positive integers, got d={d}, h={h}, m={m}')
    return d <= h * m


def _generator_record(d, h, m, expected_m=None):
    return {'d': d, 'h': h, 'm': m, 'min_m': min_generators(d, h),
            'expected_m': None if expected_m is None else str(expected_m),
            'pass': generator_bound_check(d, h, m)}


def certified_tower(law, levels):
    """
    Tower report with Newton polygon certified ramification bounds only.
    """
    height = _finite_height(law, levels)
    report = TowerReport(q=law.ring.q, height=height, full_height=False)
    for n in range(1, levels + 1):
        profile = torsion_profile(law, n)
        report.levels.append(TowerLevel(n=n, torsion_order=profile.order, primitive_count=profile.primitive_degree,
                                        certified_bound=profile.ram_lower_bound))
    report.checks['torsion_orders'] = all(level.torsion_order == law.ring.p ** (level.n * height)
                                          for level in report.levels)
    return report


def full_height_tower(law, levels):
    """
    Division tower of a full-height (h = f) law: the predicted degree of level n is |O^x / (1 + pi^n O)| =
    (q-1)q^(n-1). Each level is cross-checked against the Newton polygon bound, the d <= h*m generator bound with
    m = 1, the O-generator count m_pi(n) = 1, and the shape |G_(n,k)| = q^(n-k) of the kernel quotients.

    :raises NotFullHeight: h != f
    """
    ring = law.ring
    q, e, f = ring.q, ring.e, ring.f
    height = height_of(law)
    if height.pi_height(f) != 1:
        raise NotFullHeight(f'Law of height {height} is not of full height over a ring with f={f}')
    h = height.h

    report = TowerReport(q=q, height=h, full_height=True)
    for n in range(1, levels + 1):
        profile = torsion_profile(law, n)
        predicted = (q - 1) * q ** (n - 1)
        level = TowerLevel(n=n, torsion_order=profile.order, primitive_count=profile.primitive_degree,
                           certified_bound=profile.ram_lower_bound, predicted_degree=predicted)
        level.generator_bound = _generator_record(d=e * f, h=e * f, m=1, expected_m=Fraction(h, f))
        level.pi_generators = {'m_pi': 1, 'h': h, 'f': f, 'pass': h == f}
        report.levels.append(level)
        logger.debug(f'Tower level {n}: order {profile.order}, predicted {predicted}, '
                     f'certified {profile.ram_lower_bound}')

    predicted = {level.n: level.predicted_degree for level in report.levels}
    for level in report.levels:
        n = level.n
        for k in range(1, n + 1):
            if n - k <= k:
                ok = predicted[n] % predicted[k] == 0 and predicted[n] // predicted[k] == q ** (n - k)
                level.shape_checks.append({'k': k, 'size': str(q ** (n - k)), 'pass': ok})

    report.checks['torsion_orders'] = all(level.torsion_order == q ** level.n for level in report.levels)
    report.checks['certified_divides_predicted'] = all(level.bound_divides for level in report.levels)
    report.checks['predicted_ratios'] = all(predicted[n + 1] == q * predicted[n] for n in range(1, levels))
    report.checks['generator_bound'] = all(level.generator_bound['pass'] for level in report.levels)
    report.checks['pi_generators'] = all(level.pi_generators['pass'] for level in report.levels)
    report.checks['kernel_shapes'] = all(c['pass'] for level in report.levels for c in level.shape_checks)
    return report
