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

from pitower.errors import NotPPower, Mismatch
from pitower.formal.HeightResult import HeightResult
from pitower.rings.modular import floor_log, exact_log

logger = logging.getLogger('heights')


def height_of(law):
    """
    Height read off the first unit coefficient of [pi]: FINITE(h) when it sits at p^h, LOWER_BOUND(floor(log_p D))
    when [pi] has no unit coefficient up to D.

    :raises NotPPower: the first unit index is not a power of p
    """
    p = law.ring.p
    w = law.bracket_pi().weierstrass_degree()
    if w is None:
        return HeightResult.lower_bound(floor_log(p, law.D))
    h = exact_log(p, w)
    if h is None:
        raise NotPPower(f'First unit coefficient of [pi] is at index {w}, which is not a power of {p}')
    logger.debug(f'Weierstrass degree of [pi] is {w} = {p}^{h}')
    return HeightResult.finite(h)


def zp_height_check(law):
    """
    Height of the law as a Z_p-module: the Weierstrass degree of [p] must be p^(e*h). Returns e*h.

    :raises Mismatch: [p] has a different Weierstrass degree (or the height is not finite)
    """
    height = height_of(law)
    ring = law.ring
    if not height.is_finite:
        raise Mismatch(f'Z_p-height is undefined for a law of height {height}')
    expected = ring.e * height.h
    w = law.bracket(ring.p).weierstrass_degree()
    if w != ring.p ** expected:
        raise Mismatch(f'Weierstrass degree of [p] is {w}, expected {ring.p}^{expected}')
    return expected


def divisibility_check(law):
    """
    True iff [pi] is a finite map, i.e. has a unit coefficient within the truncation.
    """
    return law.bracket_pi().weierstrass_degree() is not None
