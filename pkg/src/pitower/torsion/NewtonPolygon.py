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
from dataclasses import dataclass
from fractions import Fraction

from pitower.rationals import format_rational


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    """
    Lower convex hull of the points (i, v(a_i)). vertices are (index, valuation) pairs and segments are
    (slope, horizontal length) pairs with strictly increasing slopes.
    """
    vertices: tuple
    segments: tuple

    @classmethod
    def from_points(cls, points):
        """
        :param points: (index, valuation) pairs with distinct indices and finite rational valuations
        """
        hull = []
        for point in sorted((int(i), Fraction(v)) for i, v in points):
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
                hull.pop()
            hull.append(point)
        segments = tuple((Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0]) for a, b in zip(hull, hull[1:]))
        return cls(tuple(hull), segments)

    def root_valuations(self):
        """
        (valuation, multiplicity) of the roots of the polynomial part, one pair per segment: roots have valuation
        -slope and there are as many as the segment is long.
        """
        return [(-slope, length) for slope, length in self.segments]

    @property
    def width(self):
        if not self.vertices:
            return 0
        return self.vertices[-1][0] - self.vertices[0][0]

    def to_dict(self):
        return {
            'vertices': [[i, format_rational(v)] for i, v in self.vertices],
            'segments': [[format_rational(s), n] for s, n in self.segments],
        }
