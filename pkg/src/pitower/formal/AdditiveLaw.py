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
from pitower.formal.FormalModuleLaw import FormalModuleLaw
from pitower.series import Series1, Series2


class AdditiveLaw(FormalModuleLaw):
    """
    The additive formal group F = X + Y with [a](X) = aX. Its [pi] has no unit coefficient, so its height is only
    ever reported as a lower bound.
    """
    kind = 'additive'

    def __init__(self, ring, D, group_degree=None):
        super().__init__(ring, D, group_degree)
        self._F = Series2.from_terms(ring, self.group_degree, {(1, 0): 1, (0, 1): 1})

    @property
    def F(self):
        return self._F

    @property
    def pi(self):
        return self.ring.uniformizer

    def _compute_bracket(self, a):
        return Series1.from_terms(self.ring, self.D, {1: a})


def additive_law(ring, D, group_degree=None):
    return AdditiveLaw(ring, D, group_degree)
