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
from fractions import Fraction
from functools import total_ordering


@total_ordering
class ValuationValue:
    """
    A valuation normalized so that v(w) = 1 for the uniformizer w, or INFTY when the value is not determined at
    working precision (the element is zero mod p^N).
    """
    __slots__ = ('_value',)

    def __init__(self, value=None):
        self._value = None if value is None else Fraction(value)

    @property
    def is_infinite(self):
        return self._value is None

    @property
    def value(self):
        return self._value

    def __add__(self, other):
        other = other if isinstance(other, ValuationValue) else ValuationValue(other)
        if self.is_infinite or other.is_infinite:
            return INFTY
        return ValuationValue(self._value + other._value)

    def __eq__(self, other):
        if isinstance(other, ValuationValue):
            return self._value == other._value
        if self.is_infinite:
            return False
        return self._value == other

    def __lt__(self, other):
        other = other if isinstance(other, ValuationValue) else ValuationValue(other)
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self._value < other._value

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        if self.is_infinite:
            return 'INFTY'
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f'{self._value.numerator}/{self._value.denominator}'

    def __repr__(self):
        return f'ValuationValue({self})'


INFTY = ValuationValue(None)
