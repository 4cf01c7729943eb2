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
from pitower.errors import ShapeMismatch


def s_combine(a, b, kind):
    """
    Truncated sum or product of two series of the same kind, ring and truncation. Precision floors propagate as
    the minimum over every contributing coefficient.

    :param kind: 'add' or 'mul'
    :raises ShapeMismatch: different kinds or truncations
    """
    if type(a) is not type(b):
        raise ShapeMismatch(f'Cannot combine {type(a).__name__} with {type(b).__name__}')
    if kind == 'add':
        return a._add(b)
    if kind == 'mul':
        return a._mul(b)
    raise ValueError(f'Unknown series operation {kind}')


def s_compose(outer, inner):
    """
    outer(inner) truncated at inner's truncation; inner may be one- or two-variable.
    """
    return outer.compose(inner)


def weierstrass_degree(s):
    return s.weierstrass_degree()


def reversion(s):
    return s.reversion()
