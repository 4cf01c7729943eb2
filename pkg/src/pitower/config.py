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

import os
from pathlib import Path

from pitower.errors import ValidationError

config = {
    'working_dir': os.environ.get('PITOWER_HOME', str(Path.home() / '.pitower')),
    'cache_laws': True,
    'precision': {
        'default_N': 12,
    },
    'series': {
        # two-variable laws are dense in total degree, so they stay small
        'max_group_degree': 24,
        'max_degree': 2500,
    },
    'counting': {
        'budget': 10 ** 7,
        'default_nmax': 4,
    },
    'catalog': [
        {'label': 'Z3^x', 'ring': {'p': 3, 'f': 1, 'unram': [0, 1], 'eis': [-3, 1]}, 'h_r': 1, 'nmax': 4},
        {'label': 'GL2(Z3)', 'ring': {'p': 3, 'f': 1, 'unram': [0, 1], 'eis': [-3, 1]}, 'h_r': 2, 'nmax': 3},
        {'label': 'Z9^x', 'ring': {'p': 3, 'f': 2, 'unram': [-1, -1, 1], 'eis': [-3, 1]}, 'h_r': 1, 'nmax': 4},
        {'label': 'Z2[sqrt2]^x', 'ring': {'p': 2, 'f': 1, 'unram': [0, 1], 'eis': [-2, 0, 1]}, 'h_r': 1,
         'nmax': 5},
        {'label': 'Z4^x', 'ring': {'p': 2, 'f': 2, 'unram': [1, 1, 1], 'eis': [-2, 1]}, 'h_r': 1, 'nmax': 4},
    ],
}


def enumeration_budget():
    """
    Returns the maximum number of group elements a closure enumeration may visit. The PITOWER_BUDGET environment
    variable takes precedence over config['counting']['budget'] and is read on every call.
    """
    value = os.environ.get('PITOWER_BUDGET', config['counting']['budget'])
    try:
        budget = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f'PITOWER_BUDGET must be an integer, got {value!r}')
    if budget < 1:
        raise ValidationError(f'The enumeration budget must be positive, got {budget}')
    return budget
