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
from dataclasses import dataclass, field

import numpy as np
import sympy

from pitower.errors import ValidationError, ParseError


def matrix_dtype(h, modulus):
    """
    int64 while a row-by-column sum of h products of residues cannot overflow, Python ints otherwise.
    """
    return np.int64 if h * (modulus - 1) ** 2 < (1 << 63) else object


@dataclass
class MatrixGenSet:
    """
    A finite set of h x h integer matrices, entries mod p^M and each invertible mod p, standing for the (dense,
    finitely generated model of the) closed subgroup of GL_h(Z_p) they generate.
    """
    h: int
    M: int
    p: int
    gens: list = field(default_factory=list)
    label: str = ''

    def __post_init__(self):
        modulus = self.p ** self.M
        dtype = matrix_dtype(self.h, modulus)
        checked = []
        for g in self.gens:
            g = np.array([[int(v) % modulus for v in row] for row in np.asarray(g, dtype=object).tolist()],
                         dtype=dtype)
            if g.shape != (self.h, self.h):
                raise ValidationError(f'Generator of shape {g.shape} in a set of {self.h}x{self.h} matrices')
            if int(sympy.Matrix(g.tolist()).det()) % self.p == 0:
                raise ValidationError(f'Generator {g.tolist()} is not invertible mod {self.p}')
            checked.append(g)
        self.gens = checked

    @property
    def modulus(self):
        return self.p ** self.M

    def reduced(self, n):
        """
        Generators reduced mod p^n, in the dtype suited to that modulus.
        """
        modulus = self.p ** n
        dtype = matrix_dtype(self.h, modulus)
        return [np.array((g % modulus).tolist(), dtype=dtype) for g in self.gens]

    def conjugated(self, C):
        """
        The generators C g C^-1 for a matrix C invertible mod p.
        """
        C_sym = sympy.Matrix(np.asarray(C, dtype=object).tolist())
        C_inv = C_sym.inv_mod(self.modulus)
        gens = [(C_sym * sympy.Matrix(g.tolist()) * C_inv).applyfunc(lambda v: v % self.modulus).tolist()
                for g in self.gens]
        return MatrixGenSet(self.h, self.M, self.p, gens, f'{self.label} (conjugated)')

    def to_dict(self):
        return {'h': self.h, 'M': self.M, 'p': self.p, 'label': self.label,
                'gens': [[[int(v) for v in row] for row in g.tolist()] for g in self.gens]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(h=int(data['h']), M=int(data['M']), p=int(data['p']), gens=data['gens'],
                       label=data.get('label', ''))
        except (KeyError, TypeError) as ex:
            raise ParseError(f'Malformed generator document: {ex}')
