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

from pitower.counting.MatrixGenSet import MatrixGenSet, matrix_dtype
from pitower.counting.OrderSpec import OrderSpec
from pitower.counting.enumeration import closure, encode
from pitower.rings import LocalRingSpec

logger = logging.getLogger('embedding')


def unit_generators(ring, start_level=0):
    """
    Topological generators of A^x (start_level=0) or of 1 + w^k A (start_level=k >= 1): the Teichmueller lift
    of a generator of the residue field, -1 when p = 2, and 1 + u^i w^k for start_level <= k <= start_level +
    floor(e/(p-1)) + e. Above that level the p-th powers of lower generators fill the filtration.
    """
    p, e, f = ring.p, ring.e, ring.f
    gens = []
    if start_level == 0:
        if ring.q > 2:
            gens.append(ring.teichmueller(1))
        if p == 2:
            gens.append(ring.from_int(-1))
    first = max(start_level, 1)
    last = first + e // (p - 1) + e
    w = ring.uniformizer
    for k in range(first, last + 1):
        wk = w ** k
        for i in range(f):
            gens.append(ring.one + ring.u ** i * wk)
    return gens


def _block(ring, entries):
    """
    Block matrix of the regular representation of a square matrix of ring elements.
    """
    return np.block([[ring.mult_matrix(x) for x in row] for row in entries])


def scalar_matrix(ring, x, h_r):
    return _block(ring, [[x if i == j else ring.zero for j in range(h_r)] for i in range(h_r)])


def embed_order(spec: OrderSpec, M):
    """
    Generators mod p^M of GL_(h_r)(A) (or of A^x when h_r = 1) in GL_h(Z_p). For A = Z_p with p odd the unit group
    is procyclic and a single primitive root is returned.
    """
    ring = spec.ring(M)
    h_r = spec.h_r
    units = unit_generators(ring)
    if ring.e == 1 and ring.f == 1 and ring.p > 2:
        units = [units[0] * units[1]]

    gens = []
    if h_r == 1:
        gens = [ring.mult_matrix(x) for x in units]
    else:
        def identity_with(changes):
            entries = [[ring.one if i == j else ring.zero for j in range(h_r)] for i in range(h_r)]
            for (i, j), x in changes.items():
                entries[i][j] = x
            return _block(ring, entries)

        for x in units:
            gens.append(identity_with({(0, 0): x}))
        basis = [ring.element([1 if t == s else 0 for t in range(ring.degree)]) for s in range(ring.degree)]
        for i in range(h_r):
            for j in range(h_r):
                if i != j:
                    for b in basis:
                        gens.append(identity_with({(i, j): b}))
        for i in range(h_r - 1):
            gens.append(identity_with({(i, i): ring.zero, (i + 1, i + 1): ring.zero,
                                       (i, i + 1): ring.one, (i + 1, i): ring.one}))

    label = spec.label or (f'A^x (p={ring.p}, f={ring.f}, e={ring.e})' if h_r == 1 else
                           f'GL_{h_r}(A) (p={ring.p}, f={ring.f}, e={ring.e})')
    logger.debug(f'Embedded {label}: {len(gens)} generators of size {spec.h}')
    return MatrixGenSet(h=spec.h, M=M, p=ring.p, gens=gens, label=label)


def gl_generators(h, p, M):
    """
    Generators of GL_h(Z/p^M) as integer matrices.
    """
    return embed_order(OrderSpec(LocalRingSpec.create(p, N=M), h_r=h, label=f'GL_{h}(Z_{p})'), M)


def sl_generators(h, p, M):
    """
    The elementary matrices I + E_ij, which generate SL_h(Z/p^M).
    """
    gens = []
    for i in range(h):
        for j in range(h):
            if i != j:
                g = np.eye(h, dtype=np.int64)
                g[i, j] = 1
                gens.append(g)
    return MatrixGenSet(h=h, M=M, p=p, gens=gens, label=f'SL_{h}(Z_{p})')


def scalar_subgroup_check(spec: OrderSpec, host: MatrixGenSet, k=1):
    """
    True iff, for every n <= M, the image of host mod p^n contains the scalar matrices of 1 + w^k A.
    """
    if host.h != spec.h:
        return False
    ring = spec.ring(host.M)
    scalars = [scalar_matrix(ring, x, spec.h_r) for x in unit_generators(ring, start_level=k)]
    for n in range(1, host.M + 1):
        modulus = host.p ** n
        dtype = matrix_dtype(host.h, modulus)
        elements = closure(host.reduced(n), host.h, modulus)
        for s in scalars:
            if encode(np.array((s % modulus).tolist(), dtype=dtype)) not in elements:
                logger.debug(f'Scalar {s.tolist()} missing from the image mod {host.p}^{n}')
                return False
    return True
