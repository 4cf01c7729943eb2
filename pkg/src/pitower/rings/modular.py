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
"""
Dense modular kernels shared by the ring and series layers. Coefficient arrays hold integers reduced mod p^N. They
are stored as int64 while a single product of two residues fits in 63 bits, and as Python-int object arrays
otherwise. Convolutions fall back to object arithmetic whenever an int64 accumulator could overflow.
"""
import numpy as np
import scipy.signal

INT64_ELEMENT_LIMIT = 1 << 31
INT64_ACCUMULATOR_LIMIT = 1 << 63


def coefficient_dtype(modulus):
    return np.int64 if modulus < INT64_ELEMENT_LIMIT else object


def zeros(shape, modulus):
    dtype = coefficient_dtype(modulus)
    if dtype is object:
        result = np.empty(shape, dtype=object)
        result.fill(0)
        return result
    return np.zeros(shape, dtype=dtype)


def as_coefficients(values, modulus):
    """
    Converts a nested list (or array) of integers into a reduced coefficient array of the proper dtype.
    """
    dtype = coefficient_dtype(modulus)
    if dtype is object:
        arr = np.array(values, dtype=object)
        return np.vectorize(lambda v: int(v) % modulus, otypes=[object])(arr) if arr.size else arr
    arr = np.array([int(v) % modulus for v in np.ravel(np.array(values, dtype=object))], dtype=np.int64)
    return arr.reshape(np.shape(values))


def convolve_mod(a, b, modulus):
    """
    Full 1-D convolution of two residue vectors, reduced mod modulus.

    :param a: 1-D coefficient array
    :param b: 1-D coefficient array
    :param modulus: the ring modulus p^N
    :return: an array of length len(a) + len(b) - 1 with the dtype of a
    """
    terms = min(len(a), len(b))
    if a.dtype == object or b.dtype == object or terms * (modulus - 1) ** 2 >= INT64_ACCUMULATOR_LIMIT:
        # scipy.signal rejects object arrays
        out = np.convolve(a.astype(object), b.astype(object)) % modulus
        return out if a.dtype == object else out.astype(np.int64)
    return scipy.signal.convolve(a, b, method='direct') % modulus


def ring_convolve(left, right, table, modulus, length):
    """
    Truncated product of two coefficient arrays whose last axis holds ring coordinates.

    :param left: array of shape (L1, r)
    :param right: array of shape (L2, r)
    :param table: structure constants, table[a, b] = coordinates of basis_a * basis_b
    :param modulus: the ring modulus
    :param length: number of leading coefficients to keep
    :return: array of shape (length, r)
    """
    r = left.shape[1]
    out = zeros((length, r), modulus)
    for a in range(r):
        col_a = left[:, a]
        if not col_a.any():
            continue
        for b in range(r):
            col_b = right[:, b]
            if not col_b.any():
                continue
            c = convolve_mod(col_a, col_b, modulus)[:length]
            n = len(c)
            out[:n] = (out[:n] + (c[:, None] * table[a, b][None, :]) % modulus) % modulus
    return out


def apply_matrix(coefficients, matrix, modulus):
    """
    Multiplies every coordinate row of coefficients (shape (..., r)) by a ring element given through its
    multiplication matrix (matrix[k, a] = coordinate k of x * basis_a).
    """
    r = coefficients.shape[-1]
    out = zeros(coefficients.shape, modulus)
    for a in range(r):
        col = coefficients[..., a]
        if not col.any():
            continue
        out = (out + (col[..., None] * matrix[:, a]) % modulus) % modulus
    return out


def p_valuations(values, p, cap):
    """
    Elementwise p-adic valuation of non-negative integers, with zero mapped to cap.
    """
    values = np.asarray(values)
    result = np.zeros(values.shape, dtype=np.int64)
    current = values.copy()
    alive = current != 0
    result[~alive] = cap
    while alive.any():
        divisible = alive & (current % p == 0)
        if not divisible.any():
            break
        result[divisible] += 1
        current = np.where(divisible, current // p, current)
        alive = divisible
    return result


def floor_log(p, n):
    """
    Largest b with p^b <= n (0 when n < p).
    """
    b = 0
    while p ** (b + 1) <= n:
        b += 1
    return b


def exact_log(p, n):
    """
    b with p^b = n, or None when n is not a power of p.
    """
    b = floor_log(p, n)
    return b if p ** b == n else None
