"""The mu-transform family acting on binary functions.

The generator is the 2x2 matrix

    M(mu) = 1/(2*sqrt(2)) * [[sqrt(2)+1+(sqrt(2)-1)*mu, 1-mu],
                             [1-mu, sqrt(2)-1+(sqrt(2)+1)*mu]]

with det M(mu) = mu and M(a)M(b) = M(ab), so composing transforms multiplies
their parameters.  mu = 1 is the identity, mu = -1 a scalar multiple of the
Hadamard transform, and mu = omega (the primitive cube root of unity) the
order-three trinity transform.  Applying the m-th Kronecker power of M(mu)
to a length 2**m vector is done axis by axis in O(m * 2**m); the axis loop
runs over elements in ascending order, which fixes the floating-point
output bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binfun import BinaryFunction, RawVector, as_values, proportional, DEFAULT_TOL
from .errors import SingularTransform

SQRT2 = math.sqrt(2.0)

# Built from literals rather than trig calls so omega**3 == 1 to one ulp.
OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)
OMEGA2 = complex(-0.5, -math.sqrt(3.0) / 2.0)

# The normalized eigenvector of every M(mu) for eigenvalue 1 is (1, ULOOP_RATIO).
ULOOP_RATIO = SQRT2 - 1.0


@dataclass(frozen=True)
class MuMatrix:
    """The generator M(mu) together with its parameter."""

    mu: complex
    entries: np.ndarray

    def __post_init__(self):
        self.entries.flags.writeable = False


def m_matrix(mu: complex) -> MuMatrix:
    mu = complex(mu)
    d = 2.0 * SQRT2
    # Algebraically equal to the displayed form; written as 1 + c*(mu - 1)
    # so that M(1) is the identity exactly, not just to one ulp.
    q = (SQRT2 - 1.0) / d
    p = (SQRT2 + 1.0) / d
    entries = np.array(
        [
            [1.0 + q * (mu - 1.0), (1.0 - mu) / d],
            [(1.0 - mu) / d, 1.0 + p * (mu - 1.0)],
        ],
        dtype=complex,
    )
    return MuMatrix(mu, entries)


def transform(f, mu: complex) -> RawVector:
    """Apply the m-th Kronecker power of M(mu) with the fast axis-wise kernel."""
    m, values = as_values(f)
    v = values.astype(complex, copy=True)
    e = m_matrix(mu).entries
    for axis in range(m):
        w = v.reshape(2**axis, 2, -1)
        a = w[:, 0, :].copy()
        b = w[:, 1, :]
        w[:, 0, :] = e[0, 0] * a + e[0, 1] * b
        w[:, 1, :] = e[1, 0] * a + e[1, 1] * b
    return RawVector(m, v)


def inverse_transform(f, mu: complex) -> RawVector:
    """Invert via the composition law: the inverse of mu is 1/mu."""
    mu = complex(mu)
    if mu == 0:
        raise SingularTransform("M(0) is singular; the transform has no inverse at mu = 0")
    return transform(f, 1.0 / mu)


def self_trial(f: BinaryFunction, tol: float = DEFAULT_TOL) -> bool:
    """True iff the trinity transform fixes f up to a scalar."""
    return proportional(transform(f, OMEGA), f, tol)
