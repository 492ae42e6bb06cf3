"""Stiefel orthoplex code (SOC) constructions.

An SOC is a code with n > m*d*r + 1 points meeting the orthoplex bound
sqrt(2r); equivalently all pairwise Re Tr(X_i* X_j) <= 0 with some pair at
exactly 0.  Complex SOCs exist for every n in (2dr+1, 4dr] via a group
orbit; real ones come from the sphere orthoplex (r = 1) or from circulant
shifts of sign-diagonal matrices driven by a Plotkin-cap binary code.
"""

from __future__ import annotations

import numpy as np

from .binary import plotkin_optimal_code
from .core import Field, StiefelCode
from .errors import InfeasibleParameters, InvalidParameter

__all__ = ["soc_complex_orbit", "soc_sphere_real", "soc_real_hadamard"]


def _shift_matrix(d: int) -> np.ndarray:
    """Circular translation T with T e_k = e_(k+1 mod d)."""
    return np.roll(np.eye(d), 1, axis=0)


def soc_complex_orbit(d: int, r: int, n: int) -> StiefelCode:
    """Complex (d, r, n)-SOC for n in (2dr+1, 4dr].

    The code is the orbit of X0 = [I_r; 0] under (a, b, c) . X = i^a T^b X M^-c,
    where T is the circular row shift and M the diagonal modulation by r-th
    roots of unity; the first n elements in lexicographic (a, b, c) order are
    returned.  The only nonzero values of Re Tr between orbit elements are
    +-r (at X and -X), so every pair is at distance sqrt(2r) or 2 sqrt(r).
    """
    if d < r or r < 1:
        raise InvalidParameter(f"need d >= r >= 1, got ({d}, {r})")
    if not (2 * d * r + 1 < n <= 4 * d * r):
        raise InfeasibleParameters(
            f"complex orthoplex codes need n in ({2 * d * r + 1}, {4 * d * r}], got {n}"
        )
    x0 = np.zeros((d, r), dtype=np.complex128)
    x0[:r, :r] = np.eye(r)
    t = _shift_matrix(d).astype(np.complex128)
    phases = np.exp(2j * np.pi * np.arange(1, r + 1) / r)
    quarter_turns = (1.0, 1.0j, -1.0, -1.0j)
    mats = []
    for a in range(4):
        tb = np.eye(d, dtype=np.complex128)
        for b in range(d):
            base = quarter_turns[a] * (tb @ x0)
            for c in range(r):
                mats.append(base * phases**-c)
                if len(mats) == n:
                    return StiefelCode(Field.COMPLEX, np.stack(mats))
            tb = t @ tb
    return StiefelCode(Field.COMPLEX, np.stack(mats))


def soc_sphere_real(d: int, n: int) -> StiefelCode:
    """Real (d, 1, n)-SOC for n in (d+1, 2d]: vertices of the coordinate
    orthoplex, interleaved as e1, -e1, e2, -e2, ... so any prefix stays
    sign-balanced."""
    if d < 1:
        raise InvalidParameter(f"need d >= 1, got {d}")
    if not (d + 1 < n <= 2 * d):
        raise InfeasibleParameters(f"needs n in ({d + 1}, {2 * d}], got {n}")
    mats = np.zeros((n, d, 1))
    for t in range(n):
        mats[t, t // 2, 0] = 1.0 if t % 2 == 0 else -1.0
    return StiefelCode(Field.REAL, mats)


def soc_real_hadamard(d: int, r: int) -> StiefelCode:
    """Real (d, r, n)-SOC with n = d * plotkin_cap(r), for r != 1 (mod 4).

    Each word c of a Plotkin-cap binary code gives a sign-diagonal d x r
    matrix D_c with D_c[i, i] = (-1)^c_i; the code is {T^a D_c} over all
    circular shifts a and words c.  Distinct shifts give trace 0 exactly;
    equal shifts give trace r - 2 * hamming(c, c') <= 0.
    """
    if d < r or r < 2:
        raise InvalidParameter(f"need d >= r >= 2, got ({d}, {r})")
    code = plotkin_optimal_code(r)  # raises UnsupportedResidue for r = 1 (mod 4)
    signs = 1.0 - 2.0 * code.words.astype(np.float64)
    base = np.zeros((code.size, d, r))
    for w in range(code.size):
        base[w, :r, :] = np.diag(signs[w])
    mats = np.empty((d * code.size, d, r))
    t = _shift_matrix(d)
    ta = np.eye(d)
    for a in range(d):
        mats[a * code.size : (a + 1) * code.size] = np.einsum("de,wer->wdr", ta, base)
        ta = t @ ta
    return StiefelCode(Field.REAL, mats)
