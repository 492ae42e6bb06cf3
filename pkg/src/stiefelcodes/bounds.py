"""Closed-form distance bounds and existence caps for Stiefel codes.

The simplex bound caps the minimum chordal distance of any n-point code at
sqrt(2rn/(n-1)); equality forces an equiangular, centered configuration and
is possible only for n <= m*d*r + 1.  Past that cap the orthoplex bound
takes over: min distance <= sqrt(2r), achievable only for n <= 2*m*d*r.

Bounds are evaluated in double precision.  The *_sq companions return the
squared values, which certification compares against exact rational targets
to avoid square-root round-off.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import Field
from .errors import InvalidParameter, UnsupportedResidue


class BoundKind(enum.Enum):
    SIMPLEX = "Simplex"
    ORTHOPLEX = "Orthoplex"


@dataclass(frozen=True)
class BoundResult:
    """A distance bound together with the largest n at which equality can hold."""

    value: float
    max_n: int
    kind: BoundKind


def simplex_bound_sq(r: int, n: int) -> float:
    """Squared simplex bound 2rn/(n-1)."""
    if r < 1:
        raise InvalidParameter(f"need r >= 1, got {r}")
    if n < 2:
        raise InvalidParameter(f"need n >= 2, got {n}")
    return 2.0 * r * n / (n - 1)


def simplex_bound(r: int, n: int) -> float:
    """Upper bound sqrt(2rn/(n-1)) on the min distance of an n-point code."""
    return math.sqrt(simplex_bound_sq(r, n))


def simplex_cap(field: Field, d: int, r: int) -> int:
    """Largest n for which the simplex bound can be met: m*d*r + 1."""
    if d < r or r < 1:
        raise InvalidParameter(f"need d >= r >= 1, got ({d}, {r})")
    return field.m * d * r + 1


def orthoplex_bound_sq(r: int) -> float:
    """Squared orthoplex bound 2r."""
    if r < 1:
        raise InvalidParameter(f"need r >= 1, got {r}")
    return 2.0 * r


def orthoplex_bound(r: int) -> float:
    """Upper bound sqrt(2r), in force once n exceeds the simplex cap."""
    return math.sqrt(orthoplex_bound_sq(r))


def orthoplex_cap(field: Field, d: int, r: int) -> int:
    """Largest n for which the orthoplex bound can be met: 2*m*d*r."""
    if d < r or r < 1:
        raise InvalidParameter(f"need d >= r >= 1, got ({d}, {r})")
    return 2 * field.m * d * r


def simplex_result(field: Field, d: int, r: int, n: int) -> BoundResult:
    """Simplex bound for n points bundled with its existence cap."""
    return BoundResult(simplex_bound(r, n), simplex_cap(field, d, r), BoundKind.SIMPLEX)


def orthoplex_result(field: Field, d: int, r: int) -> BoundResult:
    """Orthoplex bound (independent of n) bundled with its existence cap."""
    return BoundResult(orthoplex_bound(r), orthoplex_cap(field, d, r), BoundKind.ORTHOPLEX)


def radon_hurwitz(field: Field, d: int) -> int:
    """Radon-Hurwitz number: the maximum dimension of a real subspace of
    d x d matrices over the field whose unit sphere consists of scalar
    multiples of orthogonal (resp. unitary) matrices.

    Writing d = odd * 2^(4b+c) with 0 <= c <= 3, the value is 8b + 2^c over
    the reals and 8b + 2c + 2 over the complexes.  It depends only on the
    2-adic valuation of d.
    """
    if d < 1:
        raise InvalidParameter(f"need d >= 1, got {d}")
    v = (d & -d).bit_length() - 1  # 2-adic valuation
    b, c = divmod(v, 4)
    if field is Field.REAL:
        return 8 * b + (1 << c)
    return 8 * b + 2 * c + 2


def plotkin_cap(r: int) -> int:
    """Max size of a binary code of length r with min Hamming distance >= r/2.

    2r, r+2, or r+1 for r = 0, 2, 3 (mod 4).  No value is defined for
    r = 1 (mod 4), which the downstream construction excludes.
    """
    if r < 2:
        raise InvalidParameter(f"need r >= 2, got {r}")
    residue = r % 4
    if residue == 0:
        return 2 * r
    if residue == 2:
        return r + 2
    if residue == 3:
        return r + 1
    raise UnsupportedResidue(f"no cap for r = {r} = 1 (mod 4)")
