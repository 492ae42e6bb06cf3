"""Stiefel simplex code (SSC) constructions.

An SSC is an n-point code meeting the simplex bound sqrt(2rn/(n-1)):
equivalently, all pairwise Re Tr(X_i* X_j) equal -r/(n-1) and the points sum
to zero.  This module builds them from regular simplices, Hurwitz-Radon
matrix families, regular representations of cyclic groups, symplectic
lifting, resolvable block designs, and the four new-from-old transforms
(complexify, pad a zero row, Kronecker inflate, realify).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Field, StiefelCode
from .designs import BIBD, Resolution, verify_bibd, verify_resolution
from .errors import (
    InfeasibleParameters,
    InvalidParameter,
    NotAnSSC,
    ParameterMismatch,
    UnsupportedDimension,
    WrongField,
)


@dataclass(frozen=True)
class SimplexVertices:
    """n unit vectors in R^dim with all pairwise inner products -1/(n-1)."""

    dim: int
    n: int
    vectors: np.ndarray

    def __post_init__(self):
        v = np.array(self.vectors, dtype=np.float64)
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)


def simplex_vertices(dim: int, n: int) -> SimplexVertices:
    """Vertices of a regular simplex centered at the origin of R^dim.

    Row i collects the i-th coordinates of the Helmert basis of the
    hyperplane orthogonal to the all-ones vector in R^n, rescaled to unit
    norm; the orientation is canonical, so output is deterministic.
    """
    if n < 2:
        raise InvalidParameter(f"need n >= 2, got {n}")
    if n > dim + 1:
        raise InfeasibleParameters(f"no regular {n}-simplex fits in R^{dim}")
    h = np.zeros((n, n - 1))
    for k in range(1, n):
        s = math.sqrt(k * (k + 1))
        h[:k, k - 1] = 1.0 / s
        h[k, k - 1] = -k / s
    verts = np.zeros((n, dim))
    verts[:, : n - 1] = math.sqrt(n / (n - 1)) * h
    return SimplexVertices(dim, n, verts)


def _reals_to_field(field: Field, vecs: np.ndarray, d: int) -> np.ndarray:
    """Reinterpret rows of an (n, m*d) real array as vectors in F^d."""
    if field is Field.REAL:
        return vecs.astype(np.complex128)
    return vecs[:, 0::2] + 1j * vecs[:, 1::2]


def ssc_sphere(field: Field, d: int, n: int) -> StiefelCode:
    """(d, 1, n)-SSC: a regular simplex on the unit sphere of F^d.

    The sphere of F^d is isometric to the sphere of R^(m*d); consecutive
    real coordinate pairs become real/imaginary parts when F = C.
    """
    m = field.m
    if n > m * d + 1:
        raise InfeasibleParameters(f"sphere simplex needs n <= {m * d + 1}, got {n}")
    verts = simplex_vertices(m * d, n).vectors
    cols = _reals_to_field(field, verts, d)
    return StiefelCode(field, cols[:, :, None])


def _certify_ssc(code: StiefelCode) -> None:
    from .verify import Classification, certify

    report = certify(code)
    if report.classification is not Classification.SSC:
        raise NotAnSSC(f"input code certifies as {report.classification.value}, not SSC")


def ssc_complexify(code: StiefelCode) -> StiefelCode:
    """Retag a real SSC as a complex one; entries and distances are unchanged."""
    if code.field is Field.COMPLEX:
        raise WrongField("input is already complex")
    _certify_ssc(code)
    return StiefelCode(Field.COMPLEX, code.array)


def ssc_pad_row(code: StiefelCode) -> StiefelCode:
    """Append a zero row to every point: (d, r, n) -> (d+1, r, n), distances kept."""
    _certify_ssc(code)
    n, d, r = code.array.shape
    out = np.zeros((n, d + 1, r), dtype=np.complex128)
    out[:, :d, :] = code.array
    return StiefelCode(code.field, out)


def ssc_kronecker(code: StiefelCode, k: int) -> StiefelCode:
    """Replace each point X by I_k kron X: (kd, kr, n), squared distances scale by k."""
    if k < 1:
        raise InvalidParameter(f"need k >= 1, got {k}")
    _certify_ssc(code)
    if k == 1:
        return StiefelCode(code.field, code.array)
    eye = np.eye(k)
    out = np.stack([np.kron(eye, code.array[i]) for i in range(code.n)])
    return StiefelCode(code.field, out)


def realify_matrix(mat: np.ndarray) -> np.ndarray:
    """Replace each complex entry a+bi by the 2x2 real block [[a, -b], [b, a]]."""
    d, r = mat.shape
    out = np.empty((2 * d, 2 * r))
    out[0::2, 0::2] = mat.real
    out[0::2, 1::2] = -mat.imag
    out[1::2, 0::2] = mat.imag
    out[1::2, 1::2] = mat.real
    return out


def ssc_realify(code: StiefelCode) -> StiefelCode:
    """Complex (d, r, n)-SSC to real (2d, 2r, n)-SSC; squared distances scale by 2."""
    if code.field is Field.REAL:
        raise WrongField("input is already real")
    _certify_ssc(code)
    out = np.stack([realify_matrix(code.array[i]) for i in range(code.n)])
    return StiefelCode(Field.REAL, out)


# ---------------------------------------------------------------------------
# Hurwitz-Radon families

_J = np.array([[0.0, -1.0], [1.0, 0.0]])
_K = np.array([[1.0, 0.0], [0.0, -1.0]])
_L = np.array([[0.0, 1.0], [1.0, 0.0]])

# Octonion structure constants: e_i e_{i+1} = e_{i+3} (indices mod 7, from 1).
_OCTONION_TRIPLES = [((i % 7) + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1) for i in range(7)]


def _octonion_left_mults() -> list[np.ndarray]:
    mult = np.zeros((8, 8, 8))  # mult[a, b] = coordinates of e_a * e_b
    mult[0, :, :] = np.eye(8)
    for a in range(1, 8):
        mult[a, 0, a] = 1.0
        mult[a, a, 0] = -1.0
    for (a, b, c) in _OCTONION_TRIPLES:
        for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
            mult[x, y, z] = 1.0
            mult[y, x, z] = -1.0
    # Left multiplication by e_a sends e_b to mult[a, b]; columns index e_b.
    return [mult[a].T.copy() for a in range(1, 8)]


def _real_generators(part: int) -> list[np.ndarray]:
    """Anticommuting antisymmetric orthogonal generators on R^part, part in {1,2,4,8}."""
    if part == 1:
        return []
    if part == 2:
        return [_J]
    if part == 4:
        return [np.kron(np.eye(2), _J), np.kron(_J, _K), np.kron(_J, _L)]
    return _octonion_left_mults()


def _complex_generators(v: int) -> list[np.ndarray]:
    """2v+1 anticommuting skew-Hermitian unitaries on C^(2^v) (Jordan-Wigner)."""
    sx = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    sy = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    sz = np.array([[1, 0], [0, -1]], dtype=np.complex128)

    def chain(mats):
        out = np.eye(1, dtype=np.complex128)
        for m in mats:
            out = np.kron(out, m)
        return out

    eye2 = np.eye(2, dtype=np.complex128)
    gens = []
    for k in range(v):
        for s in (sx, sy):
            gens.append(chain([sz] * k + [s] + [eye2] * (v - 1 - k)))
    gens.append(chain([sz] * v))
    return [1j * g for g in gens]


def _validate_family(field: Field, mats: list[np.ndarray], d: int, tol: float = 1e-9) -> None:
    for i, a in enumerate(mats):
        if a.shape != (d, d):
            raise InvalidParameter(f"generator {i} is not {d}x{d}")
        if field is Field.REAL and np.max(np.abs(a.imag)) > 0:
            raise InvalidParameter(f"generator {i} is not real")
        if np.max(np.abs(a.conj().T @ a - np.eye(d))) > tol:
            raise InvalidParameter(f"generator {i} is not orthogonal/unitary")
        if np.max(np.abs(a.conj().T + a)) > tol:
            raise InvalidParameter(f"generator {i} is not skew")
    for i, a in enumerate(mats):
        for b in mats[i + 1 :]:
            if np.max(np.abs(a @ b + b @ a)) > tol:
                raise InvalidParameter("generators do not anticommute")


def hurwitz_radon_family(field: Field, d: int, generators=None) -> list[np.ndarray]:
    """A maximal family [I, A_1, ...] of d x d matrices whose real unit-norm
    combinations are all orthogonal (resp. unitary), of size rho_F(d).

    Over R the generators come from Kronecker products of the 2x2 rotation
    and reflection matrices (2-part 2 and 4) or octonion left multiplications
    (2-part 8), tensored with the identity on the odd part; 2-adic valuation
    above 3 needs a user-supplied generator list.  Over C, Jordan-Wigner
    strings of Pauli matrices scaled by i realize rho_C(d) = 2v+2 at every
    valuation v.  Supplied generators are validated (orthogonal/unitary,
    skew, pairwise anticommuting) before use.
    """
    if d < 1:
        raise InvalidParameter(f"need d >= 1, got {d}")
    eye = np.eye(d, dtype=np.complex128)
    if generators is not None:
        gens = [np.asarray(g, dtype=np.complex128) for g in generators]
        _validate_family(field, gens, d)
        return [eye] + gens
    v = (d & -d).bit_length() - 1
    odd = d >> v
    if field is Field.REAL:
        if v >= 4:
            raise UnsupportedDimension(
                f"no built-in real family for 2-adic valuation {v}; supply generators"
            )
        gens = [np.kron(g, np.eye(odd)).astype(np.complex128) for g in _real_generators(1 << v)]
    else:
        gens = [np.kron(g, np.eye(odd)) for g in _complex_generators(v)]
    return [eye] + gens


def ssc_radon_hurwitz(field: Field, d: int, n: int, generators=None) -> StiefelCode:
    """(d, d, n)-SSC from a regular simplex inside a Hurwitz-Radon subspace,
    feasible for n <= rho_F(d) + 1."""
    family = hurwitz_radon_family(field, d, generators)
    rho = len(family)
    if n > rho + 1:
        raise InfeasibleParameters(f"need n <= rho+1 = {rho + 1}, got {n}")
    verts = simplex_vertices(rho, n).vectors
    basis = np.stack(family)
    mats = np.einsum("ik,kab->iab", verts, basis)
    return StiefelCode(field, mats)


def ssc_regular_representation(d: int) -> StiefelCode:
    """Real (d, d, d+1)-SSC from the regular representation of the cyclic
    group of order d+1.

    Conjugating the permutation matrices by the Householder reflection that
    sends e_1 to the normalized all-ones vector splits off the trivial
    constituent; the lower-right d x d blocks form the code, with pairwise
    squared distance 2d + 2.
    """
    if d < 1:
        raise InvalidParameter(f"need d >= 1, got {d}")
    g = d + 1
    w = np.zeros(g)
    w[0] = 1.0
    w -= np.full(g, 1.0 / math.sqrt(g))
    q = np.eye(g) - 2.0 * np.outer(w, w) / (w @ w)
    mats = np.empty((g, d, d))
    perm = np.eye(g)
    shift = np.roll(np.eye(g), 1, axis=0)
    for i in range(g):
        mats[i] = (q @ perm @ q)[1:, 1:]
        perm = shift @ perm
    return StiefelCode(Field.REAL, mats)


def ssc_symplectic_lift(field: Field, d: int, n: int) -> StiefelCode:
    """(d, 2, n)-SSC for even d: pair each sphere-simplex vector x with the
    conjugate of Ax, where A is the standard symplectic form."""
    if d % 2 != 0:
        raise InfeasibleParameters(f"need even d, got {d}")
    if n > field.m * d + 1:
        raise InfeasibleParameters(f"need n <= {field.m * d + 1}, got {n}")
    base = ssc_sphere(field, d, n)
    half = d // 2
    a = np.zeros((d, d))
    a[:half, half:] = -np.eye(half)
    a[half:, :half] = np.eye(half)
    xs = base.array[:, :, 0]
    ys = np.conj(xs @ a.T)
    return StiefelCode(field, np.stack([xs, ys], axis=2))


def ssc_from_bibd(seed: StiefelCode, design: BIBD, res: Resolution) -> StiefelCode:
    """Compose a (d, s, n)-SSC with a resolvable (v, b, rep, k=n, lambda=1)
    design into a (b*d, rep*s, v)-SSC.

    Each point p gets a block matrix Y_p with block rows indexed by blocks
    and block columns by parallel classes; the (B, C) block is the seed
    member assigned to p when p lies in B and B belongs to C, else zero.
    Within a block, seed members are assigned to points in ascending order.
    The squared pairwise distance is 2*rep*s*v/(v-1).
    """
    check = verify_bibd(design)
    if not check:
        raise InvalidParameter("design fails verification: " + check.problems[0])
    if design.lam != 1:
        raise ParameterMismatch(f"need lambda = 1, got {design.lam}")
    if design.k != seed.n:
        raise ParameterMismatch(f"need block size k = seed size n, got k={design.k}, n={seed.n}")
    check = verify_resolution(design, res)
    if not check:
        raise InvalidParameter("resolution fails verification: " + check.problems[0])
    _certify_ssc(seed)

    d, s = seed.d, seed.r
    class_of = {}
    for ci, cls_ in enumerate(res.classes):
        for idx in cls_:
            class_of[idx] = ci
    out = np.zeros((design.v, design.b * d, design.rep * s), dtype=np.complex128)
    for bi, blk in enumerate(design.blocks):
        ci = class_of[bi]
        for t, p in enumerate(blk):  # blocks are stored sorted ascending
            out[p - 1, bi * d : (bi + 1) * d, ci * s : (ci + 1) * s] = seed.array[t]
    return StiefelCode(seed.field, out)
