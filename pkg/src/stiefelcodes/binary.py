"""Hadamard matrices and Plotkin-cap binary codes.

These feed the real orthoplex construction: a binary code of length r with
minimum Hamming distance at least r/2 and as many words as the Plotkin bound
allows.  Hadamard matrices are built by explicit strategies (Sylvester
doubling, Paley type I, Kronecker products); when no strategy applies the
error says "no known construction" rather than claiming nonexistence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .bounds import plotkin_cap
from .errors import InvalidParameter, NoKnownConstruction

# Bit convention: Hadamard entry +1 maps to bit 0 and -1 to bit 1, so that
# (-1)^bit recovers the sign.


@dataclass(frozen=True)
class HadamardMatrix:
    """A +-1 matrix H with H H^T = order * I, held in exact integer arithmetic."""

    entries: np.ndarray

    def __post_init__(self):
        h = np.array(self.entries, dtype=np.int64)
        h.setflags(write=False)
        object.__setattr__(self, "entries", h)
        n = h.shape[0]
        if h.ndim != 2 or h.shape != (n, n):
            raise InvalidParameter("Hadamard entries must be square")
        if not np.all(np.abs(h) == 1):
            raise InvalidParameter("Hadamard entries must be +-1")
        if not np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64)):
            raise InvalidParameter(f"rows are not orthogonal at order {n}")

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class BinaryCode:
    """Distinct words of {0,1}^length with their exact minimum distance cached."""

    words: np.ndarray

    def __post_init__(self):
        w = np.array(self.words, dtype=np.uint8)
        w.setflags(write=False)
        object.__setattr__(self, "words", w)
        if w.ndim != 2 or not np.all((w == 0) | (w == 1)):
            raise InvalidParameter("words must form a 2-d 0/1 array")
        if len({tuple(row) for row in w.tolist()}) != w.shape[0]:
            raise InvalidParameter("words must be distinct")

    @property
    def length(self) -> int:
        return self.words.shape[1]

    @property
    def size(self) -> int:
        return self.words.shape[0]

    @cached_property
    def min_distance(self) -> int:
        return min_hamming_distance(self)


def min_hamming_distance(code: BinaryCode) -> int:
    """Exact minimum pairwise Hamming distance, by checking every pair."""
    w = code.words.astype(np.int64)
    if w.shape[0] < 2:
        raise InvalidParameter("need at least 2 words")
    diff = w[:, None, :] != w[None, :, :]
    dists = diff.sum(axis=2)
    iu = np.triu_indices(w.shape[0], 1)
    return int(dists[iu].min())


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _sylvester(order: int) -> np.ndarray:
    h = np.array([[1]], dtype=np.int64)
    base = np.array([[1, 1], [1, -1]], dtype=np.int64)
    while h.shape[0] < order:
        h = np.kron(base, h)
    return h


def _paley_type_i(q: int) -> np.ndarray:
    # q = 3 (mod 4) prime; order q+1.  Core is I plus the Jacobsthal matrix
    # of quadratic-residue signs; the border row is +1 and border column -1.
    chi = np.zeros(q, dtype=np.int64)
    residues = {(x * x) % q for x in range(1, q)}
    for x in range(1, q):
        chi[x] = 1 if x in residues else -1
    h = np.empty((q + 1, q + 1), dtype=np.int64)
    h[0, :] = 1
    h[1:, 0] = -1
    for i in range(q):
        for j in range(q):
            h[1 + i, 1 + j] = 1 if i == j else chi[(i - j) % q]
    return h


def _normalize(h: np.ndarray) -> np.ndarray:
    h = h * h[0, :]  # make the first row +1
    h = h * h[:, 0][:, None]  # then the first column
    return h


@lru_cache(maxsize=None)
def _try_hadamard(order: int) -> HadamardMatrix | None:
    if order == 1:
        return HadamardMatrix(np.array([[1]]))
    if order == 2:
        return HadamardMatrix(np.array([[1, 1], [1, -1]]))
    if order % 4 != 0:
        return None
    if order & (order - 1) == 0:
        return HadamardMatrix(_sylvester(order))
    q = order - 1
    if q % 4 == 3 and _is_prime(q):
        return HadamardMatrix(_normalize(_paley_type_i(q)))
    for f in range(2, order):
        if f * f > order:
            break
        if order % f:
            continue
        a = _try_hadamard(f)
        b = _try_hadamard(order // f)
        if a is not None and b is not None:
            return HadamardMatrix(_normalize(np.kron(a.entries, b.entries)))
    return None


def hadamard(order: int) -> HadamardMatrix:
    """A Hadamard matrix of the given order, normalized so the first row and
    column are all +1.  Strategies: Sylvester for powers of two, Paley type I
    for order q+1 with q = 3 (mod 4) prime, Kronecker products of smaller
    constructible orders.
    """
    if order < 1 or (order > 2 and order % 4 != 0):
        raise InvalidParameter(f"Hadamard order must be 1, 2, or 4k; got {order}")
    h = _try_hadamard(order)
    if h is None:
        raise NoKnownConstruction(f"no implemented strategy reaches order {order}")
    return h


def _bits_from_signs(signs: np.ndarray) -> np.ndarray:
    return ((1 - signs) // 2).astype(np.uint8)


def plotkin_optimal_code(r: int) -> BinaryCode:
    """Binary code of length r meeting the Plotkin cap with distance >= r/2.

    r = 0 (mod 4): the rows of H_r and -H_r (2r words, distance r/2).
    r = 3 (mod 4): rows of normalized H_{r+1} with the first column deleted.
    r = 2 (mod 4): rows of normalized H_{r+2} with the first two columns
    deleted; for r <= 10 an exhaustive search stands in if the Hadamard
    order is missing.
    """
    cap = plotkin_cap(r)  # raises for r < 2 and r = 1 (mod 4)
    residue = r % 4
    try:
        if residue == 0:
            h = hadamard(r).entries
            words = _bits_from_signs(np.vstack([h, -h]))
        elif residue == 3:
            h = hadamard(r + 1).entries
            words = _bits_from_signs(h[:, 1:])
        else:
            h = hadamard(r + 2).entries
            words = _bits_from_signs(h[:, 2:])
    except NoKnownConstruction:
        if r <= 10:
            _, words = exhaustive_optimal_code(r, (r + 1) // 2)
        else:
            raise
    code = BinaryCode(words)
    if code.size != cap or 2 * code.min_distance < r:
        raise NoKnownConstruction(f"construction for r={r} missed the cap")
    return code


def exhaustive_optimal_code(r: int, dmin: int) -> tuple[int, np.ndarray]:
    """Maximum size of a binary code of length r with min distance >= dmin,
    plus one witness, by exhaustive branch-and-bound.

    Any code can be translated to contain the zero word, so the search is a
    maximum-clique search over the words of weight >= dmin, with edges between
    words at distance >= dmin.  Feasible up to roughly r = 12.
    """
    if r < 1 or dmin < 1:
        raise InvalidParameter("need r >= 1 and dmin >= 1")
    words = [w for w in range(1 << r) if bin(w).count("1") >= dmin]
    nv = len(words)
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if bin(words[i] ^ words[j]).count("1") >= dmin:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best_size = 0
    best_members: list[int] = []

    def expand(cand: int, members: list[int]):
        nonlocal best_size, best_members
        if cand == 0:
            if len(members) > best_size:
                best_size = len(members)
                best_members = members.copy()
            return
        while cand:
            if len(members) + bin(cand).count("1") <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            members.append(v)
            expand(cand & adj[v], members)
            members.pop()

    expand((1 << nv) - 1, [])
    chosen = [0] + [words[i] for i in best_members]
    out = np.array(
        [[(w >> (r - 1 - k)) & 1 for k in range(r)] for w in chosen], dtype=np.uint8
    )
    return best_size + 1, out
