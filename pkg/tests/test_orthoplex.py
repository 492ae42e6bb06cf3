import math

import numpy as np
import pytest

from stiefelcodes import (
    Classification,
    Field,
    StiefelCode,
    certify,
    is_stiefel,
    plotkin_cap,
    plotkin_optimal_code,
    soc_complex_orbit,
    soc_real_hadamard,
    soc_sphere_real,
)
from stiefelcodes.errors import InfeasibleParameters, InvalidParameter, UnsupportedResidue

from conftest import brute_min_distance

R, C = Field.REAL, Field.COMPLEX


def assert_soc(code: StiefelCode, r: int):
    report = certify(code)
    assert report.classification is Classification.SOC
    assert brute_min_distance(code) ** 2 == pytest.approx(2 * r, abs=1e-9)


def test_orbit_u1_fourth_roots():
    code = soc_complex_orbit(1, 1, 4)
    got = sorted(np.round(code.array[:, 0, 0], 12).tolist(), key=lambda z: (z.real, z.imag))
    want = sorted([1, 1j, -1, -1j], key=lambda z: (z.real, z.imag))
    assert np.allclose(got, want)
    assert brute_min_distance(code) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_orbit_d2_r1_n8():
    code = soc_complex_orbit(2, 1, 8)
    # brute force over all 28 pairs
    assert brute_min_distance(code) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert_soc(code, 1)
    cols = {tuple(np.round(code.array[i, :, 0], 12)) for i in range(8)}
    want = set()
    for vec in (np.array([1, 0]), np.array([0, 1])):
        for phase in (1, 1j, -1, -1j):
            want.add(tuple(np.round(phase * vec.astype(complex), 12)))
    assert cols == want


def test_orbit_u2_full():
    code = soc_complex_orbit(2, 2, 16)
    assert_soc(code, 2)
    assert certify(code).min_distance == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("d,r", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_orbit_full_has_distinct_elements(d, r):
    n = 4 * d * r
    code = soc_complex_orbit(d, r, n)
    assert code.n == n
    # distinctness: every pairwise distance strictly positive
    assert brute_min_distance(code) > 1.0


def test_orbit_interior_n():
    code = soc_complex_orbit(2, 2, 12)
    assert_soc(code, 2)


def test_orbit_point_removal_keeps_soc():
    code = soc_complex_orbit(2, 2, 16)
    m, d, r = 2, 2, 2
    sub = StiefelCode(C, code.array[:-1])
    while sub.n > m * d * r + 2:
        assert certify(sub).classification is Classification.SOC
        sub = StiefelCode(C, sub.array[:-1])


def test_orbit_trace_values_are_quantized():
    # group structure forces Re Tr(X* Y) into {0, -r} for distinct orbit points
    r = 2
    code = soc_complex_orbit(3, r, 24)
    for i in range(code.n):
        for j in range(i + 1, code.n):
            tr = float(np.sum(code.array[i].conj() * code.array[j]).real)
            assert min(abs(tr), abs(tr + r)) <= 1e-12


def test_orbit_range_checks():
    with pytest.raises(InfeasibleParameters):
        soc_complex_orbit(2, 2, 9)  # lower edge: need n > 2dr + 1 = 9
    with pytest.raises(InfeasibleParameters):
        soc_complex_orbit(2, 2, 17)
    soc_complex_orbit(2, 2, 10)
    with pytest.raises(InvalidParameter):
        soc_complex_orbit(1, 2, 6)


def test_sphere_real_octahedron():
    code = soc_sphere_real(3, 6)
    assert brute_min_distance(code) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert_soc(code, 1)
    cols = {tuple(code.array[i, :, 0].real) for i in range(6)}
    assert len(cols) == 6


def test_sphere_real_five_of_six():
    code = soc_sphere_real(3, 5)
    assert_soc(code, 1)


def test_sphere_real_square():
    code = soc_sphere_real(2, 4)
    assert_soc(code, 1)
    assert brute_min_distance(code) == pytest.approx(math.sqrt(2), abs=1e-15)


def test_sphere_real_range():
    with pytest.raises(InfeasibleParameters):
        soc_sphere_real(3, 4)  # n must exceed d + 1
    with pytest.raises(InfeasibleParameters):
        soc_sphere_real(3, 7)


@pytest.mark.parametrize(
    "d,r,expected_sq",
    [(4, 4, 8.0), (2, 2, 4.0), (3, 3, 6.0)],
)
def test_real_hadamard_examples(d, r, expected_sq):
    code = soc_real_hadamard(d, r)
    assert code.n == d * plotkin_cap(r)
    assert brute_min_distance(code) ** 2 == pytest.approx(expected_sq, abs=1e-12)
    assert_soc(code, r)


def test_real_hadamard_gram_identity_exact():
    # integer-arithmetic oracle: Tr((T^a D_c)^T (T^a' D_c')) = [a=a'] (r - 2 hamming)
    d, r = 5, 3
    words = plotkin_optimal_code(r).words.astype(np.int64)
    t = np.roll(np.eye(d, dtype=np.int64), 1, axis=0)
    mats = {}
    for a in range(d):
        ta = np.linalg.matrix_power(t, a)
        for ci, c in enumerate(words):
            dmat = np.zeros((d, r), dtype=np.int64)
            for i in range(r):
                dmat[i, i] = (-1) ** c[i]
            mats[(a, ci)] = ta @ dmat
    for (a, ci), x in mats.items():
        for (a2, ci2), y in mats.items():
            trace = int(np.trace(x.T @ y))
            ham = int(np.sum(words[ci] != words[ci2]))
            expected = (r - 2 * ham) if a == a2 else 0
            assert trace == expected


def test_real_hadamard_matches_construction_code():
    # the shipped code equals the T^a D_c enumeration, a outer then words
    d, r = 3, 2
    code = soc_real_hadamard(d, r)
    words = plotkin_optimal_code(r).words
    t = np.roll(np.eye(d), 1, axis=0)
    idx = 0
    for a in range(d):
        ta = np.linalg.matrix_power(t, a)
        for c in words:
            dmat = np.zeros((d, r))
            for i in range(r):
                dmat[i, i] = (-1.0) ** c[i]
            assert np.allclose(code.array[idx].real, ta @ dmat)
            idx += 1


def test_real_hadamard_rejects_residue_one():
    with pytest.raises(UnsupportedResidue):
        soc_real_hadamard(5, 5)


def test_real_hadamard_needs_r_at_least_two():
    with pytest.raises(InvalidParameter):
        soc_real_hadamard(3, 1)


def test_all_soc_outputs_stiefel():
    for code in (
        soc_complex_orbit(3, 1, 10),
        soc_sphere_real(4, 7),
        soc_real_hadamard(4, 3),
    ):
        for i in range(code.n):
            assert is_stiefel(code.array[i], code.field, 1e-9)
