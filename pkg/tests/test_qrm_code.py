import itertools
from math import comb

import numpy as np
import pytest

from qrm_transversal.errors import DomainError, UsageError
from qrm_transversal.hypercube import Subcube
from qrm_transversal.pauli import commutes
from qrm_transversal.qrm_code import (
    QrmCode,
    code_table,
    gf2_rank,
    logical_basis,
    parameters,
    rm_dimension,
    rm_generator_matrix,
    stabilizer_generators,
)

# (m, q, r, n, kappa, d, k_max) for every code with m <= 10 reaching transversal T
PUBLISHED_TABLE = [
    (3, 0, 1, 8, 3, 2, 2), (4, 0, 1, 16, 4, 2, 3), (5, 0, 1, 32, 5, 2, 4),
    (5, 0, 2, 32, 15, 2, 2), (6, 0, 1, 64, 6, 2, 5), (6, 0, 2, 64, 21, 2, 2),
    (6, 1, 2, 64, 15, 4, 2), (7, 0, 1, 128, 7, 2, 6), (7, 0, 2, 128, 28, 2, 3),
    (7, 1, 2, 128, 21, 4, 2), (7, 0, 3, 128, 63, 2, 2), (8, 0, 1, 256, 8, 2, 7),
    (8, 0, 2, 256, 36, 2, 3), (8, 1, 2, 256, 28, 4, 3), (8, 0, 3, 256, 92, 2, 2),
    (8, 1, 3, 256, 84, 4, 2), (9, 0, 1, 512, 9, 2, 8), (9, 0, 2, 512, 45, 2, 4),
    (9, 1, 2, 512, 36, 4, 3), (9, 0, 3, 512, 129, 2, 2), (9, 1, 3, 512, 120, 4, 2),
    (9, 2, 3, 512, 84, 8, 2), (9, 0, 4, 512, 255, 2, 2), (10, 0, 1, 1024, 10, 2, 9),
    (10, 0, 2, 1024, 55, 2, 4), (10, 1, 2, 1024, 45, 4, 4), (10, 0, 3, 1024, 175, 2, 3),
    (10, 1, 3, 1024, 165, 4, 2), (10, 2, 3, 1024, 120, 8, 2), (10, 0, 4, 1024, 385, 2, 2),
    (10, 1, 4, 1024, 375, 4, 2),
]


def small_codes(max_m, strict=True):
    for m in range(1, max_m + 1):
        for r in range(0, m + 1):
            for q in range(0, r + (0 if strict else 1)):
                yield QrmCode(m, q, r)


def test_table_matches_published():
    rows = [tuple(row[c] for c in ("m", "q", "r", "n", "kappa", "d", "k_max"))
            for row in code_table(10, 2)]
    assert rows == PUBLISHED_TABLE


def test_table_empty_for_high_level():
    assert code_table(10, 99) == []


@pytest.mark.parametrize("m,q,r,expect", [
    (3, 0, 1, (8, 3, 2, 2)), (6, 1, 2, (64, 15, 4, 2)), (10, 1, 4, (1024, 375, 4, 2)),
])
def test_parameters(m, q, r, expect):
    p = parameters(QrmCode(m, q, r))
    assert (p.n, p.kappa, p.distance, p.k_max) == expect


def test_invalid_code():
    with pytest.raises(DomainError):
        QrmCode(3, 2, 1)
    with pytest.raises(DomainError):
        QrmCode(3, 0, 4)


def test_generator_counts():
    xs, zs = stabilizer_generators(QrmCode(4, 0, 2))
    assert (len(xs), len(zs)) == (1, 8)
    xs, zs = stabilizer_generators(QrmCode(3, 0, 1))
    assert (len(xs), len(zs)) == (1, 6)
    xs, zs = stabilizer_generators(QrmCode(3, 1, 3))
    assert zs == []


def test_q_equals_r_constructible():
    code = QrmCode(4, 1, 1)
    assert parameters(code).kappa == 0
    assert logical_basis(code) == []
    assert stabilizer_generators(code)[0]


@pytest.mark.parametrize("m,q,r,count", [(4, 0, 2, 10), (3, 0, 1, 3), (6, 1, 2, 15)])
def test_logical_counts(m, q, r, count):
    basis = logical_basis(QrmCode(m, q, r))
    assert len(basis) == count


def test_logical_order():
    code = QrmCode(3, 0, 1)
    assert [j for j, _, _ in logical_basis(code)] == [0b001, 0b010, 0b100]
    sizes = [bin(j).count("1") for j in QrmCode(5, 0, 3).logical_indices]
    assert sizes == sorted(sizes)


class TestRm:
    def test_empty(self):
        assert rm_generator_matrix(-1, 4).shape == (0, 16)

    def test_full(self):
        assert gf2_rank(rm_generator_matrix(4, 4)) == 16

    def test_first_order(self):
        assert gf2_rank(rm_generator_matrix(1, 3)) == 4

    def test_out_of_range(self):
        with pytest.raises(UsageError):
            rm_generator_matrix(-2, 3)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_duality(self, m):
        for r in range(-1, m + 1):
            g = rm_generator_matrix(r, m).astype(np.int64)
            h = rm_generator_matrix(m - r - 1, m).astype(np.int64)
            assert gf2_rank(g) == rm_dimension(r, m)
            assert gf2_rank(g) + gf2_rank(h) == 1 << m
            assert not ((g @ h.T) % 2).any()

    def test_rows_are_independent(self):
        for m in range(1, 7):
            for r in range(m + 1):
                g = rm_generator_matrix(r, m)
                assert gf2_rank(g) == g.shape[0]


class TestStructure:
    def test_stabilizers_commute_exhaustive(self):
        for code in small_codes(6, strict=False):
            xs, zs = stabilizer_generators(code)
            for x, z in itertools.product(xs, zs):
                assert commutes(x, z), str(code)

    def test_symplectic_pattern_exhaustive(self):
        for code in small_codes(6):
            basis = logical_basis(code)
            xs, zs = stabilizer_generators(code)
            for (j, zj, _), (k, _, xk) in itertools.product(basis, basis):
                assert commutes(zj, xk) == (j != k), (str(code), j, k)
            # logicals also commute with the stabilizers of the other type
            for _, zj, xj in basis:
                assert all(commutes(zj, x) for x in xs)
                assert all(commutes(xj, z) for z in zs)

    def test_logical_independence(self):
        for code in small_codes(6):
            m, q, r = code.m, code.q, code.r
            z_rows = [Subcube.standard(m, j).indicator() for j in code.logical_indices]
            stab = rm_generator_matrix(m - r - 1, m)
            rows = np.concatenate([np.array(z_rows, dtype=np.uint8).reshape(-1, 1 << m), stab])
            assert gf2_rank(rows) == rm_dimension(m - q - 1, m)
            assert code.kappa == rm_dimension(m - q - 1, m) - rm_dimension(m - r - 1, m)
            assert code.kappa == sum(comb(m, i) for i in range(q + 1, r + 1))


def _syndrome_table(check_rows: np.ndarray) -> list[int]:
    n = check_rows.shape[1]
    cols = []
    for x in range(n):
        s = 0
        for i, row in enumerate(check_rows):
            if row[x]:
                s |= 1 << i
        cols.append(s)
    return cols


def _min_weight(n: int, in_code: list[int], in_sub: list[int], limit: int) -> int | None:
    """Smallest w <= limit with a weight-w vector in the code but outside the subcode."""
    for w in range(1, limit + 1):
        for combo in itertools.combinations(range(n), w):
            a = b = 0
            for x in combo:
                a ^= in_code[x]
                b ^= in_sub[x]
            if a == 0 and b != 0:
                return w
    return None


@pytest.mark.parametrize("code", list(small_codes(5)), ids=str)
def test_distance_brute_force(code):
    m, q, r = code.m, code.q, code.r
    n = code.n
    d = parameters(code).distance
    # X-type logicals: RM(r) minus RM(q); Z-type: RM(m-q-1) minus RM(m-r-1).
    # membership in RM(s) is a zero syndrome against RM(m-s-1)
    x_side = _min_weight(n, _syndrome_table(rm_generator_matrix(m - r - 1, m)),
                         _syndrome_table(rm_generator_matrix(m - q - 1, m)), d)
    z_side = _min_weight(n, _syndrome_table(rm_generator_matrix(q, m)),
                         _syndrome_table(rm_generator_matrix(r, m)), d)
    assert min(w for w in (x_side, z_side) if w is not None) == d
