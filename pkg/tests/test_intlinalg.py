import itertools
import random
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from embed6.intlinalg import (
    AbelianGroupShape,
    IntMatrix,
    cokernel_shape,
    determinant,
    hermite_basis,
    kernel_basis,
    quotient_shape,
    same_lattice,
    smith_normal_form,
    solve_in_lattice,
)
from embed6.linkgroup import LINK_BASIS

from oracles import TooBig, coker_order_bruteforce, frac_rank, in_span_bruteforce, leibniz_det, matvec


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


def check_snf(A):
    s = smith_normal_form(A)
    assert s.U @ A @ s.V == s.D
    assert abs(determinant(s.U)) == 1
    assert abs(determinant(s.V)) == 1
    for i in range(A.rows):
        for j in range(A.cols):
            if i != j:
                assert s.D[i, j] == 0
    diag = s.diagonal
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[: len(nz)] == tuple(nz), "zeros must trail"
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    return s


@st.composite
def matrices(draw, max_dim=8, bound=10):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=m * n, max_size=m * n))
    return IntMatrix(m, n, tuple(entries))


class TestIntMatrix:
    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, (1, 2, 3))

    def test_matmul_and_transpose(self):
        A = M([[1, 2, 3], [4, 5, 6]])
        assert A.transpose() == M([[1, 4], [2, 5], [3, 6]])
        assert A @ (1, 0, -1) == (-2, -2)
        assert (A @ A.transpose()).to_rows() == [[14, 32], [32, 77]]

    def test_empty(self):
        E = IntMatrix(0, 3)
        assert E.transpose().shape == (3, 0)
        assert E @ (1, 2, 3) == ()
        assert IntMatrix.from_columns([], 2).shape == (2, 0)

    def test_big_entries(self):
        A = M([[10**40, 3], [7, 10**30]])
        s = check_snf(A)
        assert s.diagonal[0] * s.diagonal[1] == abs(10**70 - 21)

    def test_determinant_matches_leibniz(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(0, 4)
            rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert determinant(M(rows, n)) == (leibniz_det(rows) if n else 1)


class TestSmithNormalForm:
    def test_zero_matrix(self):
        s = check_snf(M([[0, 0], [0, 0]]))
        assert s.diagonal == (0, 0)

    def test_one_by_one_zero(self):
        assert smith_normal_form(M([[0]])).D == M([[0]])

    def test_diag_2_3(self):
        A = M([[2, 0], [0, 3]])
        # oracle: d1 = gcd of entries, d1 d2 = |det|
        g = 0
        for e in A.entries:
            g = gcd(g, e)
        assert check_snf(A).invariant_factors == (g, abs(leibniz_det(A.to_rows())) // g) == (1, 6)

    @pytest.mark.parametrize("shape", [(0, 0), (0, 3), (3, 0)])
    def test_empty_shapes(self, shape):
        s = check_snf(IntMatrix.zeros(*shape))
        assert s.U.shape == (shape[0], shape[0])
        assert s.V.shape == (shape[1], shape[1])

    def test_deterministic(self):
        A = M([[4, 6, 2], [8, -2, 10], [3, 3, 3]])
        assert smith_normal_form(A) == smith_normal_form(A)

    @settings(max_examples=200, deadline=None)
    @given(matrices())
    def test_properties(self, A):
        check_snf(A)


class TestKernel:
    def test_examples(self):
        assert kernel_basis(M([[0]])) == [(1,)]
        assert kernel_basis(M([[2]])) == []
        assert kernel_basis(M([[1, 0], [0, 0]])) == [(0, 1)]

    def test_zero_rows(self):
        assert kernel_basis(IntMatrix(0, 2)) == [(1, 0), (0, 1)]

    @settings(max_examples=100, deadline=None)
    @given(matrices(max_dim=3, bound=3))
    def test_bruteforce_kernel_vectors_in_span(self, A):
        basis = kernel_basis(A)
        rows = A.to_rows()
        for v in basis:
            assert A @ v == (0,) * A.rows
            pivot = next(x for x in v if x)
            assert pivot > 0
        assert len(basis) == A.cols - frac_rank(rows) if rows else len(basis) == A.cols
        G = IntMatrix.from_columns(basis, A.cols)
        for v in itertools.product(range(-3, 4), repeat=A.cols):
            if matvec(rows, v) == (0,) * A.rows:
                assert solve_in_lattice(G, v) is not None


class TestCokernel:
    def test_examples(self):
        assert cokernel_shape(M([[0]])) == AbelianGroupShape(1, ())
        assert cokernel_shape(M([[5]])) == AbelianGroupShape(0, (5,))

    def test_z2_squared(self):
        rows = [[0, 2], [2, 0]]
        assert coker_order_bruteforce(rows) == 4
        assert cokernel_shape(M(rows)) == AbelianGroupShape(0, (2, 2))

    @settings(max_examples=150, deadline=None)
    @given(matrices(max_dim=3, bound=3))
    def test_order_bruteforce(self, A):
        shape = cokernel_shape(A)
        rows = A.to_rows()
        assert shape.free_rank == A.rows - (frac_rank(rows) if rows else 0)
        if shape.is_finite:
            try:
                expected = coker_order_bruteforce(rows)
            except TooBig:
                assume(False)
            assert shape.order == expected


class TestSolveInLattice:
    G = IntMatrix.from_columns([(0, 2, 1, 0), (2, 2, 0, 0)], 4)

    def test_member(self):
        assert solve_in_lattice(self.G, (2, 4, 1, 0)) == (1, 1)

    def test_zero(self):
        assert solve_in_lattice(self.G, (0, 0, 0, 0)) == (0, 0)
        assert solve_in_lattice(IntMatrix(3, 0), (0, 0, 0)) == ()

    def test_not_member(self):
        assert in_span_bruteforce(self.G.columns(), (0, 0, 1, 0), 6) is None
        assert solve_in_lattice(self.G, (0, 0, 1, 0)) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_in_lattice(self.G, (1, 2))

    @settings(max_examples=150, deadline=None)
    @given(matrices(max_dim=3, bound=4), st.data())
    def test_against_bruteforce(self, G, data):
        v = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=G.rows, max_size=G.rows)))
        c = solve_in_lattice(G, v)
        if c is not None:
            assert G @ c == v
        elif G.cols <= 3:
            assert in_span_bruteforce(G.columns(), v, 4) is None


class TestHermite:
    def test_canonical(self):
        a = hermite_basis([(2, 4), (0, 6)])
        b = hermite_basis([(2, -2), (2, 4), (4, 2)])
        assert a == b == [(2, 4), (0, 6)]

    def test_empty_and_zero(self):
        assert hermite_basis([], 3) == []
        assert hermite_basis([(0, 0)]) == []

    def test_same_lattice(self):
        assert same_lattice([(0, 2, 1, 0), (2, 2, 0, 0)], [(2, 4, 1, 0), (2, 2, 0, 0)], 4)
        assert not same_lattice([(0, 2, 1, 0)], [(0, 4, 2, 0)], 4)

    @settings(max_examples=100, deadline=None)
    @given(matrices(max_dim=4, bound=5), st.data())
    def test_unimodular_invariance(self, A, data):
        from conftest import random_unimodular

        T = random_unimodular(random.Random(data.draw(st.integers(0, 10**6))), A.rows)
        B = T @ A
        assert hermite_basis(A.to_rows(), A.cols) == hermite_basis(B.to_rows(), A.cols)


class TestQuotientShape:
    std = IntMatrix.identity(4)
    ztilde = IntMatrix.from_columns(LINK_BASIS, 4)

    def test_free(self):
        assert quotient_shape(self.std, IntMatrix(4, 0)) == AbelianGroupShape(4)

    def test_trivial(self):
        assert quotient_shape(self.ztilde, self.ztilde).is_trivial

    def test_parity_lattice_quotient(self):
        sub = IntMatrix.from_columns([(0, 2, 1, 0), (2, 2, 0, 0)], 4)
        assert quotient_shape(self.ztilde, sub) == AbelianGroupShape(2, (2,))

    def test_generator_outside(self):
        with pytest.raises(ValueError):
            quotient_shape(self.ztilde, IntMatrix.from_columns([(1, 0, 0, 0)], 4))

    def test_dependent_ambient(self):
        with pytest.raises(ValueError):
            quotient_shape(IntMatrix.from_columns([(1, 0), (2, 0)], 2), IntMatrix(2, 0))


class TestAbelianGroupShape:
    def test_validation(self):
        with pytest.raises(ValueError):
            AbelianGroupShape(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroupShape(0, (2, 3))

    def test_str(self):
        assert str(AbelianGroupShape()) == "0"
        assert str(AbelianGroupShape(1)) == "Z"
        assert str(AbelianGroupShape(2, (2,))) == "Z^2 + Z/2"
        assert AbelianGroupShape(0, (2, 6)).order == 12
        assert AbelianGroupShape(1).order is None
