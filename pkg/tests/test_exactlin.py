import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fermat_delta.exactlin import (NonFieldModulusError, Submodule,
                                   hermite_normal_form, identity, inverse_mod,
                                   kernel, mat_mul, membership, rank,
                                   unimodular_complement, vec_mat, xgcd)


def rational_rank(M):
    """Gaussian elimination over Q with Fractions; independent of the lattice code."""
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


small_matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols),
                          min_size=1, max_size=6))


def test_xgcd():
    for a, b in itertools.product(range(-12, 13), repeat=2):
        x, y, g = xgcd(a, b)
        assert x * a + y * b == g >= 0


class TestHermite:
    def test_identity(self):
        H, r = hermite_normal_form(identity(3))
        assert H == identity(3) and r == 3

    def test_zero(self):
        H, r = hermite_normal_form([[0, 0], [0, 0]])
        assert H == [[0, 0], [0, 0]] and r == 0

    def test_hand_reduced(self):
        # [2 4] - 2*[1 2] = 0 leaves [1 2]
        assert hermite_normal_form([[2, 4], [1, 2]]) == ([[1, 2], [0, 0]], 1)

    def test_reduced_above_pivots(self):
        H, r = hermite_normal_form([[3, 1, 7], [0, 2, 5], [0, 0, 4]])
        assert r == 3
        for k in range(r):
            c = next(j for j, x in enumerate(H[k]) if x)
            assert H[k][c] > 0
            for above in range(k):
                assert 0 <= H[above][c] < H[k][c]

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_rank_matches_rational_elimination(self, M):
        H, r = hermite_normal_form(M)
        assert r == rational_rank(M)
        # same row span
        S, T = Submodule(len(M[0]), M), Submodule(len(M[0]), H)
        assert all(row in S for row in H) and all(row in T for row in M)


class TestKernel:
    def test_identity_has_zero_kernel(self):
        assert kernel(identity(4)).rank == 0

    def test_zero_matrix_mod5_is_everything(self):
        K = kernel([[0] * 3 for _ in range(3)], modulus=5)
        assert K.rank == 3

    def test_linear_form_2_4(self):
        # v (2, 4)^T = 0: search small coefficients for the primitive solutions
        brute = {(a, b) for a in range(-4, 5) for b in range(-4, 5)
                 if 2 * a + 4 * b == 0 and (a, b) != (0, 0)}
        K = kernel([[2], [4]])
        assert K.rank == 1
        (gen,) = K.hnf
        assert tuple(gen) in brute
        assert all(list(v) in K for v in brute)
        assert [1, 0] not in K
        assert gen in ([2, -1], [-2, 1])

    def test_non_field_modulus(self):
        with pytest.raises(NonFieldModulusError, match="non-field modulus"):
            kernel([[2, 0], [0, 2]], modulus=4).rank

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_kernel_vectors_annihilate(self, M):
        K = kernel(M)
        for v in K.hnf:
            assert not any(vec_mat(v, M))
        assert K.rank == len(M) - rational_rank(M)

    @settings(max_examples=100, deadline=None)
    @given(small_matrices, st.sampled_from([2, 3, 5, 7]))
    def test_rank_nullity_mod_p(self, M, p):
        K = kernel(M, modulus=p)
        for v in K.hnf:
            assert not any(vec_mat(v, M, p))
        assert K.rank + rank(M, modulus=p) == len(M)


class TestMembership:
    def test_zero_vector(self):
        assert [0, 0, 0] in Submodule(3, [[1, 2, 3]])

    def test_generator(self):
        assert membership(Submodule(3, [[1, 2, 3], [0, 4, 1]]), [0, 4, 1])

    def test_divisibility(self):
        S = Submodule(2, [[2, 0]])
        assert not membership(S, [1, 0])
        assert membership(S, [1, 0], modulus=3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            [1, 2] in Submodule(3, [[1, 2, 3]])

    @settings(max_examples=100, deadline=None)
    @given(small_matrices, st.data())
    def test_monotone(self, M, data):
        S = Submodule(len(M[0]), M)
        coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(M), max_size=len(M)))
        combo = vec_mat(coeffs, M)
        assert combo in S
        assert all(row in S for row in M)


def test_inverse_mod():
    A = [[1, 2], [3, 4]]
    Ainv = inverse_mod(A, 7)
    assert mat_mul(A, Ainv, 7) == identity(2)
    with pytest.raises(ValueError):
        inverse_mod([[1, 2], [2, 4]], 7)


def test_unimodular_complement():
    G = [[1, 1, 0, 0], [0, 1, 1, 1]]
    P, r = unimodular_complement(G, 4)
    assert r == 2
    assert all(not any(vec_mat(g, P)) for g in G)
    # surjective: some integer combination of rows hits each unit vector
    assert Submodule(2, P).rank == 2 and [1, 0] in Submodule(2, P)
    assert [0, 1] in Submodule(2, P)
