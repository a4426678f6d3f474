import random

import pytest

from fermat_delta.exactlin import Submodule, identity, kernel, mat_mul, vec_mat
from fermat_delta.groupring import GroupRingElt, gamma
from fermat_delta.homology import (E_class, H1UClass, NotInH1UError,
                                   act_generator, basis_pairs,
                                   generator_matrix, gamma_rows, h1x_structure,
                                   multiplication_matrix, to_E_coordinates)

DEGREES = range(3, 11)


class TestEClass:
    def test_trivial_when_index_zero(self):
        assert E_class(0, 5, 7).is_zero()
        assert E_class(3, 0, 7).is_zero()

    def test_n3_11(self):
        g = E_class(1, 1, 3).coeffs
        assert g == [[1, -1, 0], [-1, 1, 0], [0, 0, 0]]

    def test_indices_mod_n(self):
        assert E_class(2, 3, 5) == E_class(7, 3, 5) == E_class(2, 8, 5)


class TestCoordinates:
    def test_basis_element(self):
        assert to_E_coordinates(E_class(2, 3, 5)) == H1UClass.basis(2, 3, 5)

    def test_zero(self):
        assert to_E_coordinates(GroupRingElt.zero(4)) == H1UClass.zero(4)

    def test_gamma0_n3_round_trip(self):
        x = to_E_coordinates(gamma(0, 3))
        # solved by hand: coefficients at (1,1), (1,2), (2,1), (2,2)
        assert x.coords == (1, -1, 0, 1)
        assert x.to_group_ring() == gamma(0, 3)

    def test_rejects_non_ideal(self):
        with pytest.raises(NotInH1UError, match="not in H_1"):
            to_E_coordinates(GroupRingElt.one(4))

    @pytest.mark.parametrize("n", DEGREES)
    def test_round_trip_all_basis(self, n):
        for i, j in basis_pairs(n):
            assert to_E_coordinates(E_class(i, j, n)) == H1UClass.basis(i, j, n)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_round_trip_random(self, n):
        rng = random.Random(n)
        for _ in range(20):
            v = H1UClass(n, tuple(rng.randint(-5, 5) for _ in range((n - 1) ** 2)))
            assert to_E_coordinates(v.to_group_ring()) == v


class TestActions:
    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_eps0_has_order_n(self, n):
        M = generator_matrix("eps0", n)
        P = identity((n - 1) ** 2)
        for _ in range(n):
            P = mat_mul(P, M)
        assert P == identity((n - 1) ** 2)

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_tau_involution(self, n):
        T = generator_matrix("tau", n)
        assert mat_mul(T, T) == identity((n - 1) ** 2)

    @pytest.mark.parametrize("n", [3, 5])
    def test_tau_swaps_labels(self, n):
        for i, j in basis_pairs(n):
            assert act_generator("tau", H1UClass.basis(i, j, n)) == H1UClass.basis(j, i, n)

    @pytest.mark.parametrize("n", DEGREES)
    def test_eps_commute_and_tau_conjugates(self, n):
        A, B, T = (generator_matrix(g, n) for g in ("eps0", "eps1", "tau"))
        assert mat_mul(A, B) == mat_mul(B, A)
        assert mat_mul(mat_mul(T, A), T) == B

    def test_unknown_generator(self):
        with pytest.raises(ValueError, match="unknown generator"):
            act_generator("sigma", H1UClass.zero(3))

    def test_multiplication_matrix_matches_generator(self):
        e0 = GroupRingElt.monomial(1, 0, 5)
        assert multiplication_matrix(e0) == generator_matrix("eps0", 5)


class TestQuotient:
    @pytest.mark.parametrize("n", DEGREES)
    def test_ranks(self, n):
        Q = h1x_structure(n)
        assert Q.ambient_rank == (n - 1) ** 2
        assert Q.relation_rank == n - 1
        assert Q.quotient_rank == (n - 1) * (n - 2)
        assert Q.genus == (n - 1) * (n - 2) // 2

    def test_genus_examples(self):
        assert h1x_structure(3).genus == 1
        assert h1x_structure(5).quotient_rank == 12

    @pytest.mark.parametrize("n", DEGREES)
    def test_gamma_rows_independent_and_nonzero(self, n):
        rows = gamma_rows(n)
        assert all(any(r) for r in rows)
        assert Submodule((n - 1) ** 2, rows).rank == n - 1

    @pytest.mark.parametrize("n", DEGREES)
    def test_projection_kernel_is_exactly_S(self, n):
        # integer left kernel of the projection must equal the gamma span
        Q = h1x_structure(n)
        K = kernel(Q.projection)
        S = Q.relations
        assert K.rank == S.rank
        assert all(v in S for v in K.hnf)
        assert all(not any(Q.project(v)) for v in S.hnf)

    @pytest.mark.parametrize("n", DEGREES)
    def test_S_stable_under_eps(self, n):
        S = h1x_structure(n).relations
        for g in ("eps0", "eps1", "tau"):
            M = generator_matrix(g, n)
            assert all(vec_mat(s, M) in S for s in gamma_rows(n))
