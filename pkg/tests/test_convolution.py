"""Convolution products against number-theoretic oracles."""

import math

import numpy as np
import pytest

from idemarith.algebra import DiagonalOperator, NonInvertibleError, Scalar, is_idempotent
from idemarith.arith import (
    epsilon,
    jordan_totient,
    lcm_tuple_count,
    mobius,
    omega,
    totient,
)
from idemarith.convolution import (
    AlgFunction,
    InverseCheckError,
    conjugate,
    dirichlet_convolve,
    dirichlet_identity,
    dirichlet_inverse,
    is_multiplicative,
    lcm_convolve,
    lehmer_identity_check,
    scalar_dirichlet,
    scalar_lcm,
    scalar_table,
    scalar_unitary,
    unitary_convolve,
)
from idemarith.idempotents import IdempotentSystem

UNIT = Scalar(1)


def lifted(alpha, n_max):
    return AlgFunction.lift(alpha, UNIT, n_max)


class TestDirichlet:
    def test_moebius_inversion(self):
        f = dirichlet_convolve(lifted(mobius, 100), lifted(lambda n: 1, 100))
        for n in range(1, 101):
            assert f(n).value == epsilon(n)

    def test_totient_sum(self):
        f = dirichlet_convolve(lifted(totient, 100), lifted(lambda n: 1, 100))
        for n in range(1, 101):
            assert f(n).value == n

    def test_identity_laws(self):
        ident = dirichlet_identity(UNIT, 50)
        assert ident(1).value == 1 and ident(2).value == 0
        f = lifted(totient, 50)
        for prod in (dirichlet_convolve, lcm_convolve, unitary_convolve):
            for n in range(1, 51):
                assert prod(f, ident)(n).value == f(n).value
                assert prod(ident, f)(n).value == f(n).value


class TestLcm:
    def test_ones_counts_pairs(self):
        f = lcm_convolve(lifted(lambda n: 1, 60), lifted(lambda n: 1, 60))
        for n in range(1, 61):
            assert f(n).value == lcm_tuple_count(2, n)
        assert f(4).value == 5

    def test_totient_square_is_jordan(self):
        f = lcm_convolve(lifted(totient, 60), lifted(totient, 60))
        for n in range(1, 61):
            assert f(n).value == jordan_totient(2, n)
        assert f(6).value == 24

    def test_jordan_as_repeated_lcm_power(self):
        phi = lifted(totient, 40)
        f = phi
        for r in (2, 3):
            f = lcm_convolve(f, phi)
            for n in range(1, 41):
                assert f(n).value == jordan_totient(r, n)


class TestUnitary:
    def test_ones_counts_coprime_splits(self):
        f = unitary_convolve(lifted(lambda n: 1, 60), lifted(lambda n: 1, 60))
        for n in range(1, 61):
            assert f(n).value == 2 ** omega(n)
        assert f(12).value == 4

    def test_prime_has_two_splits(self):
        f = lifted(lambda n: n + 2, 30)
        g = lifted(lambda n: 3 * n, 30)
        h = unitary_convolve(f, g)
        for p in (2, 3, 5, 7, 11, 13):
            assert h(p).value == f(1).value * g(p).value + f(p).value * g(1).value


class TestAssociativityCommutativity:
    PRODUCTS = [scalar_dirichlet, scalar_lcm, scalar_unitary]

    @pytest.mark.parametrize("prod", PRODUCTS)
    def test_scalar_triples_exact(self, prod):
        rng = np.random.default_rng(11)
        for _ in range(5):
            a, b, c = (list(rng.integers(-9, 10, 60)) for _ in range(3))
            assert prod(prod(a, b), c) == prod(a, prod(b, c))
            assert prod(a, b) == prod(b, a)


class TestInverse:
    def test_ones_inverts_to_moebius(self):
        inv = dirichlet_inverse(lifted(lambda n: 1, 100))
        for n in range(1, 101):
            assert inv(n).value == mobius(n)

    def test_identity_self_inverse(self):
        ident = dirichlet_identity(UNIT, 20)
        inv = dirichlet_inverse(ident)
        for n in range(1, 21):
            assert inv(n).value == ident(n).value

    def test_round_trip_two_sided(self):
        sys2 = IdempotentSystem(8)
        f = AlgFunction(
            [sys2.projection(0, 1)]
            + [sys2.projection(0, n) + sys2.projection(1, n).scale(2) for n in range(2, 13)]
        )
        inv = dirichlet_inverse(f)
        ident = dirichlet_identity(f(1).unit(), 12)
        for n in range(1, 13):
            assert dirichlet_convolve(f, inv)(n).isclose(ident(n), 1e-9)
            assert dirichlet_convolve(inv, f)(n).isclose(ident(n), 1e-9)

    def test_non_invertible_leading_value(self):
        f = lifted(lambda n: n - 1, 10)  # f(1) = 0
        with pytest.raises(NonInvertibleError):
            dirichlet_inverse(f)


class TestMultiplicativity:
    def test_totient_lift_is_multiplicative(self):
        ok, ce = is_multiplicative(lifted(totient, 120))
        assert ok and ce is None

    def test_counterexample_reported(self):
        # n + 1 with the value at 1 patched to keep f(1) idempotent
        ok, ce = is_multiplicative(lifted(lambda n: 1 if n == 1 else n + 1, 30))
        assert not ok
        assert ce == (2, 3)

    def test_non_idempotent_lead_reported_at_one(self):
        ok, ce = is_multiplicative(lifted(lambda n: n + 1, 30))
        assert not ok
        assert ce == (1, 1)

    def test_projection_slice_multiplicative(self):
        system = IdempotentSystem(64)
        fam = AlgFunction([system.projection(1, n) for n in range(1, 31)])
        ok, _ = is_multiplicative(fam)
        assert ok

    def test_multiplicative_leading_value_idempotent(self):
        for alpha in (totient, mobius, lambda n: 1):
            f = lifted(alpha, 60)
            ok, _ = is_multiplicative(f)
            assert ok
            assert is_idempotent(f(1), 1e-9)

    def test_closure_under_dirichlet(self):
        for a, b in ((mobius, lambda n: 1), (totient, lambda n: 1)):
            h = dirichlet_convolve(lifted(a, 120), lifted(b, 120))
            ok, _ = is_multiplicative(h)
            assert ok


class TestConjugate:
    def test_unit_conjugation_fixes(self):
        f = lifted(totient, 20)
        g = conjugate(f, UNIT)
        for n in range(1, 21):
            assert g(n).value == f(n).value

    def test_preserves_multiplicativity(self):
        system = IdempotentSystem(16)
        fam = AlgFunction([system.projection(0, n) for n in range(1, 17)])
        rng = np.random.default_rng(5)
        b = DiagonalOperator(rng.uniform(0.5, 2.0, 16))
        g = conjugate(fam, b)
        ok, _ = is_multiplicative(g)
        assert ok

    def test_identity_function_fixed(self):
        system = IdempotentSystem(8)
        ident = dirichlet_identity(system.unit(), 10)
        b = DiagonalOperator(range(2, 10))
        g = conjugate(ident, b)
        for n in range(1, 11):
            assert g(n).isclose(ident(n), 1e-9)


class TestLehmerIdentity:
    def test_ones_gives_tau_squared(self):
        ones = [1] * 200
        report = lehmer_identity_check(ones, ones)
        assert report["pass"]
        lhs = scalar_dirichlet(ones, ones)
        rhs = scalar_dirichlet(ones, scalar_table(lambda n: lcm_tuple_count(2, n), 200))
        assert [v * v for v in lhs] == rhs

    def test_epsilon_reduces(self):
        eps = scalar_table(epsilon, 100)
        beta = scalar_table(totient, 100)
        report = lehmer_identity_check(eps, beta)
        assert report["pass"]

    def test_totient_pair_gives_squares(self):
        phi = scalar_table(totient, 200)
        report = lehmer_identity_check(phi, phi)
        assert report["pass"]
        summed = scalar_dirichlet([1] * 200, scalar_table(lambda n: jordan_totient(2, n), 200))
        assert summed == [m * m for m in range(1, 201)]

    def test_operator_form(self):
        system = IdempotentSystem(36)
        phi = scalar_table(totient, 30)
        ones = [1] * 30
        report = lehmer_identity_check(phi, ones, system=system, j=1)
        assert report["pass"]
        assert report["operator_max_residual"] <= 1e-9
