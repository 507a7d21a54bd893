"""Congruence-diagonal idempotent systems: axioms, product laws, weighted
convolution identities."""

import math

import pytest

from idemarith.algebra import DiagonalOperator, is_idempotent
from idemarith.arith import lcm_tuple_count, omega, totient
from idemarith.convolution import scalar_table
from idemarith.idempotents import (
    IdempotentSystem,
    IdentityCheckError,
    divisor_product_law,
    product_law,
    verify_axioms,
    weighted_product_identities,
)


class TestProjection:
    def test_level_one_is_identity(self):
        system = IdempotentSystem(6)
        assert system.projection(0, 1).isclose(system.unit(), 0)

    def test_congruence_indicator(self):
        system = IdempotentSystem(4, offset=0)
        assert system.projection(1, 2).entries == (0, 1, 0, 1)

    def test_periodicity(self):
        system = IdempotentSystem(12)
        assert system.projection(5, 3).entries == system.projection(2, 3).entries
        assert system.projection(-1, 3).entries == system.projection(2, 3).entries

    def test_each_projection_idempotent(self):
        system = IdempotentSystem(24)
        for n in range(1, 13):
            for j in range(n):
                assert is_idempotent(system.projection(j, n), 0)

    def test_dft_agrees_with_exact(self):
        exact = IdempotentSystem(64)
        dft = IdempotentSystem(64, mode="dft-float")
        for n in range(1, 25):
            for j in range(n):
                assert exact.projection(j, n).distance(dft.projection(j, n)) < 1e-9


class TestVerifyAxioms:
    def test_congruence_realization_passes(self):
        report = verify_axioms(IdempotentSystem(64), n_limit=12)
        assert report["pass"]
        assert report["summary"]["failed"] == 0

    def test_completeness_at_level_one(self):
        report = verify_axioms(IdempotentSystem(16), n_limit=1)
        assert report["pass"]

    def test_fault_injection_reported(self):
        class Corrupted(IdempotentSystem):
            def projection(self, j, n):
                p = super().projection(j, n)
                if n == 3 and j % n == 1:
                    return DiagonalOperator(
                        tuple(2 if v == 1 else v for v in p.entries), p.offset
                    )
                return p

        report = verify_axioms(Corrupted(12), n_limit=4)
        assert not report["pass"]
        assert any(f["axiom"] == "I" and f["n"] == 3 for f in report["failures"])


class TestProductLaw:
    def test_crt_case(self):
        system = IdempotentSystem(18)
        product, verdict = product_law(system, 1, 2, 2, 3)
        assert verdict == {"kind": "projection", "j": 5, "level": 6, "residual": 0.0}
        assert product.isclose(system.projection(5, 6), 0)

    def test_insolvable_case_is_zero(self):
        system = IdempotentSystem(8)
        product, verdict = product_law(system, 0, 2, 1, 2)
        assert verdict["kind"] == "zero"
        assert product.isclose(product.zero(), 0)

    def test_coprime_same_index(self):
        system = IdempotentSystem(45)
        for j in range(3):
            product, verdict = product_law(system, j, 3, j, 5)
            assert verdict["kind"] == "projection"
            assert product.isclose(system.projection(j, 15), 0)

    def test_exhaustive_small_levels(self):
        for n in range(1, 9):
            for m in range(1, 9):
                lcm = n * m // math.gcd(n, m)
                system = IdempotentSystem(3 * lcm)
                for k in range(n):
                    for l in range(m):
                        product_law(system, k, n, l, m, tol=0)  # raises on failure


class TestDivisorProductLaw:
    def test_congruent_index_keeps_finer_projection(self):
        system = IdempotentSystem(8)
        result = divisor_product_law(system, 1, 2, 3, 4)
        assert result.isclose(system.projection(3, 4), 0)

    def test_incongruent_index_kills(self):
        system = IdempotentSystem(8)
        result = divisor_product_law(system, 0, 2, 3, 4)
        assert result.isclose(result.zero(), 0)

    def test_level_one_absorbs(self):
        system = IdempotentSystem(10)
        for k in range(5):
            result = divisor_product_law(system, 3, 1, k, 5)
            assert result.isclose(system.projection(k, 5), 0)

    def test_requires_divisibility(self):
        with pytest.raises(ValueError):
            divisor_product_law(IdempotentSystem(8), 0, 3, 1, 4)


class TestWeightedIdentities:
    def test_ones_pair(self):
        system = IdempotentSystem(24)
        ones = [1] * 12
        report = weighted_product_identities(ones, ones, system, 1, 12, tol=0)
        assert report["pass"]
        # scalar shadows of the particular cases
        assert lcm_tuple_count(2, 4) == 5
        assert 2 ** omega(12) == 4

    def test_mixed_pair(self):
        system = IdempotentSystem(30)
        report = weighted_product_identities(
            scalar_table(totient, 15), scalar_table(lambda n: n, 15), system, 2, 15
        )
        assert report["pass"]


class TestMultiplicativityOfProjections:
    def test_fixed_index_family(self):
        from idemarith.convolution import AlgFunction, is_multiplicative

        system = IdempotentSystem(60)
        for j in (0, 1, 5):
            fam = AlgFunction([system.projection(j, n) for n in range(1, 31)])
            ok, ce = is_multiplicative(fam, 0)
            assert ok, ce
