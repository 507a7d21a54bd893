"""Operator-valued Ramanujan sums C_j(n), the divisor-partition idempotents
T_{r,j}(n), and the identities connecting them.

Every operator here is diagonal in the congruence realization, so each
identity reduces entrywise to a scalar Ramanujan-sum identity; the exact
integer path is primary and the root-of-unity sums are recomputed only as
float oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .algebra import DEFAULT_TOL, DiagonalOperator
from .arith import (
    EvenFunction,
    divisors,
    factorize,
    mobius,
    ramanujan_sum,
    rf_transform,
    tau,
)
from .idempotents import IdempotentSystem

__all__ = ["OperatorFamily", "default_dim_for"]


def default_dim_for(n: int, minimum: int = 32) -> int:
    """Smallest multiple of n that is >= minimum (the report truncation)."""
    return n * max(1, -(-minimum // n))


class OperatorFamily:
    """S(n), C_j(n), and T_{r,j}(n) over one idempotent system."""

    def __init__(self, system: IdempotentSystem):
        self.system = system
        self._s_cache: dict[int, DiagonalOperator] = {}

    @property
    def dim(self) -> int:
        return self.system.dim

    def s_operator(self, n: int) -> DiagonalOperator:
        """Root-of-unity diagonal S(n) e_k = eps_n^k e_k; S(n)^n = e."""
        if n not in self._s_cache:
            k = np.arange(self.system.offset, self.system.offset + self.dim)
            self._s_cache[n] = DiagonalOperator(
                np.exp(2j * np.pi * k / n), self.system.offset
            )
        return self._s_cache[n]

    def c_operator(self, j: int, n: int) -> DiagonalOperator:
        """C_j(n) on the exact path: entry at basis index m is c_n(m - j)."""
        return DiagonalOperator(
            (ramanujan_sum(n, m - j) for m in self.system._indices),
            self.system.offset,
        )

    def c_operator_constructions(self, j: int, n: int) -> dict:
        """The three independent constructions of C_j(n) and their residuals
        against the exact entrywise form:

        root_of_unity  sum over gcd(k, n) = 1 of eps_n^{-jk} S^k(n) (float)
        moebius_sum    (mu * nu1 P_j)(n), exact
        prime_product  n * prod over p^a || n of (P_j(p^a) - (1/p) P_j(p^{a-1}))
        """
        exact = self.c_operator(j, n)
        m_idx = np.arange(self.system.offset, self.system.offset + self.dim)
        acc = np.zeros(self.dim, dtype=complex)
        for k in range(1, n + 1):
            if math.gcd(k, n) == 1:
                acc += np.exp(2j * np.pi * ((k * (m_idx - j)) % n) / n)
        root_of_unity = DiagonalOperator(acc, self.system.offset)

        moebius_sum = exact.zero()
        for d in divisors(n):
            moebius_sum = moebius_sum + self.system.projection(j, n // d).scale(
                mobius(d) * (n // d)
            )

        prime_product = self.system.unit()
        for p, a in factorize(n):
            factor = self.system.projection(j, p**a) - self.system.projection(
                j, p ** (a - 1)
            ).scale(Fraction(1, p))
            prime_product = prime_product * factor
        prime_product = prime_product.scale(n)

        return {
            "exact": exact,
            "root_of_unity": root_of_unity,
            "moebius_sum": moebius_sum,
            "prime_product": prime_product,
            "residuals": {
                "root_of_unity": exact.distance(root_of_unity),
                "moebius_sum": exact.distance(moebius_sum),
                "prime_product": exact.distance(prime_product),
            },
        }

    def t_operator(self, r: int, j: int, n: int) -> DiagonalOperator:
        """T_{r,j}(n): the 0/1 diagonal selecting basis indices m with
        gcd(m - j, n) = n/r; requires r | n.
        """
        if n % r != 0:
            raise ValueError(f"t_operator requires r | n, got r={r}, n={n}")
        target = n // r
        return DiagonalOperator(
            (1 if math.gcd((m - j) % n, n) == target else 0
             for m in self.system._indices),
            self.system.offset,
        )

    def t_top_identities(self, j: int, n: int, tol: float = DEFAULT_TOL) -> dict:
        """T_{n,j}(n) = sum_{d|n} mu(d) P_j(d) = prod_{p|n} (e - P_j(p))."""
        top = self.t_operator(n, j, n)
        moebius_sum = top.zero()
        for d in divisors(n):
            moebius_sum = moebius_sum + self.system.projection(j, d).scale(mobius(d))
        prime_product = self.system.unit()
        for p, _ in factorize(n):
            prime_product = prime_product * (self.system.unit() - self.system.projection(j, p))
        residuals = {
            "moebius_sum": top.distance(moebius_sum),
            "prime_product": top.distance(prime_product),
        }
        return {
            "identity": "coprime selector via Moebius sum and prime product",
            "j": j,
            "n": n,
            "dim": self.dim,
            "residuals": residuals,
            "max_residual": max(residuals.values()),
            "pass": max(residuals.values()) <= tol,
        }

    def t_decomposition(self, j: int, n: int, tol: float = DEFAULT_TOL) -> dict:
        """{T_{r,j}(n): r | n} is a family of tau(n) orthogonal idempotents
        summing to the identity.
        """
        divs = divisors(n)
        ops = {r: self.t_operator(r, j, n) for r in divs}
        total = ops[divs[0]].zero()
        for r in divs:
            total = total + ops[r]
        residual = total.distance(self.system.unit())
        for r in divs:
            for rp in divs:
                expected = ops[r] if r == rp else ops[r].zero()
                residual = max(residual, (ops[r] * ops[rp]).distance(expected))
        return {
            "identity": "divisor-indexed orthogonal idempotent partition",
            "j": j,
            "n": n,
            "dim": self.dim,
            "members": len(divs),
            "expected_members": tau(n),
            "max_residual": residual,
            "pass": residual <= tol and len(divs) == tau(n),
        }

    def c_t_transforms(self, j: int, n: int, tol: float = DEFAULT_TOL) -> dict:
        """Both transform directions between C_j and the T_{r,j} family:
        C_j(n) = sum_{r|n} c_n(n/r) T_{r,j}(n) and
        T_{n,j}(n) = (1/n) sum_{r|n} c_n(n/r) C_j(r).
        """
        divs = divisors(n)
        forward = self.c_operator(j, n).zero()
        for r in divs:
            forward = forward + self.t_operator(r, j, n).scale(ramanujan_sum(n, n // r))
        backward = forward.zero()
        for r in divs:
            backward = backward + self.c_operator(j, r).scale(ramanujan_sum(n, n // r))
        backward = backward.scale(Fraction(1, n))
        residuals = {
            "c_from_t": self.c_operator(j, n).distance(forward),
            "t_from_c": self.t_operator(n, j, n).distance(backward),
        }
        return {
            "identity": "transforms between Ramanujan operator and divisor idempotents",
            "j": j,
            "n": n,
            "dim": self.dim,
            "residuals": residuals,
            "max_residual": max(residuals.values()),
            "pass": max(residuals.values()) <= tol,
        }

    def even_function_identity(self, alpha: EvenFunction, j: int, n: int,
                               tol: float = DEFAULT_TOL) -> dict:
        """sum_{r|n} alpha(n/r) C_j(r) = sum_{r|n} R(alpha)(r) T_{r,j}(n),
        with R in the un-normalized (double-sum) form.
        """
        if alpha.modulus != n:
            raise ValueError(f"alpha must be even mod n={n}, got modulus {alpha.modulus}")
        coeffs = rf_transform(alpha, tol).unnormalized
        lhs = self.c_operator(j, n).zero()
        rhs = lhs
        for r in divisors(n):
            lhs = lhs + self.c_operator(j, r).scale(alpha(n // r))
            rhs = rhs + self.t_operator(r, j, n).scale(coeffs[r])
        residual = lhs.distance(rhs)
        return {
            "identity": "even-function expansion over Ramanujan operators",
            "j": j,
            "n": n,
            "dim": self.dim,
            "max_residual": residual,
            "pass": residual <= tol,
        }
