"""Arithmetic systems of idempotents realized as congruence-indicator
diagonals, with axiom verification, the CRT product law, and the weighted
convolution identities.

The congruence-exact provider is the production path (0/1 integer
diagonals); the dft-float provider evaluates the discrete-Fourier formula
P_j(n) = (1/n) sum_l eps_n^{-lj} S^l(n) and exists purely as an oracle.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .algebra import DEFAULT_TOL, DiagonalOperator
from .arith import crt_solve, divisors, euclid, lcm_tuple_count, omega

__all__ = [
    "IdempotentSystem",
    "IdentityCheckError",
    "divisor_product_law",
    "product_law",
    "verify_axioms",
    "weighted_product_identities",
]


class IdentityCheckError(AssertionError):
    """A numerically evaluated identity disagreed with its prediction."""


class IdempotentSystem:
    """Provider of the projections P_j(n) on a truncated monomial basis.

    modes: "congruence-exact" gives the 0/1 indicator of k = j (mod n)
    over basis exponents k; "dft-float" averages powers of the root-of-
    unity diagonal S(n).
    """

    def __init__(self, dim: int, offset: int = 0, mode: str = "congruence-exact"):
        if dim < 1:
            raise ValueError("dim must be positive")
        if mode not in ("congruence-exact", "dft-float"):
            raise ValueError(f"unknown provider mode {mode!r}")
        self.dim = dim
        self.offset = offset
        self.mode = mode
        self._indices = np.arange(offset, offset + dim)

    def unit(self) -> DiagonalOperator:
        return DiagonalOperator((1,) * self.dim, self.offset)

    def projection(self, j: int, n: int) -> DiagonalOperator:
        """P_j(n); j is any integer, reduced mod n."""
        if n < 1:
            raise ValueError("level n must be positive")
        if self.mode == "congruence-exact":
            r = j % n
            return DiagonalOperator(
                (1 if k % n == r else 0 for k in range(self.offset, self.offset + self.dim)),
                self.offset,
            )
        # entry k: (1/n) sum_l eps_n^{-lj} eps_n^{lk}, float noise ~1e-16
        phases = np.exp(2j * np.pi * (np.arange(n)[:, None] * (self._indices - j)[None, :]) / n)
        return DiagonalOperator(np.mean(phases, axis=0), self.offset)


def verify_axioms(system: IdempotentSystem, n_limit: int, r_max: int = 6,
                  tol: float = DEFAULT_TOL) -> dict:
    """Check orthogonality (I), periodicity (II), refinement (III), and the
    completeness sum for all levels n <= n_limit; returns a JSON-ready
    report enumerating violations.
    """
    checks = []

    def record(axiom, n, j, r, ok):
        checks.append({"axiom": axiom, "n": n, "j": j, "r": r, "pass": bool(ok)})

    for n in range(1, n_limit + 1):
        projs = [system.projection(j, n) for j in range(n)]
        for i in range(n):
            for j in range(n):
                expected = projs[i] if i == j else projs[i].zero()
                record("I", n, (i, j), None, (projs[i] * projs[j]).isclose(expected, tol))
        for j in range(n):
            record("II", n, j, None, system.projection(j + n, n).isclose(projs[j], tol))
        total = projs[0].zero()
        for p in projs:
            total = total + p
        record("completeness", n, None, None, total.isclose(system.unit(), tol))
        for r in range(1, r_max + 1):
            for j in range(n):
                acc = projs[0].zero()
                for k in range(1, r + 1):
                    acc = acc + system.projection(j + k * n, n * r)
                record("III", n, j, r, acc.isclose(projs[j], tol))
    failures = [c for c in checks if not c["pass"]]
    return {
        "dim": system.dim,
        "offset": system.offset,
        "mode": system.mode,
        "n_limit": n_limit,
        "r_max": r_max,
        "checks": checks,
        "failures": failures,
        "summary": {"total": len(checks), "failed": len(failures)},
        "pass": not failures,
    }


def product_law(system: IdempotentSystem, k: int, n: int, l: int, m: int,
                tol: float = DEFAULT_TOL) -> tuple[DiagonalOperator, dict]:
    """P_k(n) P_l(m): returns the multiplied diagonal together with the
    symbolic verdict (zero, or P_j(lcm(n, m)) with j from the CRT), after
    asserting the two agree within tol.
    """
    product = system.projection(k, n) * system.projection(l, m)
    j = crt_solve(k, n, l, m)
    _, lcm = euclid(n, m)
    if j is None:
        verdict = {"kind": "zero"}
        predicted = product.zero()
    else:
        verdict = {"kind": "projection", "j": j, "level": lcm}
        predicted = system.projection(j, lcm)
    residual = product.distance(predicted)
    if residual > tol:
        raise IdentityCheckError(
            f"product law failed at (k={k}, n={n}, l={l}, m={m}): residual {residual}"
        )
    verdict["residual"] = residual
    return product, verdict


def divisor_product_law(system: IdempotentSystem, j: int, n: int, k: int, m: int,
                        tol: float = DEFAULT_TOL) -> DiagonalOperator:
    """P_j(n) P_k(m) for n | m: P_k(m) when k = j (mod n), else zero."""
    if m % n != 0:
        raise ValueError(f"divisor product law requires n | m, got n={n}, m={m}")
    product = system.projection(j, n) * system.projection(k, m)
    predicted = system.projection(k, m) if (k - j) % n == 0 else product.zero()
    residual = product.distance(predicted)
    if residual > tol:
        raise IdentityCheckError(
            f"divisor product law failed at (j={j}, n={n}, k={k}, m={m}): residual {residual}"
        )
    return product


def weighted_product_identities(
    alpha: Sequence,
    beta: Sequence,
    system: IdempotentSystem,
    j: int,
    n_max: int | None = None,
    tol: float = DEFAULT_TOL,
) -> dict:
    """Verify (alpha P_j [] beta P_j)(n) = (alpha [] beta)(n) P_j(n) and the
    unitary analogue for n <= n_max, plus the particular cases with
    alpha = beta = 1: M_2(n) P_j(n) and 2^omega(n) P_j(n).
    """
    from .convolution import AlgFunction, lcm_convolve, scalar_lcm, scalar_unitary, unitary_convolve

    if n_max is None:
        n_max = min(len(alpha), len(beta))
    if len(alpha) < n_max or len(beta) < n_max:
        raise ValueError("alpha and beta must be tabulated to n_max")
    proj = [system.projection(j, n) for n in range(1, n_max + 1)]
    f_a = AlgFunction([proj[n - 1].scale(alpha[n - 1]) for n in range(1, n_max + 1)])
    f_b = AlgFunction([proj[n - 1].scale(beta[n - 1]) for n in range(1, n_max + 1)])
    box_scalar = scalar_lcm(list(alpha[:n_max]), list(beta[:n_max]))
    cup_scalar = scalar_unitary(list(alpha[:n_max]), list(beta[:n_max]))
    box_ops = lcm_convolve(f_a, f_b)
    cup_ops = unitary_convolve(f_a, f_b)
    residual_box = max(
        box_ops(n).distance(proj[n - 1].scale(box_scalar[n - 1])) for n in range(1, n_max + 1)
    )
    residual_cup = max(
        cup_ops(n).distance(proj[n - 1].scale(cup_scalar[n - 1])) for n in range(1, n_max + 1)
    )
    ones = AlgFunction(proj)
    residual_m2 = max(
        lcm_convolve(ones, ones)(n).distance(proj[n - 1].scale(lcm_tuple_count(2, n)))
        for n in range(1, n_max + 1)
    )
    residual_omega = max(
        unitary_convolve(ones, ones)(n).distance(proj[n - 1].scale(2 ** omega(n)))
        for n in range(1, n_max + 1)
    )
    residuals = {
        "lcm_weighted": residual_box,
        "unitary_weighted": residual_cup,
        "lcm_tuple_count_particular": residual_m2,
        "two_omega_particular": residual_omega,
    }
    return {
        "identity": "weighted convolution identities for alpha,beta against P_j",
        "j": j,
        "n_max": n_max,
        "dim": system.dim,
        "residuals": residuals,
        "max_residual": max(residuals.values()),
        "pass": max(residuals.values()) <= tol,
    }
