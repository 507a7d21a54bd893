"""Truncated monomial-basis model of the analytic function spaces: the
C_0/T_0 diagonals with their determinant and trace identities, the
diagonal map P(alpha) with entries (nu0 * alpha)(m), shift/integration
matrices, and the finite-prefix growth diagnostic.

Some commonly quoted closed-form expressions for these traces disagree
with the coprime-count oracle; those are evaluated and reported as
erratum data, never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import DEFAULT_TOL, DenseMatrix, DiagonalOperator
from .arith import divisors, factorize, jordan_totient, mobius, nu, omega, ramanujan_sum
from .convolution import scalar_dirichlet, scalar_lcm, scalar_table

__all__ = [
    "GrowthDiagnostic",
    "TruncatedSpace",
    "c0_t0_diagonals",
    "det_c0",
    "growth_indicator",
    "iu_star_diagonal",
    "iu_star_representation",
    "p_operator",
    "p_operator_identities",
    "shift_operators",
    "trace_identities",
]


@dataclass(frozen=True)
class TruncatedSpace:
    """A finite window of the monomial basis: e_0..e_{N-1} (offset 0, the
    full-space model) or e_1..e_N (offset 1, the f(0) = 0 subspace).
    """

    dim: int
    offset: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if self.offset not in (0, 1):
            raise ValueError("offset must be 0 or 1")

    @property
    def indices(self) -> range:
        return range(self.offset, self.offset + self.dim)


def c0_t0_diagonals(n: int, space: TruncatedSpace) -> tuple[DiagonalOperator, DiagonalOperator]:
    """(C_0(n), T_0(n)) on the space: entries c_n(m) and the coprimality
    indicator of gcd(n, m), exact integers.
    """
    c0 = DiagonalOperator((ramanujan_sum(n, m) for m in space.indices), space.offset)
    t0 = DiagonalOperator(
        (1 if math.gcd(n, m) == 1 else 0 for m in space.indices), space.offset
    )
    return c0, t0


def det_c0(n: int, n_dim: int) -> tuple[int, int]:
    """det of C_0(n) restricted to e_1..e_N, two exact ways: the direct
    product prod_{k=1}^N c_n(k) and the closed form
    (-1)^(N omega(n)) prod_{p|n} (1 - p)^{floor(N/p)} for squarefree n
    (0 otherwise).

    The sign prefactor is required: each prime factor contributes
    (-1)^(N - floor(N/p)) (p - 1)^(floor(N/p)), so dropping it (as the
    bare product of (1 - p) powers does) flips the sign whenever N and
    omega(n) are both odd.  ``det_c0_unsigned_form`` evaluates the bare
    product for erratum reporting.
    """
    if n < 2:
        raise ValueError("det_c0 requires n >= 2")
    direct = 1
    for k in range(1, n_dim + 1):
        direct *= ramanujan_sum(n, k)
    if mobius(n) == 0:
        closed = 0
    else:
        closed = (-1) ** (n_dim * omega(n)) * det_c0_unsigned_form(n, n_dim)
    return direct, closed


def det_c0_unsigned_form(n: int, n_dim: int) -> int:
    """The bare product prod_{p|n} (1 - p)^(floor(N/p)); agrees with the
    determinant only when N is even or omega(n) is even.
    """
    result = 1
    for p, _ in factorize(n):
        result *= (1 - p) ** (n_dim // p)
    return result


def trace_identities(n: int, n_dim: int) -> dict:
    """Exact trace identities on e_1..e_N, plus erratum evaluations of
    alternative closed-form expressions that fail the oracle.

    Asserted: trace C_0(n) = sum_{d|n} d mu(n/d) floor(N/d) and
    trace T_0(n) = #{m <= N : gcd(m, n) = 1} = sum_{r|n} mu(r) floor(N/r).
    Logged only: the coprime floor sum sum_{gcd(k,n)=1} floor((N-k)/n) and
    N*omega(n) - sum_{p|n} floor(N/p), which disagree with the oracle.
    """
    trace_c0 = sum(ramanujan_sum(n, k) for k in range(1, n_dim + 1))
    c0_closed = sum(d * mobius(n // d) * (n_dim // d) for d in divisors(n))
    c0_prime_power_sum = sum(
        p**a * (n_dim // p**a) - p ** (a - 1) * (n_dim // p ** (a - 1))
        for p, a in factorize(n)
    )
    trace_t0 = sum(1 for m in range(1, n_dim + 1) if math.gcd(m, n) == 1)
    t0_closed = sum(mobius(r) * (n_dim // r) for r in divisors(n))
    coprime_floor_sum = sum(
        (n_dim - k) // n for k in range(1, n + 1) if math.gcd(k, n) == 1
    )
    omega_expression = n_dim * omega(n) - sum(n_dim // p for p, _ in factorize(n))
    return {
        "n": n,
        "dim": n_dim,
        "trace_c0": trace_c0,
        "trace_c0_closed": c0_closed,
        "trace_t0": trace_t0,
        "trace_t0_closed": t0_closed,
        "pass": trace_c0 == c0_closed and trace_t0 == t0_closed,
        "erratum": {
            "prime_power_sum_for_trace_c0": c0_prime_power_sum,
            "prime_power_sum_matches": c0_prime_power_sum == trace_c0,
            "coprime_floor_sum": coprime_floor_sum,
            "omega_expression": omega_expression,
            "floor_chain_matches": coprime_floor_sum == omega_expression == t0_closed,
        },
    }


def p_operator(alpha: Sequence, space: TruncatedSpace) -> DiagonalOperator:
    """The diagonal map built from a scalar table: entry (nu0 * alpha)(m)
    at index m = 1..N.  Rejects offset-0 spaces, where the constant-term
    action is a divergent series.
    """
    if space.offset != 1:
        raise ValueError("p_operator requires the offset-1 (f(0) = 0) model")
    if len(alpha) < space.dim:
        raise ValueError(f"alpha must be tabulated to {space.dim}")
    summed = scalar_dirichlet([1] * space.dim, list(alpha[: space.dim]))
    return DiagonalOperator(summed, space.offset)


def p_operator_identities(space: TruncatedSpace, n_max: int | None = None,
                          pairs: int = 20, seed: int = 7,
                          tol: float = DEFAULT_TOL) -> dict:
    """The algebra-map property P(alpha [] beta) = P(alpha) P(beta) on
    random integer tables, and the Euler-power identity
    (nu0 * J_r)(m) = m^r for r <= 3.
    """
    n_max = min(n_max or space.dim, space.dim)
    sub = TruncatedSpace(n_max, 1)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        a = [int(v) for v in rng.integers(-5, 6, n_max)]
        b = [int(v) for v in rng.integers(-5, 6, n_max)]
        lhs = p_operator(scalar_lcm(a, b), sub)
        rhs = p_operator(a, sub) * p_operator(b, sub)
        worst = max(worst, lhs.distance(rhs))
    jordan_residual = 0
    for r in range(1, 4):
        table = scalar_table(lambda n, r=r: jordan_totient(r, n), n_max)
        diag = p_operator(table, sub)
        theta_r = DiagonalOperator((m**r for m in range(1, n_max + 1)), 1)
        jordan_residual = max(jordan_residual, diag.distance(theta_r))
    return {
        "identity": "diagonal map is an algebra map for the lcm product",
        "n_max": n_max,
        "pairs": pairs,
        "algebra_map_max_residual": worst,
        "euler_power_max_residual": jordan_residual,
        "pass": worst <= tol and jordan_residual <= tol,
    }


def shift_operators(space: TruncatedSpace) -> dict[str, DenseMatrix]:
    """Matrix actions on the monomial window: the shift U (e_m -> e_{m+1},
    top dropped), backward shift U* (e_m -> e_{m-1}, bottom killed),
    integration (e_m -> e_{m+1}/(m+1), top dropped), and the Euler
    diagonal theta (e_m -> m e_m).
    """
    n = space.dim
    u = np.zeros((n, n), dtype=complex)
    u_star = np.zeros((n, n), dtype=complex)
    integ = np.zeros((n, n), dtype=complex)
    theta = np.zeros((n, n), dtype=complex)
    for i, m in enumerate(space.indices):
        theta[i, i] = m
        if i + 1 < n:
            u[i + 1, i] = 1
            integ[i + 1, i] = 1 / (m + 1)
        if i - 1 >= 0:
            u_star[i - 1, i] = 1
    return {
        "U": DenseMatrix(u),
        "U_star": DenseMatrix(u_star),
        "integration": DenseMatrix(integ),
        "theta": DenseMatrix(theta),
    }


def iu_star_diagonal(space: TruncatedSpace) -> list:
    """Exact diagonal of integration composed with the backward shift:
    0 at the bottom basis index, 1/m elsewhere.
    """
    return [
        Fraction(0) if i == 0 else Fraction(1, m)
        for i, m in enumerate(space.indices)
    ]


def iu_star_representation(space: TruncatedSpace, n_max: int | None = None) -> dict:
    """Which scalar function represents integration-compose-backward-shift:
    compares (nu0 * mu * nu_{-1})(m) (exact 1/m) and (nu0 * mu * nu_1)(m)
    (exact m, the Euler diagonal) against the 1/m target, excluding the
    truncation edge m = 1 where the backward shift kills e_1.
    """
    if space.offset != 1:
        raise ValueError("iu_star_representation requires the offset-1 model")
    n_max = min(n_max or space.dim, space.dim)
    ones = [1] * n_max
    mu_t = scalar_table(mobius, n_max)
    candidates = {
        "mu*nu_minus1": scalar_dirichlet(ones, scalar_dirichlet(mu_t, scalar_table(lambda n: nu(-1, n), n_max))),
        "mu*nu_1": scalar_dirichlet(ones, scalar_dirichlet(mu_t, scalar_table(lambda n: nu(1, n), n_max))),
    }
    target = [Fraction(1, m) for m in range(1, n_max + 1)]
    results = {
        name: all(vals[m - 1] == target[m - 1] for m in range(2, n_max + 1))
        for name, vals in candidates.items()
    }
    return {
        "identity": "diagonal of integration-compose-backward-shift",
        "n_max": n_max,
        "matches": results,
        "edge_note": "basis edge m = 1 maps to 0 under the truncated backward shift",
        "matching_candidate": [k for k, v in results.items() if v],
        "pass": results["mu*nu_minus1"] and not results["mu*nu_1"],
    }


@dataclass(frozen=True)
class GrowthDiagnostic:
    """Finite-prefix growth data for a diagonal map candidate: the m-th
    roots |(nu0 * alpha)(m)|^{1/m}, the max over the upper half of the
    prefix, and a heuristic classification.  This is a diagnostic, not a
    limsup.
    """

    prefix: int
    roots: tuple[float, ...]
    indicator: float
    trend_decreasing: bool
    classification: str


def growth_indicator(alpha: Sequence, prefix: int) -> GrowthDiagnostic:
    """Growth diagnostic for the table alpha over m = 1..prefix.

    Classified plausibly-continuous when the upper-half max is <= 1 + 1e-6,
    or when the upper-half root sequence is non-increasing and its log
    decays the way m-th roots of a subexponential sequence do (log of the
    last root at most 3/4 of the log at the half-way point; a sequence
    with a genuine limit above 1 keeps the two logs equal).
    """
    if prefix < 4:
        raise ValueError("growth_indicator requires prefix >= 4")
    if len(alpha) < prefix:
        raise ValueError(f"alpha must be tabulated to {prefix}")
    summed = scalar_dirichlet([1] * prefix, list(alpha[:prefix]))
    roots = tuple(float(abs(summed[m - 1])) ** (1.0 / m) for m in range(1, prefix + 1))
    half = -(-prefix // 2)
    upper = roots[half - 1 :]
    indicator = max(upper)
    trend = all(a >= b for a, b in zip(upper, upper[1:]))
    if indicator <= 1 + 1e-6:
        plausible = True
    elif trend and roots[-1] <= 1 + 1e-6:
        plausible = True
    elif trend and roots[half - 1] > 1 and roots[-1] > 0:
        plausible = math.log(roots[-1]) <= 0.75 * math.log(roots[half - 1])
    else:
        plausible = False
    return GrowthDiagnostic(
        prefix=prefix,
        roots=roots,
        indicator=indicator,
        trend_decreasing=trend,
        classification="plausibly-continuous" if plausible else "not-continuous",
    )
