"""Identity suites: each runner re-verifies one family of results against
independent oracles and returns a JSON-ready report.

Known discrepancies in the source material (documented typos) are
evaluated and quarantined in the report's "errata" section; they carry
data but never count as failures.
"""

from __future__ import annotations

import math

import numpy as np

from . import analytic, arith, convolution as conv
from .algebra import DenseMatrix, operator_norm
from .arith import (
    EvenFunction,
    divisors,
    epsilon,
    jordan_totient,
    lcm_tuple_count,
    mobius,
    omega,
    ramanujan_orthogonality,
    ramanujan_sum,
    rf_transform,
    totient,
)
from .convolution import (
    AlgFunction,
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
from .idempotents import IdempotentSystem, product_law, verify_axioms, weighted_product_identities
from .ramanujan_ops import OperatorFamily, default_dim_for

SUITES = ("axioms", "product-law", "ramanujan", "transforms", "even-identity", "analytic", "all")

__all__ = ["SUITES", "run_suite"]


def _check(checks: list, identity: str, params: dict, residual, tol: float,
           extra_ok: bool = True):
    checks.append(
        {
            "identity": identity,
            "params": params,
            "max_residual": float(residual),
            "pass": bool(float(residual) <= tol and extra_ok),
        }
    )


def _random_even(rng: np.random.Generator, d: int) -> EvenFunction:
    return EvenFunction(d, {r: int(rng.integers(-9, 10)) for r in divisors(d)})


def _suite_axioms(checks, errata, n_max, dim, tol, seed):
    system = IdempotentSystem(dim)
    n_limit = min(n_max, 12)
    report = verify_axioms(system, n_limit)
    _check(checks, "idempotent system axioms I/II/III + completeness",
           {"dim": dim, "n_limit": n_limit}, 0.0 if report["pass"] else 1.0, tol)
    exact_small = IdempotentSystem(min(dim, 64))
    dft = IdempotentSystem(min(dim, 64), mode="dft-float")
    worst = 0.0
    for n in range(1, min(n_max, 24) + 1):
        for j in range(n):
            worst = max(worst, exact_small.projection(j, n).distance(dft.projection(j, n)))
    _check(checks, "congruence-exact vs dft-float provider",
           {"dim": min(dim, 64), "n_limit": min(n_max, 24)}, worst, tol)
    proj_mult_max = min(n_max, min(dim, 64) // 2)
    for j in (0, 1, 5):
        fam = AlgFunction([exact_small.projection(j, n) for n in range(1, max(proj_mult_max, 2) + 1)])
        ok, ce = is_multiplicative(fam, tol)
        _check(checks, "projection family multiplicativity",
               {"j": j, "n_max": fam.n_max, "dim": exact_small.dim},
               0.0 if ok else 1.0, tol)


def _suite_product_law(checks, errata, n_max, dim, tol, seed):
    n_cap = min(n_max, 12)
    cases = 0
    worst = 0.0
    for n in range(1, n_cap + 1):
        for m in range(1, n_cap + 1):
            lcm = n * m // math.gcd(n, m)
            pair_dim = dim if dim % lcm == 0 else 3 * lcm
            system = IdempotentSystem(pair_dim)
            for k in range(n):
                for l in range(m):
                    _, verdict = product_law(system, k, n, l, m, tol)
                    worst = max(worst, verdict["residual"])
                    cases += 1
    _check(checks, "projection product law with CRT index",
           {"n_max": n_cap, "cases": cases}, worst, tol)
    system = IdempotentSystem(dim if dim % 12 == 0 else 24)
    worst = 0.0
    for n in (1, 2, 3, 4, 6):
        for m in (n * 2, n * 3):
            for j in range(n):
                for k in range(m):
                    product = system.projection(j, n) * system.projection(k, m)
                    predicted = (
                        system.projection(k, m)
                        if (k - j) % n == 0
                        else product.zero()
                    )
                    worst = max(worst, product.distance(predicted))
    _check(checks, "divisor-level product law", {"dim": system.dim}, worst, tol)


def _suite_ramanujan(checks, errata, n_max, dim, tol, seed):
    n_cap = min(n_max, 30)
    worst_scalar = 0.0
    for n in range(1, min(n_max, 200) + 1):
        k_cop = np.array([k for k in range(1, n + 1) if math.gcd(k, n) == 1])
        j_arr = np.arange(n)
        sums = np.exp(2j * np.pi * np.outer(j_arr, k_cop) / n).sum(axis=1)
        exact = np.array([ramanujan_sum(n, j) for j in range(n)], dtype=complex)
        worst_scalar = max(worst_scalar, float(np.max(np.abs(sums - exact))))
        if ramanujan_sum(n, 1) != mobius(n) or ramanujan_sum(n, n) != totient(n):
            worst_scalar = max(worst_scalar, 1.0)
    _check(checks, "scalar Ramanujan sums vs root-of-unity oracle",
           {"n_max": min(n_max, 200)}, worst_scalar, tol)

    worst_ops = 0.0
    for n in range(1, n_cap + 1):
        family = OperatorFamily(IdempotentSystem(default_dim_for(n)))
        for j in (0, 1, 2):
            res = family.c_operator_constructions(j, n)["residuals"]
            worst_ops = max(worst_ops, max(res.values()))
            for rep in (family.t_top_identities(j, n, tol),
                        family.t_decomposition(j, n, tol),
                        family.c_t_transforms(j, n, tol)):
                worst_ops = max(worst_ops, rep["max_residual"])
                if not rep["pass"]:
                    worst_ops = max(worst_ops, 1.0)
    _check(checks, "operator Ramanujan identities (three constructions, "
                   "partitions, transforms)",
           {"n_max": n_cap, "j": [0, 1, 2]}, worst_ops, tol)

    mult_dim = dim
    family = OperatorFamily(IdempotentSystem(mult_dim))
    mult_max = min(n_max, 30)
    ok_all = True
    for j in (0, 1, 5):
        c_fam = AlgFunction([family.c_operator(j, n) for n in range(1, mult_max + 1)])
        t_fam = AlgFunction([family.t_operator(n, j, n) for n in range(1, mult_max + 1)])
        for fam_ in (c_fam, t_fam):
            ok, _ = is_multiplicative(fam_, tol)
            ok_all = ok_all and ok
    _check(checks, "multiplicativity of operator families",
           {"n_max": mult_max, "dim": mult_dim, "j": [0, 1, 5]},
           0.0 if ok_all else 1.0, tol)


def _suite_transforms(checks, errata, n_max, dim, tol, seed):
    rng = np.random.default_rng(seed)
    worst = 0.0
    factor_ok = True
    moduli = [d for d in (1, 2, 3, 4, 6, 8, 12, 16, 18, 24, 30, 36, 40, 48) if d <= max(n_max, 48)]
    for _ in range(20):
        d = int(rng.choice(moduli))
        alpha = _random_even(rng, d)
        coeffs = rf_transform(alpha, tol)  # raises on reconstruction failure
        for r in divisors(d):
            if abs(coeffs.unnormalized[r] - d * coeffs.orthogonal[r]) > tol:
                factor_ok = False
    _check(checks, "even-function Fourier coefficients: reconstruction and "
                   "factor-of-d between normalizations",
           {"samples": 20, "max_modulus": max(moduli)}, 0.0 if factor_ok else 1.0, tol)
    errata.append({
        "id": "rf-normalization",
        "claim": "the displayed coefficient formula is paired with the expansion as-is",
        "observed": "the double-sum coefficients are d times the reconstructing ones; "
                    "both normalizations are exposed",
    })

    ortho_worst = 0
    for n in range(1, min(n_max, 100) + 1):
        for l in range(1, n + 1):
            expected = n if math.gcd(l, n) == 1 else 0
            ortho_worst = max(ortho_worst, abs(ramanujan_orthogonality(n, l) - expected))
    _check(checks, "Ramanujan sum orthogonality", {"n_max": min(n_max, 100)},
           ortho_worst, tol)

    worst = 0.0
    for n in range(1, min(n_max, 30) + 1):
        family = OperatorFamily(IdempotentSystem(default_dim_for(n)))
        for j in (0, 1, 2):
            rep = family.c_t_transforms(j, n, tol)
            worst = max(worst, rep["max_residual"])
    _check(checks, "operator/idempotent transform pair",
           {"n_max": min(n_max, 30), "j": [0, 1, 2]}, worst, tol)


def _suite_even_identity(checks, errata, n_max, dim, tol, seed):
    rng = np.random.default_rng(seed)
    worst = 0.0
    samples = 0
    for n in (4, 6, 12, 24):
        family = OperatorFamily(IdempotentSystem(2 * n))
        for _ in range(5):
            alpha = _random_even(rng, n)
            for j in (0, 1, 2):
                rep = family.even_function_identity(alpha, j, n, tol)
                worst = max(worst, rep["max_residual"])
            samples += 1
    _check(checks, "even-function expansion over Ramanujan operators",
           {"moduli": [4, 6, 12, 24], "samples": samples, "j": [0, 1, 2]},
           worst, tol)


def _suite_convolution(checks, errata, n_max, dim, tol, seed):
    rng = np.random.default_rng(seed)
    n_assoc = min(n_max, 60)
    worst = 0
    for _ in range(3):
        a = [int(v) for v in rng.integers(-5, 6, n_assoc)]
        b = [int(v) for v in rng.integers(-5, 6, n_assoc)]
        c = [int(v) for v in rng.integers(-5, 6, n_assoc)]
        for prod in (scalar_dirichlet, scalar_lcm, scalar_unitary):
            lhs = prod(prod(a, b), c)
            rhs = prod(a, prod(b, c))
            worst = max(worst, max(abs(x - y) for x, y in zip(lhs, rhs)))
            worst = max(worst, max(abs(x - y) for x, y in zip(prod(a, b), prod(b, a))))
    _check(checks, "associativity and commutativity of the three products",
           {"n_max": n_assoc}, worst, tol)

    from .algebra import Scalar

    unit = Scalar(1)
    ident = dirichlet_identity(unit, n_assoc)
    f = AlgFunction.lift(totient, unit, n_assoc)
    worst = 0.0
    for prod in (dirichlet_convolve, lcm_convolve, unitary_convolve):
        g = prod(f, ident)
        h = prod(ident, f)
        worst = max(worst, max(g(n).distance(f(n)) for n in range(1, n_assoc + 1)))
        worst = max(worst, max(h(n).distance(f(n)) for n in range(1, n_assoc + 1)))
    inv = dirichlet_inverse(f, tol)  # raises if the round trip fails
    rt = dirichlet_convolve(f, inv)
    worst = max(worst, max(rt(n).distance(ident(n)) for n in range(1, n_assoc + 1)))
    _check(checks, "identity laws and Dirichlet inverse round trip",
           {"n_max": n_assoc}, worst, tol)

    lehmer_n = min(n_max if n_max > 60 else 200, 200)
    worst = 0
    for _ in range(10):
        a = [int(v) for v in rng.integers(-5, 6, lehmer_n)]
        b = [int(v) for v in rng.integers(-5, 6, lehmer_n)]
        rep = lehmer_identity_check(a, b, tol=tol)
        if not rep["pass"]:
            worst = max(worst, 1.0)
    _check(checks, "product identity linking the lcm and Dirichlet sums",
           {"n_max": lehmer_n, "pairs": 10}, worst, tol)
    errata.append({
        "id": "lehmer-display",
        "claim": "the displayed left side repeats the same factor twice",
        "observed": "read as (nu0*alpha)(nu0*beta); verified in that form",
    })
    errata.append({
        "id": "lcm-tuple-count-display",
        "claim": "the displayed tuple-count product uses (a_s+1)^s in every factor",
        "observed": "the brute-force count matches prod_k ((a_k+1)^s - a_k^s)",
        "data": {"n": 12, "s": 2, "value": lcm_tuple_count(2, 12)},
    })

    system = IdempotentSystem(min(dim, 72))
    wrep = weighted_product_identities(
        scalar_table(lambda n: 1, 30), scalar_table(totient, 30), system, 1, 30, tol
    )
    _check(checks, wrep["identity"], {"j": 1, "n_max": 30, "dim": system.dim},
           wrep["max_residual"], tol)

    # the norm-multiplicativity claim fails for the max-row-sum norm
    f2 = DenseMatrix([[1, 1], [0, 1]])
    f3 = DenseMatrix([[1, 0], [1, 1]])
    errata.append({
        "id": "norm-multiplicativity",
        "claim": "n -> ||f(n)|| is multiplicative for any norm",
        "observed": "submultiplicative only; counterexample with the max-row-sum norm",
        "data": {
            "norm_f2": operator_norm(f2),
            "norm_f3": operator_norm(f3),
            "norm_f6": operator_norm(f2 * f3),
        },
    })


def _suite_analytic(checks, errata, n_max, dim, tol, seed):
    worst = 0
    for n in range(2, min(n_max, 30) + 1):
        for big_n in range(1, 65):
            direct, closed = analytic.det_c0(n, big_n)
            worst = max(worst, abs(direct - closed))
    _check(checks, "determinant of the Ramanujan diagonal: direct vs closed form",
           {"n_max": min(n_max, 30), "dim_max": 64}, worst, tol)
    errata.append({
        "id": "determinant-sign",
        "claim": "the determinant equals the bare product of (1-p)^floor(N/p)",
        "observed": "a sign prefactor (-1)^(N*omega(n)) is required; the bare "
                    "product flips sign when N and omega(n) are both odd",
        "data": {
            "n": 2, "dim": 3,
            "direct": analytic.det_c0(2, 3)[0],
            "unsigned_form": analytic.det_c0_unsigned_form(2, 3),
        },
    })

    worst = 0
    sample = None
    for n in range(2, min(n_max, 60) + 1):
        for big_n in range(1, 201, 7):
            rep = analytic.trace_identities(n, big_n)
            if not rep["pass"]:
                worst = max(worst, 1)
            if (n, big_n) == (6, 10) or sample is None:
                sample = rep
    _check(checks, "trace identities for both diagonals",
           {"n_max": min(n_max, 60), "dim_max": 200}, worst, tol)
    chain = analytic.trace_identities(6, 10)["erratum"]
    errata.append({
        "id": "trace-floor-chain",
        "claim": "coprime floor sum = N*omega(n) - sum floor(N/p) = sum mu(r) floor(N/r)",
        "observed": "the three expressions disagree at (n, N) = (6, 10)",
        "data": {
            "coprime_floor_sum": chain["coprime_floor_sum"],
            "omega_expression": chain["omega_expression"],
            "mu_floor_sum": analytic.trace_identities(6, 10)["trace_t0_closed"],
        },
    })
    c7 = analytic.trace_identities(6, 7)
    errata.append({
        "id": "trace-prime-power-sum",
        "claim": "sum over prime powers equals the Ramanujan diagonal trace",
        "observed": "disagrees off multiples of n, e.g. (n, N) = (6, 7)",
        "data": {
            "prime_power_sum": c7["erratum"]["prime_power_sum_for_trace_c0"],
            "trace": c7["trace_c0"],
        },
    })

    euler_n = 512
    phi_transform = scalar_dirichlet([1] * euler_n, scalar_table(totient, euler_n))
    worst = max(abs(phi_transform[m - 1] - m) for m in range(1, euler_n + 1))
    for r in (2, 3):
        jr = scalar_dirichlet([1] * euler_n,
                              scalar_table(lambda n, r=r: jordan_totient(r, n), euler_n))
        worst = max(worst, max(abs(jr[m - 1] - m**r) for m in range(1, euler_n + 1)))
    mu_transform = scalar_dirichlet([1] * euler_n, scalar_table(mobius, euler_n))
    worst = max(worst, max(abs(mu_transform[m - 1] - epsilon(m)) for m in range(1, euler_n + 1)))
    _check(checks, "Euler-operator representation of totient and Jordan powers",
           {"m_max": euler_n, "r_max": 3}, worst, tol)

    space = analytic.TruncatedSpace(128, 1)
    iu = analytic.iu_star_representation(space, 128)
    _check(checks, iu["identity"], {"n_max": 128},
           0.0 if iu["pass"] else 1.0, tol)
    errata.append({
        "id": "iu-star-candidate",
        "claim": "the diagonal map of mu * nu_1 equals integration-compose-backward-shift",
        "observed": "mu * nu_1 gives the Euler diagonal m; mu * nu_{-1} gives 1/m, "
                    "matching away from the m = 1 truncation edge",
        "data": iu["matches"],
    })

    prep = analytic.p_operator_identities(analytic.TruncatedSpace(64, 1), 64,
                                          pairs=20, seed=seed, tol=tol)
    _check(checks, prep["identity"], {"n_max": 64, "pairs": 20},
           max(prep["algebra_map_max_residual"], prep["euler_power_max_residual"]), tol)

    ok = True
    for table, expected in (
        (scalar_table(totient, 64), "plausibly-continuous"),
        (scalar_table(epsilon, 64), "plausibly-continuous"),
        (scalar_table(lambda n: 2**n, 64), "not-continuous"),
    ):
        diag = analytic.growth_indicator(table, 64)
        ok = ok and diag.classification == expected
    _check(checks, "finite-prefix growth diagnostic classification",
           {"prefix": 64}, 0.0 if ok else 1.0, tol)


_RUNNERS = {
    "axioms": (_suite_axioms,),
    "product-law": (_suite_product_law,),
    "ramanujan": (_suite_ramanujan,),
    "transforms": (_suite_transforms,),
    "even-identity": (_suite_even_identity,),
    "analytic": (_suite_analytic,),
    "all": (_suite_axioms, _suite_product_law, _suite_ramanujan, _suite_transforms,
            _suite_even_identity, _suite_convolution, _suite_analytic),
}


def run_suite(name: str, n_max: int = 60, dim: int = 2520, tol: float = 1e-9,
              seed: int = 20260826) -> dict:
    """Run one named identity suite and return its report.

    The report passes iff every entry in "checks" passes; "errata" entries
    document known typos in the source material and never fail a run.
    """
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    checks: list[dict] = []
    errata: list[dict] = []
    for runner in _RUNNERS[name]:
        runner(checks, errata, n_max, dim, tol, seed)
    failed = [c for c in checks if not c["pass"]]
    return {
        "suite": name,
        "params": {"n_max": n_max, "dim": dim, "tolerance": tol, "seed": seed},
        "checks": checks,
        "errata": errata,
        "summary": {"total": len(checks), "passed": len(checks) - len(failed),
                    "failed": len(failed)},
        "pass": not failed,
    }
