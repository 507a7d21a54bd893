"""Exact scalar number theory: factorization, classical multiplicative
functions, Ramanujan sums, the CRT solver, and even-function Fourier
coefficients.

Everything here is computed in exact integer or rational arithmetic.
Complex floats only appear in callers that use root-of-unity oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

MAX_FACTOR_INPUT = 10**12

__all__ = [
    "MAX_FACTOR_INPUT",
    "EvenFunction",
    "RFCoefficients",
    "crt_solve",
    "divisors",
    "epsilon",
    "euclid",
    "factorize",
    "is_prime",
    "jordan_totient",
    "lcm_tuple_count",
    "mobius",
    "nu",
    "omega",
    "one",
    "ramanujan_orthogonality",
    "ramanujan_sum",
    "rf_transform",
    "tau",
    "totient",
]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Canonical factorization of n as ((p1, a1), (p2, a2), ...), primes
    ascending.  n = 1 gives the empty tuple.

    Raises ValueError for n < 1 or n beyond the supported trial-division
    range (10^12).
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n > MAX_FACTOR_INPUT:
        raise ValueError(f"factorize supports n <= {MAX_FACTOR_INPUT}, got {n}")
    pairs = []
    rest = n
    for p in (2, 3):
        if rest % p == 0:
            a = 0
            while rest % p == 0:
                rest //= p
                a += 1
            pairs.append((p, a))
    d = 5
    while d * d <= rest:
        for p in (d, d + 2):
            if rest % p == 0:
                a = 0
                while rest % p == 0:
                    rest //= p
                    a += 1
                pairs.append((p, a))
        d += 6
    if rest > 1:
        pairs.append((rest, 1))
    return tuple(pairs)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, a in factorize(n):
        divs = [d * p**k for d in divs for k in range(a + 1)]
    return tuple(sorted(divs))


def euclid(a: int, b: int) -> tuple[int, int]:
    """(gcd, lcm) of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError("euclid requires positive integers")
    g = math.gcd(a, b)
    return g, a * b // g


def mobius(n: int) -> int:
    f = factorize(n)
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n: int) -> int:
    """Euler's phi via n * prod(1 - 1/p), exact."""
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def jordan_totient(r: int, n: int) -> int:
    """J_r(n) = n^r * prod_{p|n} (1 - p^{-r}), exact; J_1 = totient."""
    if r < 1:
        raise ValueError("jordan_totient requires r >= 1")
    result = 1
    for p, a in factorize(n):
        result *= p ** (r * (a - 1)) * (p**r - 1)
    return result


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize(n))


def tau(n: int) -> int:
    """Number of divisors."""
    result = 1
    for _, a in factorize(n):
        result *= a + 1
    return result


def nu(k: int, n: int):
    """nu_k(n) = n^k; an int for k >= 0, an exact Fraction for k < 0."""
    if n < 1:
        raise ValueError("nu requires n >= 1")
    if k >= 0:
        return n**k
    return Fraction(1, n ** (-k))


def epsilon(n: int) -> int:
    """Dirichlet unit: 1 at n = 1, else 0."""
    return 1 if n == 1 else 0


def one(n: int) -> int:
    """The constant-one function (nu_0)."""
    return 1


@lru_cache(maxsize=None)
def _ramanujan_reduced(n: int, g: int) -> int:
    # g = gcd(j, n); c_n(j) = sum_{d | g} d * mu(n/d)
    return sum(d * mobius(n // d) for d in divisors(g))


def ramanujan_sum(n: int, j: int) -> int:
    """c_n(j), exact, via the divisor formula sum_{d | gcd(j,n)} d*mu(n/d).

    j may be any integer; it is reduced mod n (c_n is n-periodic).
    """
    if n < 1:
        raise ValueError("ramanujan_sum requires n >= 1")
    return _ramanujan_reduced(n, math.gcd(j % n, n))


def lcm_tuple_count(s: int, n: int) -> int:
    """M_s(n): the number of s-tuples of positive integers with lcm n,
    prod_k ((a_k + 1)^s - a_k^s) over the exponents of n.
    """
    if s < 1:
        raise ValueError("lcm_tuple_count requires s >= 1")
    result = 1
    for _, a in factorize(n):
        result *= (a + 1) ** s - a**s
    return result


def crt_solve(k: int, n: int, l: int, m: int) -> Optional[int]:
    """The unique j in [0, lcm(n, m)) with j = k (mod n) and j = l (mod m),
    or None when gcd(n, m) does not divide l - k.
    """
    if n < 1 or m < 1:
        raise ValueError("crt_solve requires positive moduli")
    g = math.gcd(n, m)
    if (l - k) % g != 0:
        return None
    lcm = n * m // g
    t = ((l - k) // g) * pow(n // g, -1, m // g) % (m // g)
    return (k + n * t) % lcm


def ramanujan_orthogonality(n: int, l: int) -> int:
    """sum_{r|n} c_n(n/r) c_r(l): equals n when gcd(l, n) = 1, else 0."""
    return sum(ramanujan_sum(n, n // r) * ramanujan_sum(r, l) for r in divisors(n))


@dataclass(frozen=True)
class EvenFunction:
    """A function whose value at n depends only on gcd(n, d): stored as one
    value per divisor of d.
    """

    modulus: int
    values: dict = field(hash=False)

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if set(self.values) != set(divisors(self.modulus)):
            raise ValueError(
                f"values must be keyed by exactly the divisors of {self.modulus}"
            )

    @classmethod
    def from_callable(cls, fn: Callable[[int], complex], d: int) -> "EvenFunction":
        return cls(d, {r: fn(r) for r in divisors(d)})

    def __call__(self, n: int):
        return self.values[math.gcd(n, self.modulus)]


@dataclass(frozen=True)
class RFCoefficients:
    """Ramanujan-Fourier coefficients of an even function mod d, in both
    normalizations.

    ``orthogonal`` reconstructs: alpha(n) = sum_{r|d} a(r) c_r(n).
    ``unnormalized`` is the double-sum form R(alpha)(r) = sum_{delta|d}
    alpha(d/delta) c_delta(d/r), which works out to d times the
    orthogonal coefficients; both are exposed, and the factor-of-d
    relationship is itself verified at construction.
    """

    modulus: int
    unnormalized: dict = field(hash=False)
    orthogonal: dict = field(hash=False)


class ReconstructionError(ValueError):
    """The Ramanujan-Fourier reconstruction residual exceeded tolerance."""


def rf_transform(alpha: EvenFunction, tol: float = 1e-9) -> RFCoefficients:
    """Both Ramanujan-Fourier coefficient normalizations of an even function.

    Verifies (a) unnormalized = d * orthogonal entrywise and (b) the
    orthogonal coefficients reconstruct alpha on 1..d; raises
    ReconstructionError if either residual exceeds tol.
    """
    d = alpha.modulus
    divs = divisors(d)
    unnormalized = {
        r: sum(alpha(d // delta) * ramanujan_sum(delta, d // r) for delta in divs)
        for r in divs
    }
    orthogonal = {
        r: Fraction(1, d * totient(r))
        * sum(alpha(k) * ramanujan_sum(r, k) for k in range(1, d + 1))
        for r in divs
    }
    for r in divs:
        if abs(unnormalized[r] - d * orthogonal[r]) > tol:
            raise ReconstructionError(
                f"unnormalized/orthogonal mismatch at r={r}"
            )
    for n in range(1, d + 1):
        recon = sum(orthogonal[r] * ramanujan_sum(r, n) for r in divs)
        if abs(recon - alpha(n)) > tol:
            raise ReconstructionError(
                f"reconstruction residual {abs(recon - alpha(n))} at n={n}"
            )
    return RFCoefficients(d, unnormalized, orthogonal)
