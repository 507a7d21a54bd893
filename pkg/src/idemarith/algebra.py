"""Concrete unital associative algebras over the complex numbers: scalars,
dense matrices, and diagonal operators on a truncated monomial basis.

Elements are immutable values sharing one duck-typed contract: ``+``, ``-``,
``*`` (algebra product, or scaling when the other operand is a plain
number), ``scale``, ``unit``/``zero`` companions of the same shape, and a
``distance`` metric feeding approximate equality.  Diagonal operators keep
their entries as whatever scalar type they were built from (int, Fraction,
complex), so exact inputs stay exact through arithmetic.
"""

from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

DEFAULT_TOL = 1e-9

__all__ = [
    "DEFAULT_TOL",
    "DenseMatrix",
    "DiagonalOperator",
    "NonInvertibleError",
    "Scalar",
    "ShapeMismatchError",
    "determinant",
    "element_from_json",
    "element_to_json",
    "invert",
    "is_idempotent",
    "operator_norm",
    "trace",
]


class ShapeMismatchError(ValueError):
    """Arithmetic between elements of different shape (N or basis offset)."""


class NonInvertibleError(ArithmeticError):
    """The element has no inverse meeting the residual tolerance."""


def _is_number(x) -> bool:
    return isinstance(x, numbers.Number)


class Scalar:
    """A complex scalar viewed as a one-dimensional algebra element."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def _check(self, other):
        if not isinstance(other, Scalar):
            raise ShapeMismatchError(f"cannot combine Scalar with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.value - other.value)

    def __neg__(self):
        return Scalar(-self.value)

    def __mul__(self, other):
        if _is_number(other):
            return self.scale(other)
        self._check(other)
        return Scalar(self.value * other.value)

    def __rmul__(self, c):
        if _is_number(c):
            return self.scale(c)
        return NotImplemented

    def scale(self, c):
        return Scalar(c * self.value)

    def unit(self):
        return Scalar(1)

    def zero(self):
        return Scalar(0)

    def distance(self, other) -> float:
        self._check(other)
        return float(abs(complex(self.value - other.value)))

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return self.distance(other) <= tol

    def __repr__(self):
        return f"Scalar({self.value!r})"


class DiagonalOperator:
    """Diagonal operator on the monomial basis e_offset..e_{offset+N-1}.

    The algebra product of two diagonals of equal shape is the entrywise
    product.  Entries may be int, Fraction, or complex; arithmetic follows
    Python's numeric tower, so integer inputs give exact integer results.
    """

    __slots__ = ("entries", "offset")

    def __init__(self, entries, offset: int = 0):
        entries = tuple(entries)
        if not entries:
            raise ValueError("DiagonalOperator needs at least one entry")
        if offset not in (0, 1):
            raise ValueError("offset must be 0 or 1")
        self.entries = entries
        self.offset = offset

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def basis_indices(self) -> range:
        """Basis exponents m attached to the diagonal entries, in order."""
        return range(self.offset, self.offset + self.n)

    def _check(self, other):
        if not isinstance(other, DiagonalOperator):
            raise ShapeMismatchError(
                f"cannot combine DiagonalOperator with {type(other).__name__}"
            )
        if self.n != other.n or self.offset != other.offset:
            raise ShapeMismatchError(
                f"shape mismatch: (n={self.n}, offset={self.offset}) vs "
                f"(n={other.n}, offset={other.offset})"
            )

    def __add__(self, other):
        self._check(other)
        return DiagonalOperator(
            (a + b for a, b in zip(self.entries, other.entries)), self.offset
        )

    def __sub__(self, other):
        self._check(other)
        return DiagonalOperator(
            (a - b for a, b in zip(self.entries, other.entries)), self.offset
        )

    def __neg__(self):
        return DiagonalOperator((-a for a in self.entries), self.offset)

    def __mul__(self, other):
        if _is_number(other):
            return self.scale(other)
        self._check(other)
        return DiagonalOperator(
            (a * b for a, b in zip(self.entries, other.entries)), self.offset
        )

    def __rmul__(self, c):
        if _is_number(c):
            return self.scale(c)
        return NotImplemented

    def scale(self, c):
        return DiagonalOperator((c * a for a in self.entries), self.offset)

    def unit(self):
        return DiagonalOperator((1,) * self.n, self.offset)

    def zero(self):
        return DiagonalOperator((0,) * self.n, self.offset)

    def distance(self, other) -> float:
        self._check(other)
        return float(max(abs(a - b) for a, b in zip(self.entries, other.entries)))

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return self.distance(other) <= tol

    def to_dense(self) -> "DenseMatrix":
        return DenseMatrix(np.diag(np.array(self.entries, dtype=complex)))

    def __repr__(self):
        return f"DiagonalOperator(n={self.n}, offset={self.offset})"


class DenseMatrix:
    """Square complex matrix under ordinary matrix arithmetic."""

    __slots__ = ("array",)

    def __init__(self, array):
        a = np.array(array, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"DenseMatrix must be square, got shape {a.shape}")
        a.flags.writeable = False
        self.array = a

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def _check(self, other):
        if not isinstance(other, DenseMatrix):
            raise ShapeMismatchError(
                f"cannot combine DenseMatrix with {type(other).__name__}"
            )
        if self.n != other.n:
            raise ShapeMismatchError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return DenseMatrix(self.array + other.array)

    def __sub__(self, other):
        self._check(other)
        return DenseMatrix(self.array - other.array)

    def __neg__(self):
        return DenseMatrix(-self.array)

    def __mul__(self, other):
        if _is_number(other):
            return self.scale(other)
        self._check(other)
        return DenseMatrix(self.array @ other.array)

    def __rmul__(self, c):
        if _is_number(c):
            return self.scale(c)
        return NotImplemented

    def scale(self, c):
        return DenseMatrix(complex(c) * self.array)

    def unit(self):
        return DenseMatrix(np.eye(self.n, dtype=complex))

    def zero(self):
        return DenseMatrix(np.zeros((self.n, self.n), dtype=complex))

    def distance(self, other) -> float:
        self._check(other)
        return float(np.max(np.abs(self.array - other.array)))

    def isclose(self, other, tol: float = DEFAULT_TOL) -> bool:
        return self.distance(other) <= tol

    def __repr__(self):
        return f"DenseMatrix(n={self.n})"


def is_idempotent(x, tol: float = DEFAULT_TOL) -> bool:
    """True iff x*x is within tol of x."""
    return (x * x).isclose(x, tol)


def trace(x):
    """Sum of diagonal entries (exact for exact diagonal entries)."""
    if isinstance(x, DiagonalOperator):
        return sum(x.entries)
    if isinstance(x, DenseMatrix):
        return complex(np.trace(x.array))
    if isinstance(x, Scalar):
        return x.value
    raise TypeError(f"trace not defined for {type(x).__name__}")


def determinant(x, pivot_tol: float = 1e-12):
    """Product of diagonal entries for diagonals; LU elimination with
    partial pivoting for dense matrices (singular matrices give 0).
    """
    if isinstance(x, DiagonalOperator):
        det = 1
        for a in x.entries:
            det = det * a
        return det
    if isinstance(x, Scalar):
        return x.value
    if isinstance(x, DenseMatrix):
        a = np.array(x.array, dtype=complex)
        n = x.n
        det = 1.0 + 0j
        for col in range(n):
            pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
            if abs(a[pivot_row, col]) <= pivot_tol:
                return 0j
            if pivot_row != col:
                a[[col, pivot_row]] = a[[pivot_row, col]]
                det = -det
            det *= a[col, col]
            a[col + 1 :, :] -= np.outer(a[col + 1 :, col] / a[col, col], a[col, :])
        return det
    raise TypeError(f"determinant not defined for {type(x).__name__}")


def _reciprocal(v):
    if isinstance(v, (int, Fraction)):
        if v == 0:
            raise NonInvertibleError("zero diagonal entry")
        return Fraction(1, 1) / Fraction(v)
    if abs(v) <= 1e-12:
        raise NonInvertibleError("zero diagonal entry")
    return 1 / v


def invert(x, tol: float = DEFAULT_TOL):
    """Two-sided inverse; raises NonInvertibleError when the residual
    cannot be met.
    """
    if isinstance(x, Scalar):
        return Scalar(_reciprocal(x.value))
    if isinstance(x, DiagonalOperator):
        return DiagonalOperator((_reciprocal(v) for v in x.entries), x.offset)
    if isinstance(x, DenseMatrix):
        try:
            inv = np.linalg.solve(x.array, np.eye(x.n, dtype=complex))
        except np.linalg.LinAlgError as exc:
            raise NonInvertibleError(str(exc)) from exc
        result = DenseMatrix(inv)
        ident = x.unit()
        if not (x * result).isclose(ident, tol) or not (result * x).isclose(ident, tol):
            raise NonInvertibleError("inverse residual exceeds tolerance")
        return result
    raise TypeError(f"invert not defined for {type(x).__name__}")


def operator_norm(x) -> float:
    """Max entry modulus for diagonals; maximum absolute row sum for dense
    matrices (submultiplicative).
    """
    if isinstance(x, Scalar):
        return float(abs(complex(x.value)))
    if isinstance(x, DiagonalOperator):
        return float(max(abs(a) for a in x.entries))
    if isinstance(x, DenseMatrix):
        return float(np.max(np.sum(np.abs(x.array), axis=1)))
    raise TypeError(f"operator_norm not defined for {type(x).__name__}")


def _pair(v) -> list[float]:
    c = complex(v)
    return [c.real, c.imag]


def element_to_json(x) -> dict:
    """Serialize an element: diagonal entries or row-major dense entries as
    [re, im] pairs.
    """
    if isinstance(x, DiagonalOperator):
        return {
            "kind": "diag",
            "n": x.n,
            "offset": x.offset,
            "entries": [_pair(v) for v in x.entries],
        }
    if isinstance(x, DenseMatrix):
        return {
            "kind": "dense",
            "n": x.n,
            "entries": [_pair(v) for v in x.array.reshape(-1)],
        }
    raise TypeError(f"no JSON form for {type(x).__name__}")


def element_from_json(data: dict):
    kind = data.get("kind")
    if kind == "diag":
        entries = [complex(re, im) for re, im in data["entries"]]
        if len(entries) != data["n"]:
            raise ValueError("entry count does not match n")
        return DiagonalOperator(entries, data["offset"])
    if kind == "dense":
        n = data["n"]
        entries = [complex(re, im) for re, im in data["entries"]]
        if len(entries) != n * n:
            raise ValueError("entry count does not match n*n")
        return DenseMatrix(np.array(entries).reshape(n, n))
    raise ValueError(f"unknown element kind {kind!r}")
