"""Exact arithmetic kernel: rational linear algebra, divisor enumeration,
and multivariate integer polynomials.

Everything here is exact.  Scalars are arbitrary-precision rationals
(``fractions.Fraction``), matrices are small and dense, and linear systems
are solved by fraction-free (Bareiss) elimination so that intermediate
entries stay integral after clearing denominators row by row.

``MPolyZ`` is a polynomial ring with integer coefficients over the fixed
variable universe ``a, c, m, n, q`` -- the handful of symbols needed by the
divisibility analysis in :mod:`acscp.homotopy`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

BigRational = Fraction


class SingularMatrix(ValueError):
    """The coefficient matrix has determinant zero."""


class DuplicateNodes(ValueError):
    """Vandermonde nodes must be pairwise distinct."""


class IndexOutOfRange(IndexError):
    """Symmetric-polynomial index outside 0..len(values)."""


class ZeroArgument(ValueError):
    """Zero has no finite divisor list."""


class NotDivisible(ValueError):
    """Polynomial is not divisible by the requested variable."""


# ---------------------------------------------------------------------------
# Dense exact matrices
# ---------------------------------------------------------------------------

class RatMatrix:
    """A dense matrix of Fractions, stored row-major.

    Sizes here are tiny (at most 9x9), so no attempt is made at sparsity
    or clever pivoting beyond "first nonzero".
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [Fraction(x) for x in entries]
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def is_integral(self):
        return all(x.denominator == 1 for x in self.entries)

    def __mul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return RatMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def _scaled_int_rows(matrix, rhs=None):
    """Clear denominators row by row, returning integer rows (and the scale
    factor applied to each row, needed for determinants)."""
    out = []
    scales = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        if rhs is not None:
            row = row + [Fraction(rhs[i])]
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
        scales.append(scale)
    return out, scales


def _bareiss(rows, width):
    """Fraction-free elimination in place.  Returns the permutation sign,
    or 0 if the left square block is singular."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, width):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign


def solve_exact(matrix, b):
    """Solve M x = b exactly for square M.  Raises SingularMatrix if det M = 0."""
    if matrix.rows != matrix.cols:
        raise ValueError("matrix must be square")
    n = matrix.rows
    if len(b) != n:
        raise ValueError("right-hand side length must equal matrix size")
    rows, _ = _scaled_int_rows(matrix, rhs=b)
    if _bareiss(rows, n + 1) == 0:
        raise SingularMatrix("matrix has determinant zero")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return x


def det_exact(matrix):
    """Exact determinant via Bareiss elimination."""
    if matrix.rows != matrix.cols:
        raise ValueError("matrix must be square")
    rows, scales = _scaled_int_rows(matrix)
    sign = _bareiss(rows, matrix.rows)
    if sign == 0:
        return Fraction(0)
    det = Fraction(sign * rows[-1][-1])
    for s in scales:
        det /= s
    return det


def inverse_exact(matrix):
    """Exact inverse, column by column through solve_exact."""
    n = matrix.rows
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(solve_exact(matrix, e))
    return RatMatrix(n, n, [cols[j][i] for i in range(n) for j in range(n)])


# ---------------------------------------------------------------------------
# Vandermonde closed form
# ---------------------------------------------------------------------------

def elem_sym(values, q):
    """q-th elementary symmetric polynomial of the values; sigma_0 = 1."""
    if q < 0 or q > len(values):
        raise IndexOutOfRange(f"index {q} outside 0..{len(values)}")
    coeffs = [1] + [0] * q
    for v in values:
        for i in range(min(q, len(coeffs) - 1), 0, -1):
            coeffs[i] += v * coeffs[i - 1]
    return coeffs[q]


def vandermonde_inverse(nodes):
    """Closed-form inverse of the Vandermonde matrix V[i][j] = nodes[i]^j.

    Entry (i, j) is (-1)^(n-1-i) sigma_{n-1-i}(nodes without nodes[j])
    divided by prod_{l != j} (nodes[j] - nodes[l]).
    """
    n = len(nodes)
    if len(set(nodes)) != n:
        raise DuplicateNodes(f"nodes {nodes!r} are not pairwise distinct")
    entries = []
    for i in range(n):
        for j in range(n):
            others = [x for l, x in enumerate(nodes) if l != j]
            denom = 1
            for x in others:
                denom *= nodes[j] - x
            num = (-1) ** (n - 1 - i) * elem_sym(others, n - 1 - i)
            entries.append(Fraction(num, denom))
    return RatMatrix(n, n, entries)


def vandermonde_matrix(nodes):
    """V[i][j] = nodes[i]^j, the matrix inverted by vandermonde_inverse."""
    n = len(nodes)
    return RatMatrix(n, n, [Fraction(x ** j) for x in nodes for j in range(n)])


# ---------------------------------------------------------------------------
# Divisors
# ---------------------------------------------------------------------------

def divisors_signed(n):
    """All divisors of n, positive and negative, in ascending order."""
    if n == 0:
        raise ZeroArgument("zero is divisible by everything")
    n = abs(n)
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    pos = small + large[::-1]
    return [-d for d in pos[::-1]] + pos


# ---------------------------------------------------------------------------
# Integer multivariate polynomials on the fixed variables a, c, m, n, q
# ---------------------------------------------------------------------------

VARIABLES = ("a", "c", "m", "n", "q")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS


class MPolyZ:
    """Polynomial with integer coefficients in the variables a, c, m, n, q.

    Terms are a dict mapping exponent 5-tuples to nonzero integers.  Unused
    variables simply carry exponent zero, so every polynomial lives in the
    same ring and arithmetic never needs variable reconciliation.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, k):
        return cls({_ZERO_EXP: int(k)})

    @classmethod
    def var(cls, name, power=1, coeff=1):
        if name not in _VAR_INDEX:
            raise KeyError(f"unknown variable {name!r}; universe is {VARIABLES}")
        e = [0] * _NVARS
        e[_VAR_INDEX[name]] = power
        return cls({tuple(e): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = MPolyZ.const(other)
        if not isinstance(other, MPolyZ):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return MPolyZ({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPolyZ.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MPolyZ({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPolyZ):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = MPolyZ.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPolyZ.const(other)
        return isinstance(other, MPolyZ) and self.terms == other.terms

    def substitute(self, **values):
        """Substitute integers for some of the variables."""
        out = self
        for name, value in values.items():
            idx = _VAR_INDEX[name]
            acc = {}
            for e, c in out.terms.items():
                coeff = c * int(value) ** e[idx]
                enew = e[:idx] + (0,) + e[idx + 1:]
                acc[enew] = acc.get(enew, 0) + coeff
            out = MPolyZ(acc)
        return out

    def evaluate(self, **values):
        """Full evaluation; every variable appearing must be given."""
        out = self.substitute(**values)
        if any(e != _ZERO_EXP for e in out.terms):
            missing = sorted({VARIABLES[i] for e in out.terms for i in range(_NVARS) if e[i]})
            raise ValueError(f"unbound variables {missing}")
        return out.terms.get(_ZERO_EXP, 0)

    def divisible_by_variable(self, name):
        idx = _VAR_INDEX[name]
        return all(e[idx] >= 1 for e in self.terms)

    def divide_by_variable(self, name):
        """Exact division by one power of a variable."""
        idx = _VAR_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[idx] < 1:
                raise NotDivisible(f"term with exponents {e} lacks a factor of {name}")
            out[e[:idx] + (e[idx] - 1,) + e[idx + 1:]] = c
        return MPolyZ(out)

    def reduce_mod(self, p, fermat_vars=()):
        """Coefficients reduced into [0, p).

        For variables named in fermat_vars, exponents are folded with
        x^p = x (valid on integer points for prime p), so e.g. a^3 -> a
        when p = 3.
        """
        fold = tuple(_VAR_INDEX[v] for v in fermat_vars)
        out = {}
        for e, c in self.terms.items():
            if fold:
                e = tuple((ei - 1) % (p - 1) + 1 if (i in fold and ei > 0) else ei
                          for i, ei in enumerate(e))
            out[e] = (out.get(e, 0) + c) % p
        return MPolyZ(out)

    def content(self):
        """gcd of the absolute coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        return g

    def divexact(self, k):
        """Exact scalar division; every coefficient must be divisible by k."""
        if any(c % k for c in self.terms.values()):
            raise NotDivisible(f"coefficients are not all divisible by {k}")
        return MPolyZ({e: c // k for e, c in self.terms.items()})

    def coefficient(self, **exps):
        """Coefficient of the monomial with the given exponents (others zero)."""
        e = [0] * _NVARS
        for name, power in exps.items():
            e[_VAR_INDEX[name]] = power
        return self.terms.get(tuple(e), 0)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def _sorted_terms(self):
        # graded lexicographic, highest first
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            names = [f"{VARIABLES[i]}^{ei}" if ei > 1 else VARIABLES[i]
                     for i, ei in enumerate(e) if ei]
            mono = "*".join(names)
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        first = parts[0]
        first = "-" + first[2:] if first.startswith("- ") else first[2:]
        return " ".join([first] + parts[1:])

    def __repr__(self):
        return f"MPolyZ({self})"


def poly_variables():
    """The five generators (a, c, m, n, q) of the MPolyZ ring."""
    return tuple(MPolyZ.var(name) for name in VARIABLES)
