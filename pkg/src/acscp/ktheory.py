"""Complex and real K-theory of CP^d and the natural maps between them.

K(CP^d) = Z[L]/(L^(d+1)) where L = H - 1 and H is the dual of the canonical
line bundle.  KO(CP^d) = Z[w]/I with w = r(L) and the ideal I depending on
d mod 4; the three cases used here are

    KO(CP^4) = Z[w]/(w^3)
    KO(CP^5) = Z[w]/(2w^3, w^4)    (one 2-torsion generator, w^3)
    KO(CP^6) = Z[w]/(w^4)

Supported maps:

  * t = conjugate:   ring map on K with t(L) = (1+L)^(-1) - 1
  * c = complexify:  ring map KO -> K with c(w) = L + t(L)
  * r = real_reduce: KO-module map K -> KO, inverse-engineered from
        c(y) = x + t(x) when KO is torsion-free (d = 4, 6) and given by an
        explicit generator table when d = 5
  * adams / adams_ko: Adams operations; on K, psi^k(L) = (1+L)^k - 1, and
        on KO, psi^k(w) = r((L+1)^k - 1)
  * chern_character, total_chern, pontrjagin_total

The identities r(c(x)) = 2x and c(r(x)) = x + t(x) hold on the nose and are
exercised heavily by the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .cohomology import (CohClass, DimensionMismatch, exp_series,
                         _mul, _pow_int)


class UnsupportedDimension(ValueError):
    """Operation is only defined for certain truncation dimensions."""


class UnsupportedOperation(ValueError):
    """The requested map is not defined (or not determined) in this ring."""


class KClass:
    """Element of Z[L]/(L^(d+1)); coeffs[i] is the coefficient of L^i."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d, coeffs):
        coeffs = [int(x) for x in coeffs]
        if len(coeffs) > d + 1:
            raise ValueError(f"too many coefficients for dimension {d}")
        coeffs += [0] * (d + 1 - len(coeffs))
        self.d = d
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, d):
        return cls(d, [])

    @classmethod
    def one(cls, d):
        return cls(d, [1])

    @classmethod
    def L(cls, d):
        return cls(d, [0, 1])

    @classmethod
    def H(cls, d):
        return cls(d, [1, 1])

    def _check(self, other):
        if self.d != other.d:
            raise DimensionMismatch(f"dimension {self.d} vs {other.d}")

    def __add__(self, other):
        if isinstance(other, int):
            other = KClass(self.d, [other])
        self._check(other)
        return KClass(self.d, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return KClass(self.d, [-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = KClass(self.d, [other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return KClass(self.d, [x * other for x in self.coeffs])
        self._check(other)
        return KClass(self.d, _mul(self.coeffs, other.coeffs, self.d))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in K(CP^d)")
        result = KClass.one(self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, KClass) and self.d == other.d
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        parts = []
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            mono = "1" if i == 0 else ("L" if i == 1 else f"L^{i}")
            parts.append(mono if (x == 1 and i) else f"{x}*{mono}" if i else str(x))
        return " + ".join(parts) if parts else "0"


def _ko_width(d):
    # number of stored powers w^0 .. w^s
    if d == 4:
        return 3
    if d in (5, 6):
        return 4
    raise UnsupportedDimension(f"KO(CP^{d}) is not modelled; d must be 4, 5, or 6")


class KOClass:
    """Element of KO(CP^d) for d in {4, 5, 6}.

    coeffs[j] is the coefficient of w^j.  For d = 5 the w^3 coefficient is
    a 2-torsion residue and is stored reduced mod 2.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d, coeffs):
        width = _ko_width(d)
        coeffs = [int(x) for x in coeffs]
        if len(coeffs) > width:
            raise ValueError(f"too many coefficients for KO(CP^{d})")
        coeffs += [0] * (width - len(coeffs))
        if d == 5:
            coeffs[3] %= 2
        self.d = d
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, d):
        return cls(d, [])

    @classmethod
    def one(cls, d):
        return cls(d, [1])

    @classmethod
    def omega(cls, d, power=1):
        width = _ko_width(d)
        coeffs = [0] * width
        if power < width:
            coeffs[power] = 1
        return cls(d, coeffs)

    def _check(self, other):
        if self.d != other.d:
            raise DimensionMismatch(f"dimension {self.d} vs {other.d}")

    def __add__(self, other):
        if isinstance(other, int):
            other = KOClass(self.d, [other])
        self._check(other)
        return KOClass(self.d, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return KOClass(self.d, [-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = KOClass(self.d, [other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return KOClass(self.d, [x * other for x in self.coeffs])
        self._check(other)
        width = _ko_width(self.d)
        out = [0] * width
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y and i + j < width:
                    out[i + j] += x * y
        return KOClass(self.d, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in KO(CP^d)")
        result = KOClass.one(self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, KOClass) and self.d == other.d
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        parts = []
        for j, x in enumerate(self.coeffs):
            if x == 0:
                continue
            mono = "1" if j == 0 else ("w" if j == 1 else f"w^{j}")
            parts.append(mono if (x == 1 and j) else f"{x}*{mono}" if j else str(x))
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Conjugation and Adams operations on K
# ---------------------------------------------------------------------------

def conjugate(x):
    """t(x): the ring map with t(L) = (1+L)^(-1) - 1 = -L + L^2 - ..."""
    d = x.d
    tl = [0] + [(-1) ** i for i in range(1, d + 1)]
    return _ring_extend(x, tl)


def adams(k, x):
    """psi^k(x) on K(CP^d): the ring map with psi^k(L) = (1+L)^k - 1."""
    if k < 1:
        raise ValueError("Adams operations need k >= 1")
    d = x.d
    psi_l = [comb(k, i) if i else 0 for i in range(min(k, d) + 1)]
    return _ring_extend(x, psi_l)


def _ring_extend(x, image_of_l):
    """Apply the ring endomorphism sending L to the given int series."""
    d = x.d
    out = [x.coeffs[0]] + [0] * d
    power = [1] + [0] * d
    for i in range(1, d + 1):
        power = _mul(power, image_of_l, d)
        coef = x.coeffs[i]
        if coef:
            for j in range(d + 1):
                out[j] += coef * power[j]
    return KClass(d, out)


# ---------------------------------------------------------------------------
# Chern character and total Chern class
# ---------------------------------------------------------------------------

def chern_character(x):
    """ch(x) in Q[u]/(u^(d+1)): additive extension of ch(L^i) = (e^u - 1)^i."""
    d = x.d
    eu_minus_1 = exp_series(1, d) - 1
    total = CohClass.zero(d)
    power = CohClass.one(d)
    for i in range(d + 1):
        if x.coeffs[i]:
            total = total + power * x.coeffs[i]
        if i < d:
            power = power * eu_minus_1
    return total


def line_multiplicities(x):
    """Expand x over the virtual line-bundle basis: x = sum_j mult[j] (H^j).

    Uses L^i = (H-1)^i = sum_j (-1)^(i-j) C(i,j) H^j.
    """
    d = x.d
    mult = [0] * (d + 1)
    for i, coef in enumerate(x.coeffs):
        if coef == 0:
            continue
        for j in range(i + 1):
            mult[j] += coef * (-1) ** (i - j) * comb(i, j)
    return mult


def total_chern(x):
    """Total Chern class of a virtual class, multiplicative over sums.

    c(H^j) = 1 + j*u, so after expanding x over the H^j the answer is the
    product of (1 + j*u)^(mult_j).  The rank part (j = 0) contributes
    nothing.  Coefficients are always integers.
    """
    d = x.d
    mult = line_multiplicities(x)
    series = [1] + [0] * d
    for j in range(1, d + 1):
        if mult[j]:
            series = _mul(series, _pow_int([1, j], mult[j], d), d)
    return CohClass(d, series)


# ---------------------------------------------------------------------------
# Complexification and real reduction
# ---------------------------------------------------------------------------

def complexify(x):
    """c(x) in K(CP^d): ring map with c(w) = L + t(L).

    For d = 5 the torsion coefficient is handled by c(w^3) = c(w)^3, which
    vanishes in Z[L]/(L^6), so the map is well defined on residues.
    """
    d = x.d
    c_omega = KClass.L(d) + conjugate(KClass.L(d))
    total = KClass(d, [x.coeffs[0]])
    power = KClass.one(d)
    for j in range(1, len(x.coeffs)):
        power = power * c_omega
        if x.coeffs[j]:
            total = total + power * x.coeffs[j]
    return total


@lru_cache(maxsize=None)
def _r_table(d):
    """r(L^i) for i = 0..d, as KOClass coefficient tuples."""
    if d == 5:
        # the one case with 2-torsion; the table is pinned rather than derived
        return ((2, 0, 0, 0),
                (0, 1, 0, 0),
                (0, 2, 1, 0),
                (0, 0, 3, 1),
                (0, 0, 2, 0),
                (0, 0, 0, 1))
    if d not in (4, 6):
        raise UnsupportedDimension(f"real reduction is modelled for d in 4..6, not {d}")
    # torsion-free cases: c is injective, so solve c(y) = x + t(x) for y.
    # c(w^j) has leading term L^(2j), making the system triangular.
    width = _ko_width(d)
    c_omega = KClass.L(d) + conjugate(KClass.L(d))
    c_powers = [KClass.one(d)]
    for _ in range(width - 1):
        c_powers.append(c_powers[-1] * c_omega)
    table = []
    for i in range(d + 1):
        x = KClass(d, [0] * i + [1])
        target = x + conjugate(x)
        y = [0] * width
        rem = target
        for j in range(width):
            y[j] = rem.coeffs[2 * j]
            rem = rem - c_powers[j] * y[j]
        if rem != KClass.zero(d):
            raise ArithmeticError(f"r(L^{i}) does not exist in KO(CP^{d})")
        table.append(tuple(y))
    return tuple(table)


def real_reduce(x):
    """r(x) in KO(CP^d): additive extension of the generator table."""
    d = x.d
    table = _r_table(d)
    out = KOClass.zero(d)
    for i, coef in enumerate(x.coeffs):
        if coef:
            out = out + KOClass(d, table[i]) * coef
    return out


def adams_ko(k, x):
    """psi^k on KO(CP^d), as the ring map with psi^k(w) = r((L+1)^k - 1).

    Only k = 1, 2, 4 are provided (compose for other powers of two); the
    behaviour of odd k >= 3 on the torsion part of KO(CP^5) is not pinned
    down by the identities used here, so it is refused rather than guessed.
    """
    if k == 1:
        return x
    if k not in (2, 4):
        raise UnsupportedOperation(f"psi^{k} on KO(CP^d) is not implemented; use k in (1, 2, 4)")
    d = x.d
    psi_omega = real_reduce(adams(k, KClass.L(d)))
    total = KOClass(d, [x.coeffs[0]])
    power = KOClass.one(d)
    for j in range(1, len(x.coeffs)):
        power = power * psi_omega
        if x.coeffs[j]:
            total = total + power * x.coeffs[j]
    return total


def pontrjagin_total(x):
    """Total Pontrjagin class of a KO-class, for the torsion-free d = 4, 6.

    p_i = (-1)^i c_(2i)(complexification), assembled as 1 + p_1 u^2 +
    p_2 u^4 + ...; odd-degree Chern coefficients of a complexification
    cancel identically and are checked to vanish.
    """
    d = x.d
    if d not in (4, 6):
        raise UnsupportedDimension(f"Pontrjagin classes need torsion-free KO; d={d} is not supported")
    cc = total_chern(complexify(x))
    coeffs = [0] * (d + 1)
    coeffs[0] = 1
    for i in range(1, d // 2 + 1):
        coeffs[2 * i] = (-1) ** i * cc.coeff(2 * i)
    for j in range(1, d + 1, 2):
        if cc.coeff(j) != 0:
            raise ArithmeticError(f"odd Chern coefficient u^{j} survived complexification")
    return CohClass(d, coeffs)
