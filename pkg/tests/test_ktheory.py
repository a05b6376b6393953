import random
from fractions import Fraction
from math import factorial

import pytest

from acscp.cohomology import CohClass, exp_series
from acscp.ktheory import (KClass, KOClass, UnsupportedDimension,
                           UnsupportedOperation, adams, adams_ko,
                           chern_character, complexify, conjugate,
                           line_multiplicities, pontrjagin_total, real_reduce,
                           total_chern, _r_table)


def K(d, *coeffs):
    return KClass(d, list(coeffs))


def KO(d, *coeffs):
    return KOClass(d, list(coeffs))


# ---------------------------------------------------------------------------
# ring structure
# ---------------------------------------------------------------------------

def test_k_mul_truncation():
    L = KClass.L(5)
    assert L * L ** 5 == KClass.zero(5)
    assert (1 + L) ** 2 == K(5, 1, 2, 1)


def test_h_inverse():
    for d in (4, 5, 6):
        H = KClass.H(d)
        h_inv = 1 + conjugate(KClass.L(d))
        assert H * h_inv == KClass.one(d)


def test_ko_mul_torsion():
    w = KOClass.omega(5)
    # 2 w * w^2 = 2 w^3 = 0
    assert (2 * w) * (w * w) == KOClass.zero(5)
    # w * w^3 = 0 in d = 6
    assert KOClass.omega(6) * KOClass.omega(6, 3) == KOClass.zero(6)
    # (w^2 + 4w)^2 = w^4 + 8w^3 + 16w^2 -> 16 w^2
    psi2 = KO(5, 0, 4, 1)
    assert psi2 * psi2 == KO(5, 0, 0, 16, 0)


def test_ko_unsupported_dimension():
    with pytest.raises(UnsupportedDimension):
        KOClass(7, [0, 1])


# ---------------------------------------------------------------------------
# conjugation
# ---------------------------------------------------------------------------

def test_conjugate_of_l():
    assert conjugate(KClass.L(5)) == K(5, 0, -1, 1, -1, 1, -1)
    assert conjugate(KClass.one(5)) == KClass.one(5)


def test_conjugate_is_involution():
    rng = random.Random(1)
    for _ in range(20):
        d = rng.choice((4, 5, 6))
        x = KClass(d, [rng.randint(-5, 5) for _ in range(d + 1)])
        assert conjugate(conjugate(x)) == x


# ---------------------------------------------------------------------------
# Chern character and total Chern class
# ---------------------------------------------------------------------------

def test_chern_character_of_line_class():
    got = chern_character(KClass.L(4))
    assert got == exp_series(1, 4) - 1
    assert chern_character(KClass.zero(4)) == CohClass.zero(4)
    assert chern_character(5 * KClass.L(4)) == 5 * (exp_series(1, 4) - 1)


def test_total_chern_series():
    # the five series over CP^5
    want = {1: (1, 1, 0, 0, 0, 0),
            2: (1, 0, -1, 2, -3, 4),
            3: (1, 0, 0, 2, -9, 30),
            4: (1, 0, 0, 0, -6, 48),
            5: (1, 0, 0, 0, 0, 24)}
    for i, coeffs in want.items():
        got = total_chern(KClass(5, [0] * i + [1]))
        assert got.coeffs == tuple(Fraction(x) for x in coeffs)


def test_total_chern_of_multiple():
    assert total_chern(6 * KClass.L(5)).coeffs == (1, 6, 15, 20, 15, 6)


def test_total_chern_is_exponential():
    rng = random.Random(4)
    for _ in range(20):
        d = rng.choice((4, 5, 6))
        x = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        y = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        assert total_chern(x + y) == total_chern(x) * total_chern(y)


def test_chern_character_is_a_ring_map():
    rng = random.Random(9)
    for _ in range(20):
        d = rng.choice((4, 5, 6))
        x = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        y = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        assert chern_character(x * y) == chern_character(x) * chern_character(y)


def test_line_multiplicities_binomial():
    # L^2 = H^2 - 2H + 1
    assert line_multiplicities(K(5, 0, 0, 1)) == [1, -2, 1, 0, 0, 0]


# ---------------------------------------------------------------------------
# complexification and real reduction
# ---------------------------------------------------------------------------

def test_complexify_omega():
    assert complexify(KOClass.omega(5)) == K(5, 0, 0, 1, -1, 1, -1)
    assert complexify(KOClass.one(5)) == KClass.one(5)
    w6 = KOClass.omega(6)
    assert complexify(w6) ** 2 == complexify(w6 * w6)


def test_real_reduce_table_d5():
    # additive generator table over CP^5
    want = {0: (2, 0, 0, 0), 1: (0, 1, 0, 0), 2: (0, 2, 1, 0),
            3: (0, 0, 3, 1), 4: (0, 0, 2, 0), 5: (0, 0, 0, 1)}
    for i, coeffs in want.items():
        assert real_reduce(KClass(5, [0] * i + [1])) == KOClass(5, coeffs)


def test_real_reduce_tables_derived():
    # d = 4, 6 tables from solving c(y) = x + t(x) by hand:
    #   d=4: 2, w, 2w+w^2, 3w^2, 2w^2
    #   d=6: 2, w, 2w+w^2, 3w^2+w^3, 2w^2+4w^3, 5w^3, 2w^3
    assert _r_table(4) == ((2, 0, 0), (0, 1, 0), (0, 2, 1), (0, 0, 3), (0, 0, 2))
    assert _r_table(6) == ((2, 0, 0, 0), (0, 1, 0, 0), (0, 2, 1, 0), (0, 0, 3, 1),
                           (0, 0, 2, 4), (0, 0, 0, 5), (0, 0, 0, 2))


def test_c_after_r_is_one_plus_t():
    for d in (4, 5, 6):
        for i in range(d + 1):
            x = KClass(d, [0] * i + [1])
            assert complexify(real_reduce(x)) == x + conjugate(x)


def test_r_after_c_is_doubling():
    for d in (4, 5, 6):
        width = 3 if d == 4 else 4
        for j in range(width):
            y = KOClass.omega(d, j) if j else KOClass.one(d)
            assert real_reduce(complexify(y)) == 2 * y


def test_r_is_ko_linear():
    rng = random.Random(12)
    for _ in range(20):
        d = rng.choice((4, 5, 6))
        width = 3 if d == 4 else 4
        x = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        y = KOClass(d, [rng.randint(-4, 4) for _ in range(width)])
        assert real_reduce(complexify(y) * x) == y * real_reduce(x)


def test_r_kernel_and_image():
    L = KClass.L(5)
    H = KClass.H(5)
    h_inv = 1 + conjugate(L)
    zero = KOClass.zero(5)
    assert real_reduce(H - h_inv) == zero
    assert real_reduce(H * H - h_inv * h_inv) == zero
    assert real_reduce(2 * L ** 5) == zero
    assert real_reduce(L) == KOClass.omega(5, 1)
    assert real_reduce(L * L - 2 * L) == KOClass.omega(5, 2)
    assert real_reduce(L ** 5) == KOClass.omega(5, 3)


# ---------------------------------------------------------------------------
# Adams operations
# ---------------------------------------------------------------------------

def test_adams_on_k():
    L = KClass.L(5)
    assert adams(2, L) == K(5, 0, 2, 1)
    assert adams(3, L) == K(5, 0, 3, 3, 1)
    assert adams(2, adams(2, L)) == adams(4, L)


def test_adams_composition_and_frobenius():
    rng = random.Random(21)
    for _ in range(15):
        d = rng.choice((4, 5, 6))
        x = KClass(d, [rng.randint(-4, 4) for _ in range(d + 1)])
        for k, l in ((2, 2), (2, 3), (3, 4), (2, 4)):
            assert adams(k, adams(l, x)) == adams(k * l, x)
        for p in (2, 3):
            assert all(co % p == 0 for co in (adams(p, x) - x ** p).coeffs)


def test_adams_ko():
    w = KOClass.omega(5)
    assert adams_ko(1, w) == w
    assert adams_ko(2, w) == KO(5, 0, 4, 1)
    assert adams_ko(4, w) == KO(5, 0, 16, 20)
    assert adams_ko(2, adams_ko(2, w)) == adams_ko(4, w)
    with pytest.raises(UnsupportedOperation):
        adams_ko(3, w)


def test_adams_ko_other_dims():
    for d in (4, 6):
        w = KOClass.omega(d)
        assert adams_ko(2, w) == KOClass(d, [0, 4, 1])


# ---------------------------------------------------------------------------
# Pontrjagin classes
# ---------------------------------------------------------------------------

def test_pontrjagin_table():
    assert pontrjagin_total(KOClass.omega(6, 1)).coeffs == (1, 0, 1, 0, 0, 0, 0)
    assert pontrjagin_total(KOClass.omega(6, 2)).coeffs == (1, 0, 0, 0, -6, 0, 20)
    assert pontrjagin_total(KOClass.omega(6, 3)).coeffs == (1, 0, 0, 0, 0, 0, 120)


def test_pontrjagin_standard_tangent():
    p = pontrjagin_total(7 * KOClass.omega(6))
    assert p.coeffs == (1, 0, 7, 0, 21, 0, 35)
    p4 = pontrjagin_total(5 * KOClass.omega(4))
    assert p4.coeffs == (1, 0, 5, 0, 10)


def test_pontrjagin_rejects_torsion_dimension():
    with pytest.raises(UnsupportedDimension):
        pontrjagin_total(KOClass.omega(5))


# ---------------------------------------------------------------------------
# cross-module consistency
# ---------------------------------------------------------------------------

def test_power_sums_match_chern_character_factorials():
    x = 5 * KClass.L(4)
    ch = chern_character(x)
    assert [ch.coeff(i) * factorial(i) for i in range(1, 5)] == [5, 5, 5, 5]
