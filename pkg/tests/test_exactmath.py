import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from acscp.exactmath import (DuplicateNodes, IndexOutOfRange, MPolyZ,
                             NotDivisible, RatMatrix, SingularMatrix,
                             ZeroArgument, det_exact, divisors_signed,
                             elem_sym, inverse_exact, poly_variables,
                             solve_exact, vandermonde_inverse,
                             vandermonde_matrix)

# ---------------------------------------------------------------------------
# independent oracles: permutation-expansion determinant and Cramer solve
# ---------------------------------------------------------------------------

def det_by_permutations(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def cramer_solve(rows, b):
    n = len(rows)
    d = det_by_permutations(rows)
    assert d != 0
    out = []
    for j in range(n):
        cols = [[rows[i][k] if k != j else b[i] for k in range(n)] for i in range(n)]
        out.append(det_by_permutations(cols) / d)
    return out


W2 = RatMatrix.from_rows([[1, 1, 1], [0, 1, 2], [0, 1, 4]])


def test_solve_selects_first_basis_vector():
    assert solve_exact(W2, [1, 0, 0]) == [1, 0, 0]


def test_solve_frozen_example():
    # oracle: cramer_solve(W2, (1,3,9)) == (1, -3, 3)
    assert cramer_solve(W2.to_rows(), [1, 3, 9]) == [1, -3, 3]
    assert solve_exact(W2, [1, 3, 9]) == [1, -3, 3]


def test_solve_singular():
    ones = RatMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(SingularMatrix):
        solve_exact(ones, [1, 2])


def test_solve_matches_cramer_on_random_systems():
    rng = random.Random(7)
    done = 0
    while done < 50:
        n = rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(n)]
        b = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        if det_by_permutations(rows) == 0:
            continue
        assert solve_exact(RatMatrix.from_rows(rows), b) == cramer_solve(rows, b)
        done += 1


def test_inverse_roundtrip_up_to_8():
    rng = random.Random(3)
    done = 0
    while done < 25:
        n = rng.randint(1, 8)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        M = RatMatrix.from_rows(rows)
        if det_exact(M) == 0:
            continue
        assert M * inverse_exact(M) == RatMatrix.identity(n)
        done += 1


def test_det_exact_matches_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det_exact(RatMatrix.from_rows(rows)) == det_by_permutations(rows)


# ---------------------------------------------------------------------------
# Vandermonde closed form
# ---------------------------------------------------------------------------

def test_vandermonde_inverse_two_nodes():
    # V[i][j] = nodes[i]^j for nodes (0, 1) is [[1,0],[1,1]]
    assert vandermonde_inverse([0, 1]).to_rows() == [[1, 0], [-1, 1]]


def test_vandermonde_inverse_three_nodes():
    # oracle: columns solved from V x = e_j with the generic solver
    want = [[1, 0, 0],
            [Fraction(-3, 2), 2, Fraction(-1, 2)],
            [Fraction(1, 2), -1, Fraction(1, 2)]]
    assert vandermonde_inverse([0, 1, 2]).to_rows() == want
    assert vandermonde_inverse([0, 1, 2]) == inverse_exact(vandermonde_matrix([0, 1, 2]))


def test_vandermonde_duplicate_nodes():
    with pytest.raises(DuplicateNodes):
        vandermonde_inverse([0, 0, 1])


def test_vandermonde_identity_product():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 8)
        nodes = rng.sample(range(-5, 11), n)
        V = vandermonde_matrix(nodes)
        assert vandermonde_inverse(nodes) * V == RatMatrix.identity(n)


# ---------------------------------------------------------------------------
# elementary symmetric polynomials, divisors
# ---------------------------------------------------------------------------

def test_elem_sym():
    assert elem_sym([1, 2, 3], 0) == 1
    assert elem_sym([1, 2, 3], 2) == 11  # 1*2 + 1*3 + 2*3
    assert elem_sym([1, 2, 3], 3) == 6
    with pytest.raises(IndexOutOfRange):
        elem_sym([1, 2, 3], 4)


def naive_divisors(n):
    n = abs(n)
    pos = [d for d in range(1, n + 1) if n % d == 0]
    return [-d for d in reversed(pos)] + pos


def test_divisors_frozen():
    assert divisors_signed(25) == [-25, -5, -1, 1, 5, 25]
    assert divisors_signed(9529) == naive_divisors(9529)
    assert divisors_signed(9529) == [-9529, -733, -13, -1, 1, 13, 733, 9529]
    with pytest.raises(ZeroArgument):
        divisors_signed(0)


@given(st.integers(min_value=1, max_value=50000))
def test_divisors_properties(n):
    divs = divisors_signed(n)
    assert len(divs) % 2 == 0
    assert divs == sorted(divs)
    assert [-d for d in reversed(divs)] == divs
    assert divs[0] * divs[-1] == -n * n


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

a, c, m, n, q = poly_variables()


def small_polys():
    coeff = st.integers(min_value=-9, max_value=9)
    exp = st.integers(min_value=0, max_value=3)
    term = st.tuples(exp, exp, exp, coeff)
    return st.lists(term, max_size=5).map(
        lambda ts: sum((MPolyZ.var("a", e1, co) * MPolyZ.var("m", e2) * MPolyZ.var("n", e3)
                        for e1, e2, e3, co in ts), MPolyZ.zero()))


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(p1, p2, p3):
    assert p1 + p2 == p2 + p1
    assert p1 * p2 == p2 * p1
    assert (p1 + p2) + p3 == p1 + (p2 + p3)
    assert (p1 * p2) * p3 == p1 * (p2 * p3)
    assert p1 * (p2 + p3) == p1 * p2 + p1 * p3
    assert p1 - p1 == MPolyZ.zero()


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys(),
       st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_substitution_is_a_homomorphism(p1, p2, va, vm, vn):
    point = dict(a=va, c=0, m=vm, n=vn, q=0)
    assert (p1 * p2).evaluate(**point) == p1.evaluate(**point) * p2.evaluate(**point)
    assert (p1 + p2).evaluate(**point) == p1.evaluate(**point) + p2.evaluate(**point)


def test_reduce_mod_frozen():
    # -5184 m^2 - 2160 m - 525 has residues 3, 3, 0 mod 7
    f = -5184 * m * m - 2160 * m - 525
    assert f.reduce_mod(7) == 3 * m * m + 3 * m


def test_substitute_constant_term():
    f = -5184 * m * m - 2160 * m - 525
    assert f.substitute(m=0) == MPolyZ.const(-525)
    assert f.evaluate(m=1) == -5184 - 2160 - 525


def test_divide_by_variable():
    assert (a * m + a * a).divide_by_variable("a") == m + a
    with pytest.raises(NotDivisible):
        (a * m + m).divide_by_variable("a")


def test_reduce_mod_fermat_folding():
    # a^3 = a mod 3 on integer points
    p = a ** 3 - a
    assert p.reduce_mod(3, fermat_vars=("a",)).is_zero()
    assert (a ** 4).reduce_mod(3, fermat_vars=("a",)) == a * a
    assert (-2 * m * m + a - a ** 3).reduce_mod(3, fermat_vars=("a",)) == m * m


def test_divexact_and_content():
    p = 6 * a + 9 * m
    assert p.content() == 3
    assert p.divexact(3) == 2 * a + 3 * m
    with pytest.raises(NotDivisible):
        p.divexact(4)


def test_string_form_graded_lex():
    p = 31 * a ** 6 - 8277 * a ** 4 + 22785
    assert str(p) == "31*a^6 - 8277*a^4 + 22785"
    assert str(MPolyZ.zero()) == "0"
