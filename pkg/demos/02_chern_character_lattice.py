"""The Chern character lattice over CP^d.

Every stable bundle class over CP^d is an integer combination of the
exponential vectors q_m = ch(line bundle with c_1 = m u).  Decomposing an
arbitrary q_m over the basis q_0..q_d is a Vandermonde solve whose solution
has a closed form that is integral for every integer m; deciding whether an
integer tuple (c_1, ..., c_d) is a Chern vector reduces to the integrality
of one exact linear solve."""

from acscp.chernvec import (NotRealizable, chern_from_multiplicities,
                            closed_form_w, power_sums_from_chern, q_vector,
                            realizable, w_matrix)
from acscp.exactmath import det_exact

d = 4
print("q_2 over CP^4:", q_vector(2, d))
print("W has determinant", det_exact(w_matrix(d)), "= 1!2!3!4!")

# Decompose q_7 over q_0..q_4: integral coefficients, always.
print("q_7 =", closed_form_w(7, d), "against (q_0..q_4)")

# Chern vector of 5 copies of the hyperplane class: binomials.
v = chern_from_multiplicities((5, 0, 0, 0))
print("c(5L) =", v)
print("power sums:", power_sums_from_chern(v))
print("decomposition:", realizable(v))

# A tuple that is NOT a Chern vector: the exact solve has denominator 6.
try:
    realizable((0, 1, 0, 0))
except NotRealizable as exc:
    print("(0,1,0,0) rejected:", exc)

# Over CP^2 every integer pair is a Chern vector (parity of c_1^2 - c_1).
print("CP^2 samples:", {(c1, c2): realizable((c1, c2))
                        for c1, c2 in [(0, 0), (1, -3), (-2, 5)]})
