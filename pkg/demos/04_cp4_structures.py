"""Almost complex structures on homotopy CP^4.

A homotopy CP^4 is pinned (for this question) by integers (m, n) with
4m^2 - 10m - 28n = 0.  Structures correspond to integers a dividing
25 + (3/7)(576 m^2 + 240 m): each admissible a completes to a full Chern
vector with top entry 5, and the completion decomposes integrally over the
exponential lattice.  The divisor criterion is cross-checked against a
direct integrality scan inside the search itself."""

from acscp.homotopy import (acs_search_cp4, divisor_target_cp4,
                            pontrjagin_of_X, validate_params)

for (m, n) in [(0, 0), (6, 3), (-8, 12)]:
    X = validate_params(4, m, n)
    D = divisor_target_cp4(m)
    print(f"X(m={m}, n={n}):  p = {pontrjagin_of_X(X)},  divisor target {D}")
    sols = acs_search_cp4(X, cross_check_window=min(abs(D), 2000))
    print("  admissible a:", [s.a for s in sols])
    best = next(s for s in sols if s.a > 0)
    print(f"  e.g. a={best.a}: chern {best.full_chern}, decomposition {best.decomposition}")
    print()

# the standard complex structure on the honest CP^4 shows up at a = 5
sols = acs_search_cp4(validate_params(4, 0, 0), cross_check_window=25)
five = next(s for s in sols if s.a == 5)
print("standard CP^4 structure:", five.full_chern, "=", "binomials C(5,k)")
