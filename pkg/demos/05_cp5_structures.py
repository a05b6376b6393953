"""Almost complex structures on homotopy CP^5.

Real K-theory of CP^5 has 2-torsion, so the Chern-vector correspondence is
unavailable.  Instead, for parameters (m, n) with m even, the explicit class

    E = 6L + 12m L^2 + 80n L^3 + 43m L^4 + (-19m - 20n - 6m^2 + 80mn) L^5

reduces to the stable tangent class in KO (2-torsion coordinate included)
and has top Chern class 6u^5, the Euler class -- so every homotopy CP^5 is
almost complex.  The top-coefficient identity c_5(E) = (6 + 6K)u^5 with
K = 0 is also verified symbolically."""

from acscp.homotopy import cp5_structure, symbolic_verify_cp5, validate_params

for (m, n) in [(0, 0), (2, 0), (-2, 4), (12, -7)]:
    X = validate_params(5, m, n)
    rep = cp5_structure(X)
    print(f"X(m={m}, n={n}):")
    print("  E =", rep.e)
    print("  r(E) =", rep.reduction, " == tangent:", rep.reduction_matches)
    print("  c_5(E) =", rep.euler_coefficient, "u^5  == Euler class:", rep.euler_matches)
    print()

print("symbolic check that c_5(E) = 6 u^5 identically:", symbolic_verify_cp5())
