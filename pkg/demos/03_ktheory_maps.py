"""K(CP^d), KO(CP^d), and the maps between them.

K(CP^d) = Z[L]/(L^(d+1)) with L = H - 1; KO(CP^d) = Z[w]/I with w = r(L).
Real reduction r is pinned by solving c(y) = x + t(x) in the torsion-free
cases and by the generator table over CP^5, where w^3 is 2-torsion."""

from acscp.ktheory import (KClass, KOClass, adams, adams_ko, chern_character,
                           complexify, conjugate, pontrjagin_total,
                           real_reduce, total_chern)

d = 5
L = KClass.L(d)
print("t(L) =", conjugate(L))
print("ch(L) =", chern_character(L))

print("\ntotal Chern classes of the powers of L over CP^5:")
for i in range(1, 6):
    print(f"  c(L^{i}) =", total_chern(KClass(d, [0] * i + [1])))

print("\nreal reduction of the additive generators of K(CP^5):")
for i in range(6):
    print(f"  r(L^{i}) =", real_reduce(KClass(d, [0] * i + [1])))

w = KOClass.omega(d)
print("\nAdams operations on KO(CP^5):")
print("  psi^2(w) =", adams_ko(2, w))
print("  psi^4(w) =", adams_ko(4, w))
print("  psi^2(psi^2(w)) == psi^4(w):", adams_ko(2, adams_ko(2, w)) == adams_ko(4, w))
print("  psi^3(L) =", adams(3, L))

# the defining identities r(c(y)) = 2y and c(r(x)) = x + t(x)
print("\nidentities:")
print("  r(c(w)) == 2w:", real_reduce(complexify(w)) == 2 * w)
x = KClass(d, [0, 0, 0, 1])
print("  c(r(L^3)) == L^3 + t(L^3):", complexify(real_reduce(x)) == x + conjugate(x))

print("\nPontrjagin classes of omega powers over CP^6:")
for k in (1, 2, 3):
    print(f"  p(w^{k}) =", pontrjagin_total(KOClass.omega(6, k)))
print("  p(7w) =", pontrjagin_total(7 * KOClass.omega(6)), " (the untwisted tangent class)")
