# x^n - 1 over F_q: its q-classes, irreducible factors and primitive idempotents.
from knormal import build_tower, factor_xn_minus_1, idempotents_crt, idempotents_matrix, q_class_partition

part = q_class_partition(7, 2)
print("2-classes mod 7:", part.classes)

T = build_tower(2, 1, 7)
fac = factor_xn_minus_1(T)
for p, rep in zip(fac.factors, fac.partition.representatives):
    print(f"class of {rep}: factor coefficients {p.coeffs}")

# the two constructions must agree
crt = idempotents_crt(T)
mat = idempotents_matrix(T)
print("CRT == matrix:", crt.e == mat.e, " det M =", mat.det)
for i, e in enumerate(crt.e, start=1):
    print(f"e_{i} =", e.coeffs)

# when p | n the factors repeat: x^4 - 1 = (x + 1)^4 over F_2
fac16 = factor_xn_minus_1(build_tower(2, 1, 4))
print("x^4 - 1 over F_2:", fac16.factors[0].coeffs, "to the power", fac16.multiplicity)
