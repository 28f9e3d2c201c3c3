# Arithmetic in F_8 = F_2[t]/(t^3 + t + 1) and in a two-step tower over F_4.
from knormal import build_tower
from knormal.field_core import format_element, parse_element

F8 = build_tower(2, 1, 3)
print("modulus of F_8:", F8.modulus)  # (1, 1, 0, 1): 1 + z + z^3

t = parse_element(F8, "0,1,0")
print("t * t^2 =", format_element(F8, F8.mul(t, F8.mul(t, t))))  # t + 1
print("t^7 =", format_element(F8, F8.pow(t, 7)))
print("inverse of t:", format_element(F8, F8.inv(t)))

# Frobenius is squaring here; applying it n times is the identity
print("conjugates of t:", [format_element(F8, c) for c in F8.conjugates(t)])
print("Tr(t) =", F8.trace(t), " Tr(1) =", F8.trace(F8.one))

# rank of the conjugate span is n - k
for text in ("1,0,0", "0,1,0", "1,1,0"):
    a = parse_element(F8, text)
    print(f"span rank of [{text}]:", F8.conjugate_span_rank(a))

# F_64 as a cubic extension of F_4; F_4 elements are written [b0,b1]
F64 = build_tower(2, 2, 3)
g = F64.primitive_element
print("primitive element of F_64 over F_4:", format_element(F64, g))
print("Tr to F_4 of g:", F64.base.encode(F64.trace(g)))
