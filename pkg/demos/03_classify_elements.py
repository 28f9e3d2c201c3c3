# Normality of single elements, computed by independent routes that must agree.
from knormal import build_tower, classify, normality_via_gcd, normality_via_Mi, normality_via_idempotents
from knormal.field_core import parse_element

F8 = build_tower(2, 1, 3)
for text in ("0,1,0", "1,0,0", "1,1,0"):
    a = parse_element(F8, text)
    r = normality_via_idempotents(a, F8)
    print(f"[{text}] k = {r.k}, delta = {r.delta}, M_alpha q-coeffs = {r.M_alpha.coeffs}")
    assert r.k == normality_via_gcd(a, F8).k == normality_via_Mi(a, F8).k

# the closed forms for prime n are opt-in
F128 = build_tower(2, 1, 7)
a = parse_element(F128, "g^9")
print("quadratic closed form:", classify(a, F128, "thm_quadratic").k, " idempotents:", classify(a, F128).k)

# p | n: only the divisor search applies; an element of F_4 inside F_16 is 2-normal
F16 = build_tower(2, 1, 4)
w = F16.pow(F16.primitive_element, 5)
r = classify(w, F16)
print("F_16, element of F_4:", r.method, "k =", r.k, "m_alpha =", r.m_alpha.coeffs)

# reports serialize to stable JSON
print(r.to_json())
