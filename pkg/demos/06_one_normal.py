# 1-normal elements via the trace to F_{q^d}, d = gcd(n, q - 1).
from knormal import build_tower, normality_via_gcd, one_normal_test

for pmn in [(2, 1, 3), (2, 2, 3), (5, 1, 4)]:
    T = build_tower(*pmn)
    found = [a for a in T.nonzero_elements() if one_normal_test(a, T).is_1_normal]
    oracle = [a for a in T.nonzero_elements() if normality_via_gcd(a, T).k == 1]
    res = one_normal_test(T.one, T)
    print(f"{pmn}: d = {res.d}, beta = {res.beta}, 1-normal elements {len(found)}, gcd oracle agrees: {found == oracle}")
