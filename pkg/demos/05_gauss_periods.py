# Gauss periods valued in F_q and the identities they satisfy.
from knormal import build_tower, gauss_periods
from knormal.cyclo_idem import circulant_is_orthogonal, period_correlation

for pmn in [(2, 1, 7), (3, 1, 11), (3, 1, 13), (2, 1, 31)]:
    T = build_tower(*pmn)
    F = T.base
    gp = gauss_periods(T)
    corr = [period_correlation(gp, F, j) for j in range(gp.e)]
    print(f"q = {T.q}, n = {T.n}: f = {gp.f}, e = {gp.e}, periods {gp.periods}, correlations {corr}, c = {gp.c}")
    if gp.e == 2:
        print("   B =", gp.B, " C =", gp.C, " n* =", gp.n_star)

# for q = 2, n = 7 the circulant of periods is orthogonal
T = build_tower(2, 1, 7)
print("orthogonal circulant (2, 7):", circulant_is_orthogonal(gauss_periods(T).periods, T.base))
