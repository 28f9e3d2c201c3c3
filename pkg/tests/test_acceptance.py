"""Acceptance criteria, all checked exactly.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from knormal import build_tower  # noqa: E402
from knormal.cyclo_idem import (  # noqa: E402
    gauss_periods,
    idempotents_crt,
    idempotents_matrix,
    period_correlation,
)
from knormal.linearized import compose, evaluate, evaluate_on_conjugates, minimal_q_poly, phi  # noqa: E402
from knormal.normality import (  # noqa: E402
    classify_gauss,
    classify_quadratic,
    classify_s2,
    histogram,
    normality_via_divisors,
    normality_via_gcd,
    normality_via_idempotents,
    normality_via_Mi,
    one_normal_test,
)
from knormal.poly_ring import Poly, factor_xn_minus_1, xn_minus_1  # noqa: E402

ORACLE_FIELDS = [(2, 1, 3), (2, 1, 5), (2, 1, 7), (3, 1, 4), (2, 2, 3), (5, 1, 3), (2, 1, 11)]


def _record(number, title, ok, detail, started):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({time.perf_counter() - started:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def _key(r):
    return r.k, r.delta, r.m_alpha


def criterion_1():
    started = time.perf_counter()
    bad, total = [], 0
    for pmn in ORACLE_FIELDS:
        T = build_tower(*pmn)
        fac = factor_xn_minus_1(T)
        for a in T.nonzero_elements():
            total += 1
            gcd_r = normality_via_gcd(a, T)
            mi_r = normality_via_Mi(a, T)
            idem_r = normality_via_idempotents(a, T)
            rank_k = T.n - T.conjugate_span_rank(a)
            prod = Poly.constant(T.base, T.base.one)
            for i in idem_r.delta:
                prod = prod * fac.factors[i - 1]
            m, _ = minimal_q_poly(a, T)
            if not (gcd_r.k == mi_r.k == idem_r.k == rank_k) or m != prod:
                bad.append((pmn, a))
    return _record(1, "oracle equivalence", not bad, f"{total} elements, {len(bad)} mismatches", started)


def criterion_2():
    started = time.perf_counter()
    expected = {
        (2, 1, 3): {0: 3, 1: 3, 2: 1},
        (2, 1, 7): {0: 49, 1: 49, 3: 14, 4: 14, 6: 1},
        (2, 1, 4): {0: 8, 1: 4, 2: 2, 3: 1},
    }
    ok = True
    for pmn, counts in expected.items():
        T = build_tower(*pmn)
        h = histogram(T, seed=0)
        ok &= h.counts == counts and sum(h.counts.values()) == T.Q - 1
    return _record(2, "histogram regressions", ok, "F_8, F_128, F_16", started)


def criterion_3():
    started = time.perf_counter()
    bad = []
    for pmn in ORACLE_FIELDS:
        T = build_tower(*pmn)
        base = T.base
        X = xn_minus_1(base, T.n)
        crt, mat = idempotents_crt(T), idempotents_matrix(T)
        zero = Poly(base)
        total = zero
        ok = crt.e == mat.e and mat.det != base.zero
        for i, ei in enumerate(crt.e):
            total = total + ei
            for j, ej in enumerate(crt.e):
                ok &= (ei * ej) % X == (ei if i == j else zero)
        ok &= total % X == Poly.constant(base, base.one)
        if not ok:
            bad.append(pmn)
    return _record(3, "idempotent identities", not bad, f"{len(ORACLE_FIELDS)} fields, failing {bad}", started)


def criterion_4(pairs=1000, seed=2024):
    started = time.perf_counter()
    rng = random.Random(seed)
    bad = 0
    for pmn in ORACLE_FIELDS:
        T = build_tower(*pmn)
        F = T.base
        for _ in range(pairs):
            f = Poly(F, [rng.randrange(F.order) for _ in range(rng.randrange(2 * T.n + 1))])
            g = Poly(F, [rng.randrange(F.order) for _ in range(rng.randrange(2 * T.n + 1))])
            L, K = phi(f), phi(g)
            LK = compose(L, K)
            a = T.random_element(rng, nonzero=False)
            if phi(f * g) != LK or evaluate(LK, a, T) != evaluate(L, evaluate(K, a, T), T):
                bad += 1
    return _record(4, "phi isomorphism", bad == 0, f"{pairs} pairs x {len(ORACLE_FIELDS)} fields, {bad} failures", started)


def criterion_5(samples=1000, seed=13):
    started = time.perf_counter()
    bad = []

    def same(fast, a, T):
        ref = normality_via_idempotents(a, T)
        r = fast(a, T)
        return (r.k, r.delta, r.M_alpha) == (ref.k, ref.delta, ref.M_alpha)

    for pmn in [(2, 1, 3), (2, 1, 5)]:
        T = build_tower(*pmn)
        bad += [(pmn, a) for a in T.nonzero_elements() if not same(classify_s2, a, T)]
    T = build_tower(2, 1, 7)
    bad += [((2, 1, 7), a) for a in T.nonzero_elements() if not same(classify_quadratic, a, T)]
    T = build_tower(3, 1, 13)
    gp = gauss_periods(T)
    assert (gp.f, gp.e) == (3, 4)
    rng = random.Random(seed)
    elems = [T.random_element(rng) for _ in range(samples)]
    bad += [((3, 1, 13), a) for a in elems if not same(classify_gauss, a, T)]
    return _record(5, "special-case agreement", not bad, f"F_8, F_32, F_128 exhaustive; (3,13) x {samples}; {len(bad)} mismatches", started)


def criterion_6(samples=200, seed=31):
    started = time.perf_counter()
    failures = []
    for pmn in [(2, 1, 7), (3, 1, 11), (3, 1, 13), (2, 1, 31)]:
        T = build_tower(*pmn)
        F = T.base
        gp = gauss_periods(T)
        total = F.zero
        for x in gp.periods:
            total = F.add(total, x)
        if total != F.neg(F.one):
            failures.append((pmn, "sum"))
        for j in range(gp.e):
            expected = gp.n - gp.f if gp.n - 1 in gp.cosets[j] else -gp.f
            if period_correlation(gp, F, j) != F.from_int(expected):
                failures.append((pmn, f"correlation {j}"))
        if gp.e == 2 and F.p != 2:
            s = F.sub(gp.B, gp.C)
            if F.mul(s, s) != gp.n_star or F.add(gp.B, gp.C) != F.neg(F.one):
                failures.append((pmn, "odd q quadratic"))
        if gp.e == 2 and F.p == 2:
            want = {0, 1} if gp.n % 8 in (1, 7) else None
            if want is not None and {gp.B, gp.C} != want:
                failures.append((pmn, "even q table"))
    # classification-only sampling on (2, 31)
    T = build_tower(2, 1, 31)
    rng = random.Random(seed)
    for _ in range(samples):
        a = T.random_element(rng)
        if _key(classify_gauss(a, T)) != _key(normality_via_idempotents(a, T)):
            failures.append(((2, 1, 31), "classification"))
            break
    return _record(6, "Gauss identities", not failures, f"(2,7) (3,11) (3,13) (2,31); failing {failures}", started)


def criterion_7():
    started = time.perf_counter()
    bad = []
    for pmn in [(2, 1, 3), (2, 1, 5), (2, 2, 3)]:
        T = build_tower(*pmn)
        for a in T.nonzero_elements():
            k1 = normality_via_gcd(a, T).k == 1
            res = one_normal_test(a, T)
            if not (k1 == res.is_1_normal == res.condition_iv):
                bad.append((pmn, a))
    d = one_normal_test(build_tower(2, 2, 3).one, build_tower(2, 2, 3)).d
    ok = not bad and d == 3
    return _record(7, "1-normal criteria", ok, f"F_8, F_32, F_64 (d = {d}); {len(bad)} mismatches", started)


def criterion_8():
    started = time.perf_counter()
    bad, total = [], 0
    for pmn in ORACLE_FIELDS + [(2, 1, 4)]:
        T = build_tower(*pmn)
        fac = factor_xn_minus_1(T)
        for a in T.nonzero_elements():
            total += 1
            r = normality_via_divisors(a, T)
            conj = T.conjugates(a)
            ok = evaluate_on_conjugates(r.M_alpha, conj, T) == T.zero
            for p in fac.factors:
                if (r.m_alpha % p).is_zero():
                    ok &= evaluate_on_conjugates(phi(r.m_alpha // p), conj, T) != T.zero
            ok &= r.k == normality_via_gcd(a, T).k
            if not ok:
                bad.append((pmn, a))
    return _record(8, "minimal q-polynomial contract", not bad, f"{total} elements incl. F_16, {len(bad)} failures", started)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def test_criterion_1_oracle_equivalence():
    assert criterion_1()


def test_criterion_2_histograms():
    assert criterion_2()


def test_criterion_3_idempotent_identities():
    assert criterion_3()


def test_criterion_4_phi_isomorphism():
    assert criterion_4()


def test_criterion_5_special_cases():
    assert criterion_5()


def test_criterion_6_gauss_identities():
    assert criterion_6()


def test_criterion_7_one_normal():
    assert criterion_7()


def test_criterion_8_minimal_q_polynomial():
    assert criterion_8()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
