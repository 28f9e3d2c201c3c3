"""Self-verification suite run by ``knormal verify``.

Every check returns a :class:`Check`; nothing raises on a failed identity so
the caller can report all failures at once.
"""

import random
from dataclasses import dataclass
from math import gcd as igcd

from .cyclo_idem import circulant_is_orthogonal, gauss_periods, idempotents_crt, idempotents_matrix, period_correlation
from .linearized import compose, divides, evaluate, evaluate_on_conjugates, minimal_q_poly, phi
from .ntheory import is_prime
from .normality import (
    classify_special,
    normality_via_divisors,
    normality_via_gcd,
    normality_via_idempotents,
    normality_via_Mi,
    one_normal_test,
)
from .poly_ring import Poly, factor_xn_minus_1, is_irreducible, xn_minus_1


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _elements(tower, exhaustive, sample, rng):
    if exhaustive:
        return list(tower.nonzero_elements())
    return [tower.random_element(rng) for _ in range(sample)]


def check_field(tower, elems):
    base = tower.base
    mod = Poly(base, tower.modulus)
    out = [Check("modulus_Q irreducible", is_irreducible(mod))]
    bad = [a for a in elems if tower.mul(a, tower.inv(a)) != tower.one]
    out.append(Check("a * a^-1 = 1", not bad, f"{len(bad)} failures"))
    bad = [a for a in elems if tower.frobenius(a, tower.n) != a]
    out.append(Check("Frobenius^n = id", not bad, f"{len(bad)} failures"))
    return out


def check_factorization(tower):
    fac = factor_xn_minus_1(tower)
    base = tower.base
    prod = Poly.constant(base, base.one)
    for p in fac.factors:
        prod = prod * p
    prod = prod ** fac.multiplicity
    return [
        Check("product of factors = x^n - 1", prod == xn_minus_1(base, tower.n)),
        Check("factors irreducible", all(is_irreducible(p) for p in fac.factors)),
        Check("factor degrees = class sizes", fac.degrees == fac.partition.sizes),
    ]


def check_idempotents(tower):
    base = tower.base
    X = xn_minus_1(base, tower.n)
    crt, mat = idempotents_crt(tower), idempotents_matrix(tower)
    es = crt.e
    orth = all(
        (es[i] * es[j] - (es[i] if i == j else Poly(base))) % X == Poly(base)
        for i in range(len(es))
        for j in range(len(es))
    )
    total = Poly(base)
    for e in es:
        total = total + e
    return [
        Check("e_i e_j = delta_ij e_i", orth),
        Check("sum e_i = 1", total % X == Poly.constant(base, base.one)),
        Check("CRT and matrix idempotents agree", crt.e == mat.e),
        Check("det M != 0", mat.det != base.zero),
    ]


def _random_poly(base, deg, rng):
    return Poly(base, [base.element(rng.randrange(base.order)) for _ in range(deg + 1)])


def check_phi(tower, rng, pairs):
    base = tower.base
    bad_mul = bad_eval = 0
    for _ in range(pairs):
        f = _random_poly(base, rng.randrange(2 * tower.n), rng)
        g = _random_poly(base, rng.randrange(2 * tower.n), rng)
        L, K = phi(f), phi(g)
        if phi(f * g) != compose(L, K):
            bad_mul += 1
        a = tower.random_element(rng, nonzero=False)
        if evaluate(compose(L, K), a, tower) != evaluate(L, evaluate(K, a, tower), tower):
            bad_eval += 1
    return [
        Check("phi(f g) = phi(f) (x) phi(g)", bad_mul == 0, f"{bad_mul}/{pairs} failures"),
        Check("evaluate is compatible with composition", bad_eval == 0, f"{bad_eval}/{pairs} failures"),
    ]


def check_classifiers(tower, elems):
    coprime = tower.n % tower.p != 0
    special = is_prime(tower.n) and tower.n != tower.p
    fac = factor_xn_minus_1(tower)
    mismatches, contract = [], []
    for a in elems:
        ref = normality_via_gcd(a, tower)
        k_rank = tower.n - tower.conjugate_span_rank(a)
        reports = [normality_via_divisors(a, tower)]
        if coprime:
            reports += [normality_via_Mi(a, tower), normality_via_idempotents(a, tower)]
        if special:
            reports.append(classify_special(a, tower))
        if k_rank != ref.k or any((r.k, r.delta, r.m_alpha) != (ref.k, ref.delta, ref.m_alpha) for r in reports):
            mismatches.append(tower.encode(a))
        m, M = minimal_q_poly(a, tower)
        conj = tower.conjugates(a)
        minimal = evaluate_on_conjugates(M, conj, tower) == tower.zero and all(
            evaluate_on_conjugates(phi(m // p), conj, tower) != tower.zero
            for p in fac.factors
            if (m % p).is_zero()
        )
        if not minimal or not divides(M, phi(xn_minus_1(tower.base, tower.n))):
            contract.append(tower.encode(a))
    return [
        Check("classifiers agree with the gcd oracle", not mismatches, f"{len(mismatches)} mismatches"),
        Check("minimal q-polynomial contract", not contract, f"{len(contract)} failures"),
    ]


def check_one_normal(tower, elems):
    bad = []
    for a in elems:
        res = one_normal_test(a, tower)
        k1 = normality_via_gcd(a, tower).k == 1
        if res.is_1_normal != k1 or res.condition_iv != k1:
            bad.append(tower.encode(a))
    return [Check("1-normal criteria agree with k = 1", not bad, f"{len(bad)} mismatches")]


def gauss_identity_checks(tower):
    base = tower.base
    gp = gauss_periods(tower)
    n, f, e = gp.n, gp.f, gp.e
    total = base.zero
    for x in gp.periods:
        total = base.add(total, x)
    out = [Check("sum of periods = -1", total == base.neg(base.one))]
    bad = []
    for j in range(e):
        expected = n - f if (n - 1) in gp.cosets[j] else -f
        if period_correlation(gp, base, j) != base.from_int(expected):
            bad.append(j)
    out.append(Check("period correlations", not bad, f"failing shifts {bad}"))
    if e == 2:
        B, C = gp.B, gp.C
        if base.p != 2:
            s = base.sub(B, C)
            out.append(Check("(B - C)^2 = n*", base.mul(s, s) == gp.n_star))
            out.append(Check("B + C = -1", base.add(B, C) == base.neg(base.one)))
            # 2B = -1 + mu (B - C) for one of mu = +1, -1
            two_b, minus_one = base.add(B, B), base.neg(base.one)
            out.append(Check("2B = -1 +- sqrt(n*)", two_b in (base.add(minus_one, s), base.sub(minus_one, s))))
        else:
            if n % 8 in (1, 7):
                ok = {B, C} == {base.zero, base.one}
            else:
                # both roots of x^2 + x + 1
                ok = B != C and all(base.add(base.add(base.mul(x, x), x), base.one) == base.zero for x in (B, C))
            out.append(Check("{B, C} by n mod 8", ok))
    if base.order == 2 and list(gp.periods).count(base.one) == 1:
        out.append(Check("period circulant orthogonal", circulant_is_orthogonal(gp.periods, base)))
    return out


def run_checks(tower, exhaustive=False, sample=64, seed=0):
    rng = random.Random(seed)
    elems = _elements(tower, exhaustive, sample, rng)
    out = check_field(tower, elems) + check_factorization(tower)
    coprime = tower.n % tower.p != 0
    if coprime:
        out += check_idempotents(tower)
    out += check_phi(tower, rng, sample)
    out += check_classifiers(tower, elems)
    if igcd(tower.n, tower.q) == 1:
        out += check_one_normal(tower, elems)
    if is_prime(tower.n) and tower.n != tower.p:
        out += gauss_identity_checks(tower)
    return out
