"""Classifiers for the normality ``k`` of an element of F_Q over F_q.

``k`` is the degree of ``gcd(g_alpha(x), x^n - 1)``; equivalently the minimal
q-polynomial of ``alpha`` has q-degree ``n - k``.  Several independent routes
are implemented so they can check one another:

* ``normality_via_gcd``: the gcd definition, computed over F_Q (reference).
* ``normality_via_Mi``: evaluate ``phi((x^n - 1)/p_i)`` at ``alpha``.
* ``normality_via_idempotents``: evaluate ``E_i = phi(e_i)`` at ``alpha``.
* ``normality_via_divisors``: search the divisor lattice of ``x^n - 1``;
  the only route that also works when ``p | n``.
* ``classify_special``: closed-form tests for ``n`` prime, driven by the
  order of ``q`` mod ``n`` (traces, quadratic Gauss sums, Gauss periods).

Factor indices in ``delta`` are 1-based and follow the canonical q-class
order, so index 1 is always the factor ``x - 1``.
"""

import json
import random
from dataclasses import dataclass, field
from math import gcd as igcd

from .cyclo_idem import gauss_periods, idempotents_crt, idempotents_matrix, quadratic_data
from .errors import (
    FieldTooLarge,
    InternalInvariantError,
    NNotPrime,
    NotCoprime,
    OrderMismatch,
    PDividesN,
    ZeroElement,
)
from .field_core import rank
from .linearized import LinearizedPoly, divisor_lattice, evaluate_on_conjugates, minimal_q_poly, phi
from .ntheory import is_prime, multiplicative_order
from .poly_ring import Poly, factor_xn_minus_1, g_alpha, gcd, xn_minus_1

METHODS = (
    "gcd",
    "Mi",
    "idempotent",
    "lemma2_general",
    "thm_s2",
    "thm_quadratic",
    "thm_gauss",
)


@dataclass(frozen=True)
class NormalityReport:
    k: int
    delta: tuple
    m_alpha: Poly
    M_alpha: LinearizedPoly
    method: str
    witnesses: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        F = self.m_alpha.field
        return {
            "k": self.k,
            "delta": list(self.delta),
            "m_alpha_coeffs": [F.encode(c) for c in self.m_alpha.coeffs],
            "M_alpha_q_coeffs": [F.encode(c) for c in self.M_alpha.coeffs],
            "method": self.method,
            "witnesses": self.witnesses,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text, tower):
        obj = json.loads(text) if isinstance(text, str) else text
        base = tower.base
        return cls(
            k=obj["k"],
            delta=tuple(obj["delta"]),
            m_alpha=Poly(base, [base.decode(c) for c in obj["m_alpha_coeffs"]]),
            M_alpha=LinearizedPoly(base, [base.decode(c) for c in obj["M_alpha_q_coeffs"]]),
            method=obj["method"],
            witnesses=obj["witnesses"],
        )


def _nonzero(alpha, tower):
    if alpha == tower.zero:
        raise ZeroElement("normality is defined for nonzero elements only")


def _coprime(tower):
    if tower.n % tower.p == 0:
        raise PDividesN(f"p = {tower.p} divides n = {tower.n}")


def _report(tower, delta0, method, witnesses):
    """Build a report from a set of 0-based factor indices (gcd(n, p) = 1 case)."""
    fac = factor_xn_minus_1(tower)
    base = tower.base
    m = Poly.constant(base, base.one)
    for i in sorted(delta0):
        m = m * fac.factors[i]
    return NormalityReport(
        k=tower.n - m.degree,
        delta=tuple(i + 1 for i in sorted(delta0)),
        m_alpha=m,
        M_alpha=phi(m),
        method=method,
        witnesses=witnesses,
    )


def _delta_of(m, tower):
    fac = factor_xn_minus_1(tower)
    return tuple(i + 1 for i, p in enumerate(fac.factors) if (m % p).is_zero())


def normality_via_gcd(alpha, tower):
    """``k = deg gcd(g_alpha, x^n - 1)`` over F_Q; ``m_alpha`` comes from the divisor search."""
    _nonzero(alpha, tower)
    g = g_alpha(tower, alpha)
    X = xn_minus_1(tower.base, tower.n).map_coeffs(tower, tower.embed)
    d = gcd(g, X)
    m, M = minimal_q_poly(alpha, tower)
    return NormalityReport(
        k=d.degree,
        delta=_delta_of(m, tower),
        m_alpha=m,
        M_alpha=M,
        method="gcd",
        witnesses={"gcd": [tower.encode(c) for c in d.coeffs]},
    )


def normality_via_Mi(alpha, tower):
    _nonzero(alpha, tower)
    _coprime(tower)
    fac = factor_xn_minus_1(tower)
    X = xn_minus_1(tower.base, tower.n)
    conj = tower.conjugates(alpha)
    values = [evaluate_on_conjugates(phi(X // p), conj, tower) for p in fac.factors]
    delta0 = {i for i, v in enumerate(values) if v != tower.zero}
    return _report(tower, delta0, "Mi", {"M_i(alpha)": [tower.encode(v) for v in values]})


def idempotent_system(tower, construction="matrix"):
    if construction == "matrix":
        return idempotents_matrix(tower)
    if construction == "crt":
        return idempotents_crt(tower)
    raise ValueError(f"unknown idempotent construction {construction!r}")


def normality_via_idempotents(alpha, tower, construction="matrix"):
    _nonzero(alpha, tower)
    _coprime(tower)
    system = idempotent_system(tower, construction)
    conj = tower.conjugates(alpha)
    values = [evaluate_on_conjugates(E, conj, tower) for E in system.E]
    delta0 = {i for i, v in enumerate(values) if v != tower.zero}
    return _report(tower, delta0, "idempotent", {"E_i(alpha)": [tower.encode(v) for v in values]})


def normality_via_divisors(alpha, tower):
    """Divisor-lattice search for the minimal q-polynomial; valid for any ``n``."""
    _nonzero(alpha, tower)
    m, M = minimal_q_poly(alpha, tower)
    exps = dict((mm, e) for mm, e in divisor_lattice(tower))[m]
    return NormalityReport(
        k=tower.n - M.q_degree,
        delta=tuple(i + 1 for i, e in enumerate(exps) if e),
        m_alpha=m,
        M_alpha=M,
        method="lemma2_general",
        witnesses={"exponents": list(exps)},
    )


# -- 1-normal elements ------------------------------------------------------


@dataclass(frozen=True)
class OneNormalResult:
    is_1_normal: bool
    lambda_zero: object
    L_values: tuple
    d: int
    e: int
    beta: int
    trace_to_d: tuple
    condition_iv: bool


def one_normal_test(alpha, tower, construction="matrix"):
    """1-normality from the subfield trace ``Tr^n_d`` and the non-linear idempotents.

    With ``d = gcd(n, q - 1)`` and ``beta = gamma^((q-1)/d)``, the linear factors of
    ``x^n - 1`` are ``x - beta^(lam-1)`` and the corresponding
    ``L_lam(alpha) = sum_{r<d} beta^((lam-1)(-1-r)) Tr^n_d(alpha)^(q^r)``.
    ``alpha`` is 1-normal iff exactly one ``L_lam(alpha)`` vanishes and every
    idempotent of a factor of degree >= 2 is nonzero at ``alpha``.
    """
    _nonzero(alpha, tower)
    n, q = tower.n, tower.q
    if igcd(n, q) != 1:
        raise NotCoprime(f"gcd(n={n}, q={q}) != 1")
    base = tower.base
    d = igcd(n, q - 1)
    e = n // d
    # beta needs exact order d
    beta = base.pow(base.primitive_element, (q - 1) // d)
    T = tower.trace_to_subfield(alpha, d)
    T_conj = [tower.frobenius(T, r) for r in range(d)]
    L_values = []
    for lam in range(1, d + 1):
        acc = tower.zero
        for r in range(d):
            coef = base.pow(beta, ((lam - 1) * (-1 - r)) % (q - 1))
            acc = tower.add(acc, tower.scalar_mul(coef, T_conj[r]))
        L_values.append(acc)
    zeros = [lam for lam, v in enumerate(L_values, start=1) if v == tower.zero]
    one_zero = len(zeros) == 1

    system = idempotent_system(tower, construction)
    fac = factor_xn_minus_1(tower)
    conj = tower.conjugates(alpha)
    nonlinear_ok = all(
        evaluate_on_conjugates(E, conj, tower) != tower.zero
        for E, p in zip(system.E, fac.factors)
        if p.degree >= 2
    )
    independent = rank(base, conj[: n - 1]) == n - 1
    return OneNormalResult(
        is_1_normal=one_zero and nonlinear_ok,
        lambda_zero=zeros[0] if one_zero else None,
        L_values=tuple(L_values),
        d=d,
        e=e,
        beta=beta,
        trace_to_d=T,
        condition_iv=one_zero and independent,
    )


# -- closed forms for prime n ------------------------------------------------


def _special_preconditions(alpha, tower):
    _nonzero(alpha, tower)
    if not is_prime(tower.n):
        raise NNotPrime(f"n = {tower.n} is not prime")
    if tower.n == tower.p:
        raise PDividesN(f"n = p = {tower.n}")


def classify_s2(alpha, tower):
    """``q`` generates Z_n^*: only the trace and membership in F_q matter."""
    _special_preconditions(alpha, tower)
    n = tower.n
    if multiplicative_order(tower.q, n) != n - 1:
        raise OrderMismatch("q does not generate the units mod n")
    tr = tower.trace(alpha)
    witnesses = {"trace": tower.base.encode(tr), "in_base": tower.in_base(alpha)}
    if tower.in_base(alpha):
        return _report(tower, {0}, "thm_s2", witnesses)
    delta0 = {1} | ({0} if tr != tower.base.zero else set())
    return _report(tower, delta0, "thm_s2", witnesses)


def classify_quadratic(alpha, tower):
    """Order of ``q`` mod ``n`` is ``(n-1)/2``: decided by the quadratic Gauss sum."""
    _special_preconditions(alpha, tower)
    gp = gauss_periods(tower)
    if gp.e != 2:
        raise OrderMismatch(f"order of q mod n is {gp.f}, not (n-1)/2")
    base = tower.base
    qd = quadratic_data(tower, alpha)
    tr = tower.trace(alpha)
    idx_D, idx_Dp = gp.coset_to_factor
    witnesses = {
        "trace": base.encode(tr),
        "delta": tower.encode(qd.delta),
        "epsilon": tower.encode(qd.epsilon),
        "B": base.encode(qd.B),
        "C": base.encode(qd.C),
        "sqrt_n_star": base.encode(qd.sqrt_n_star),
    }
    if tower.in_base(alpha):
        return _report(tower, {0}, "thm_quadratic", witnesses)
    delta0 = {0} if tr != base.zero else set()
    if base.p != 2:
        n_el = base.from_int(tower.n)
        u = tower.sub(tower.scalar_mul(n_el, alpha), tower.embed(tr))
        s_delta = tower.scalar_mul(qd.sqrt_n_star, qd.delta)
        if s_delta not in (u, tower.neg(u)):
            delta0 |= {idx_D, idx_Dp}
        elif tower.scalar_mul(qd.sqrt_n_star, u) == tower.scalar_mul(n_el, qd.delta):
            # E for the residue class vanishes
            delta0.add(idx_Dp)
        else:
            delta0.add(idx_D)
    else:
        l_el = base.from_int((tower.n - 1) // 2)
        tr_plus = tower.add(tower.embed(tr), alpha)
        l_tr = tower.embed(base.mul(l_el, tr))
        t_D = tower.add(l_tr, tower.scalar_mul(qd.B, tr_plus))
        t_Dp = tower.add(l_tr, tower.scalar_mul(qd.C, tr_plus))
        if qd.epsilon not in (t_D, t_Dp):
            delta0 |= {idx_D, idx_Dp}
        elif qd.epsilon == t_D:
            delta0.add(idx_Dp)
        else:
            delta0.add(idx_D)
    return _report(tower, delta0, "thm_quadratic", witnesses)


def classify_gauss(alpha, tower):
    """General prime ``n``: ``delta`` from the Gauss-period set ``S``.

    ``S`` collects the cosets ``i`` with
    ``sum_lam eps_{lam+i+c} sum_{a in C_lam} alpha^(q^a) != -f alpha``.
    """
    _special_preconditions(alpha, tower)
    gp = gauss_periods(tower)
    base = tower.base
    tr = tower.trace(alpha)
    if tower.in_base(alpha):
        return _report(tower, {0}, "thm_gauss", {"trace": base.encode(tr), "S": []})
    conj = tower.conjugates(alpha)
    sigma = []
    for C in gp.cosets:
        acc = tower.zero
        for a in C:
            acc = tower.add(acc, conj[a])
        sigma.append(acc)
    target = tower.neg(tower.scalar_mul(base.from_int(gp.f), alpha))
    S = []
    for i in range(gp.e):
        acc = tower.zero
        for lam in range(gp.e):
            acc = tower.add(acc, tower.scalar_mul(gp.periods[(lam + i + gp.c) % gp.e], sigma[lam]))
        if acc != target:
            S.append(i)
    delta0 = {gp.coset_to_factor[i] for i in S}
    if tr != base.zero:
        delta0.add(0)
    return _report(tower, delta0, "thm_gauss", {"trace": base.encode(tr), "S": S, "c": gp.c})


def classify_special(alpha, tower):
    """Dispatch on ``ord_n(q)``: ``n - 1``, ``(n - 1)/2``, or anything else."""
    _special_preconditions(alpha, tower)
    f = multiplicative_order(tower.q, tower.n)
    if f == tower.n - 1:
        return classify_s2(alpha, tower)
    if 2 * f == tower.n - 1:
        return classify_quadratic(alpha, tower)
    return classify_gauss(alpha, tower)


_DISPATCH = {
    "gcd": normality_via_gcd,
    "Mi": normality_via_Mi,
    "idempotent": normality_via_idempotents,
    "lemma2_general": normality_via_divisors,
    "special": classify_special,
    "thm_s2": classify_s2,
    "thm_quadratic": classify_quadratic,
    "thm_gauss": classify_gauss,
}


def default_method(tower):
    return "idempotent" if tower.n % tower.p else "lemma2_general"


def classify(alpha, tower, method="auto"):
    if method == "auto":
        method = default_method(tower)
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(alpha, tower)


# -- whole-field sweep ------------------------------------------------------


@dataclass(frozen=True)
class Histogram:
    counts: dict
    method: str
    oracle_indices: tuple
    seed: int

    def to_dict(self):
        return {
            "counts": {str(k): v for k, v in self.counts.items()},
            "method": self.method,
            "oracle_indices": list(self.oracle_indices),
            "seed": self.seed,
        }


def histogram(tower, cap=1 << 20, oracle_sample=32, seed=0):
    """Count nonzero elements by normality; a seeded sample is re-checked with the gcd oracle."""
    if tower.Q > cap:
        raise FieldTooLarge(f"Q = {tower.Q} exceeds the exhaustive cap {cap}")
    method = default_method(tower)
    fn = _DISPATCH[method]
    counts = {}
    for idx in range(1, tower.Q):
        k = fn(tower.element(idx), tower).k
        counts[k] = counts.get(k, 0) + 1
    rng = random.Random(seed)
    sample = sorted(rng.sample(range(1, tower.Q), min(oracle_sample, tower.Q - 1)))
    for idx in sample:
        a = tower.element(idx)
        if fn(a, tower).k != normality_via_gcd(a, tower).k:
            raise InternalInvariantError(f"{method} disagrees with the gcd oracle at element #{idx}")
    return Histogram(dict(sorted(counts.items())), method, tuple(sample), seed)
