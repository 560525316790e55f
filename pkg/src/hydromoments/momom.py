"""Momentum expectation values <p^alpha>.

Four mutually checking routes: the default single finite sum (k+1 terms),
the raw terminating-5F4 form, the double-sum rewriting, and the reflection
identity.  Closed forms cover even orders, circular states, the mean
momentum and the average inverse momentum.  Integer orders evaluate
exactly; real orders use compensated float summation with a cancellation
bound and fall back to the quadrature oracle when the bound trips.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import (
    CancellationOverflow,
    NotCircular,
    OrderOutOfDomain,
    SingularDenominator,
)
from .specfun import (
    SQRT_PI,
    ExactValue,
    HypSumSpec,
    digamma_half_exact,
    gamma_exact,
    hyp_sum,
    is_integral,
    log_gamma,
    pochhammer,
)
from .posmom import CANCELLATION_LIMIT, Method, MomentResult
from .states import HydrogenicState, MomentOrder, Space, check_order

_EPS = 2.0 ** -53


def _require_momentum_order(state: HydrogenicState, alpha: float):
    lo, hi = state.momentum_interval()
    if not lo < alpha < hi:
        raise OrderOutOfDomain(
            f"momentum order {alpha} outside ({lo}, {hi}) for D={state.D}, l={state.l}"
        )


def _zeta_pow(state: HydrogenicState, a: int) -> ExactValue:
    """(Z/eta)^a as an exact value."""
    return ExactValue((state.Z_exact / state.eta) ** a)


def _gamma_quotient_float(nu: float, alpha: float) -> float:
    """log of Gamma(nu+(a+1)/2) Gamma(nu+(3-a)/2) / (Gamma(nu+1/2) Gamma(nu+3/2))."""
    return (
        log_gamma(nu + (alpha + 1) / 2)
        + log_gamma(nu + (3 - alpha) / 2)
        - log_gamma(nu + 0.5)
        - log_gamma(nu + 1.5)
    )


def _single_sum_exact(state: HydrogenicState, a: int) -> ExactValue:
    k, nu = state.k, state.nu
    pref_rat = (
        Fraction(2, math.factorial(k))
        * (k + nu)
        * gamma_exact(k + 2 * nu).coeff
        / gamma_exact(2 * nu + 1).coeff
    )
    gq = (
        gamma_exact(nu + Fraction(a + 1, 2))
        * gamma_exact(nu + Fraction(3 - a, 2))
        / (gamma_exact(nu + Fraction(1, 2)) * gamma_exact(nu + Fraction(3, 2)))
    )
    fk = _f_sum_exact(k, nu, a)
    return _zeta_pow(state, a) * ExactValue(pref_rat) * gq * ExactValue(fk)


def _f_sum_exact(k: int, nu: Fraction, a: int) -> Fraction:
    total = Fraction(0)
    for j in range(k + 1):
        dj = (
            Fraction(nu, nu + j)
            * pochhammer(nu + Fraction(a + 1, 2), j)
            * pochhammer(nu + Fraction(3 - a, 2), j)
            / (pochhammer(nu + Fraction(1, 2), j) * pochhammer(nu + Fraction(3, 2), j))
        )
        total += (-1) ** j * math.comb(k, j) * pochhammer(2 * nu + j, k) * dj
    return total / pochhammer(2 * nu, k)


def _single_sum_float(state: HydrogenicState, alpha: float) -> tuple[float, float]:
    k = state.k
    nu = float(state.nu)
    lpref = (
        math.log(2.0)
        - log_gamma(k + 1)
        + math.log(k + nu)
        + log_gamma(k + 2 * nu)
        - log_gamma(2 * nu + 1)
        + _gamma_quotient_float(nu, alpha)
        + alpha * (math.log(state.Z) - math.log(float(state.eta)))
    )
    terms = []
    bounds = []
    dj = 1.0
    for j in range(k + 1):
        t = (-1) ** j * math.comb(k, j) * pochhammer(2 * nu + j, k, "float") * dj
        if not math.isfinite(t):
            raise CancellationOverflow(f"term {j} overflowed at n={state.n}")
        terms.append(t)
        bounds.append(10.0 * (j + 1) * _EPS * abs(t))
        dj *= (
            (nu + j)
            / (nu + j + 1)
            * (nu + (alpha + 1) / 2 + j)
            * (nu + (3 - alpha) / 2 + j)
            / ((nu + 0.5 + j) * (nu + 1.5 + j))
        )
    denom = pochhammer(2 * nu, k, "float")
    s = math.fsum(terms) / denom
    bound = (math.fsum(bounds) + _EPS * abs(s) * denom) / denom
    pref = math.exp(lpref)
    value = pref * s
    err = pref * bound + 20 * abs(value) * _EPS
    return value, err


def _hyp5f4_spec(state: HydrogenicState, alpha) -> HypSumSpec:
    k, nu = state.k, state.nu
    if is_integral(alpha):
        a = int(round(float(alpha)))
        top = (
            -k, k + 2 * nu, nu,
            nu + Fraction(a + 1, 2), nu + Fraction(3 - a, 2),
        )
        bottom = (2 * nu, nu + Fraction(1, 2), nu + 1, nu + Fraction(3, 2))
    else:
        nu_f = float(nu)
        top = (-k, k + 2 * nu_f, nu_f, nu_f + (alpha + 1) / 2, nu_f + (3 - alpha) / 2)
        bottom = (2 * nu_f, nu_f + 0.5, nu_f + 1, nu_f + 1.5)
    return HypSumSpec(top=top, bottom=bottom, terms=k + 1)


def _hyp5f4_exact(state: HydrogenicState, a: int) -> ExactValue:
    k, nu = state.k, state.nu
    two_nu = int(2 * nu)
    pref = (
        ExactValue(Fraction(2) ** (1 - two_nu) / math.factorial(k))
        * SQRT_PI
        * ExactValue(k + nu)
        * gamma_exact(k + 2 * nu)
        * gamma_exact(nu + Fraction(a + 1, 2))
        * gamma_exact(nu + Fraction(3 - a, 2))
        / (
            gamma_exact(nu + Fraction(1, 2)) ** 2
            * gamma_exact(nu + 1)
            * gamma_exact(nu + Fraction(3, 2))
        )
    )
    series = hyp_sum(_hyp5f4_spec(state, a), "exact")
    return _zeta_pow(state, a) * pref * series


def _hyp5f4_float(state: HydrogenicState, alpha: float) -> tuple[float, float]:
    k = state.k
    nu = float(state.nu)
    lpref = (
        (1 - 2 * nu) * math.log(2.0)
        + 0.5 * math.log(math.pi)
        - log_gamma(k + 1)
        + math.log(k + nu)
        + log_gamma(k + 2 * nu)
        + log_gamma(nu + (alpha + 1) / 2)
        + log_gamma(nu + (3 - alpha) / 2)
        - 2 * log_gamma(nu + 0.5)
        - log_gamma(nu + 1)
        - log_gamma(nu + 1.5)
        + alpha * (math.log(state.Z) - math.log(float(state.eta)))
    )
    s, bound = hyp_sum(_hyp5f4_spec(state, alpha), "float")
    pref = math.exp(lpref)
    value = pref * s
    err = pref * bound + 20 * abs(value) * _EPS
    return value, err


@lru_cache(maxsize=512)
def _double_sum_parts_exact(D: int, n: int, l: int) -> tuple[ExactValue, ...]:
    """P(s) = sum over i+j=s of Pi_{i,j}(n,l,D), s = 0..2k."""
    k = n - l - 1
    parts = []
    for s in range(2 * k + 1):
        acc = None
        for i in range(max(0, s - k), min(k, s) + 1):
            j = s - i
            term = (
                ExactValue(
                    pochhammer(-k, i) * pochhammer(-k, j)
                    / (math.factorial(i) * math.factorial(j))
                )
                * gamma_exact(n + l + D - 2 + i)
                * gamma_exact(n + l + D - 2 + j)
                / (
                    gamma_exact(l + Fraction(D, 2) + i)
                    * gamma_exact(l + Fraction(D, 2) + j)
                    * gamma_exact(2 * l + D + 1 + i + j)
                )
            )
            acc = term if acc is None else acc + term
        parts.append(acc)
    return tuple(parts)


def _double_sum_exact(state: HydrogenicState, a: int) -> ExactValue:
    D, n, l = state.D, state.n, state.l
    parts = _double_sum_parts_exact(D, n, l)
    acc = None
    for s, part in enumerate(parts):
        term = part * gamma_exact(l + Fraction(D + a, 2) + s)
        acc = term if acc is None else acc + term
    pref = (
        ExactValue(4 * state.eta)
        * _zeta_pow(state, a)
        * gamma_exact(l + Fraction(D - a, 2) + 1)
        / (gamma_exact(n + l + D - 2) * gamma_exact(n - l))
    )
    return pref * acc


def _log_abs_fraction(fr: Fraction) -> tuple[int, float]:
    """(sign, log|fr|) without overflow for huge integers."""
    if fr == 0:
        return 0, -math.inf
    sign = 1 if fr > 0 else -1
    num, den = abs(fr.numerator), fr.denominator
    # shift both into float range before taking logs
    sn = max(num.bit_length() - 900, 0)
    sd = max(den.bit_length() - 900, 0)
    return sign, math.log(num >> sn) + sn * _LOG2 - math.log(den >> sd) - sd * _LOG2


_LOG2 = math.log(2.0)


def _double_sum_float(state: HydrogenicState, alpha: float) -> tuple[float, float]:
    """Float double-sum route.  The alpha-independent inner cancellation is
    collapsed exactly once per state, leaving a short outer sum in s."""
    D, n, l = state.D, state.n, state.l
    parts = _double_sum_parts_exact(D, n, l)
    pi_pow = float(parts[0].pi_pow)
    lscale = log_gamma(n + l + D - 2)  # keeps exp() in range
    x = l + (D + alpha) / 2
    # shared gamma recurrence: errors correlate across terms and factor out,
    # so cancellation only amplifies the per-term rounding below
    g = math.exp(log_gamma(x) - lscale + pi_pow * math.log(math.pi))
    terms = []
    bounds = []
    for s, part in enumerate(parts):
        try:
            c = float(part.coeff)
        except OverflowError:
            sign, logc = _log_abs_fraction(part.coeff)
            c = sign * math.exp(logc)
        t = c * g
        if not math.isfinite(t):
            raise CancellationOverflow(f"term {s} overflowed at n={state.n}")
        terms.append(t)
        bounds.append((s + 4) * _EPS * abs(t))
        g *= x + s
    total = math.fsum(terms)
    bound = math.fsum(bounds) + 40 * _EPS * math.fsum(abs(t) for t in terms)
    lpref = (
        math.log(4 * float(state.eta))
        + alpha * (math.log(state.Z) - math.log(float(state.eta)))
        + log_gamma(l + (D - alpha) / 2 + 1)
        - log_gamma(n + l + D - 2)
        - log_gamma(n - l)
        + lscale
    )
    pref = math.exp(lpref)
    return pref * total, pref * bound + 20 * abs(pref * total) * _EPS


def p_moment(
    state: HydrogenicState, alpha, mode: str = "auto", route: str = "single"
) -> MomentResult:
    """<p^alpha> for a generic state.  Routes: single (default), hyp5f4, double."""
    alpha_f = float(alpha)
    _require_momentum_order(state, alpha_f)
    if mode == "auto":
        mode = "exact" if is_integral(alpha) else "float"

    if mode == "exact":
        a = int(round(alpha_f))
        if route == "single":
            value, method = _single_sum_exact(state, a), Method.SINGLE_SUM
        elif route == "hyp5f4":
            value, method = _hyp5f4_exact(state, a), Method.HYP5F4
        elif route == "double":
            value, method = _double_sum_exact(state, a), Method.DOUBLE_SUM
        else:
            raise ValueError(f"unknown route {route!r}")
        return MomentResult(value, 0.0, method, Space.MOMENTUM, alpha_f, state)

    try:
        if route == "single":
            value, err = _single_sum_float(state, alpha_f)
            method = Method.SINGLE_SUM
        elif route == "hyp5f4":
            value, err = _hyp5f4_float(state, alpha_f)
            method = Method.HYP5F4
        elif route == "double":
            value, err = _double_sum_float(state, alpha_f)
            method = Method.DOUBLE_SUM
        else:
            raise ValueError(f"unknown route {route!r}")
    except CancellationOverflow:
        value, err, method = math.nan, math.inf, None
    if err > CANCELLATION_LIMIT * abs(value) or value <= 0 or not math.isfinite(value):
        from . import oracle

        return oracle.quad_p_moment(state, alpha_f)
    return MomentResult(value, err, method, Space.MOMENTUM, alpha_f, state)


def p_moment_double_sum(state: HydrogenicState, alpha, mode: str = "auto") -> MomentResult:
    return p_moment(state, alpha, mode=mode, route="double")


_EVEN_CLOSED = (0, 2, -2, 4, 6)


def p_moment_even_closed(state: HydrogenicState, alpha: int) -> MomentResult:
    """Tabulated even-order closed forms: alpha in {0, 2, -2, 4, 6}."""
    if alpha not in _EVEN_CLOSED:
        raise OrderOutOfDomain(f"no closed form for momentum order {alpha}")
    _require_momentum_order(state, alpha)
    eta, L, nu, k = state.eta, state.L, state.nu, state.k
    Z = state.Z_exact
    if alpha == 0:
        coeff = Fraction(1)
    elif alpha == 2:
        coeff = (Z / eta) ** 2
    elif alpha in (-2, 4):
        if 2 * L + 1 == 0:
            raise SingularDenominator("2L+1 vanishes")
        coeff = (Z / eta) ** alpha * (8 * eta - 3 * (2 * L + 1)) / (2 * L + 1)
    else:  # alpha == 6
        den = (2 * L + 3) * (2 * L + 1) * (2 * L - 1)
        if den == 0:
            raise SingularDenominator("(2L+3)(2L+1)(2L-1) vanishes")
        num = (4 * k + 2 * nu + 1) * (
            16 * k ** 2 + 40 * nu * k - 4 * k + 4 * nu ** 2 + 16 * nu + 15
        )
        coeff = (Z / eta) ** 6 * num / den
    return MomentResult(
        ExactValue(coeff), 0.0, Method.CLOSED_FORM, Space.MOMENTUM, float(alpha), state
    )


def reflect(state: HydrogenicState, alpha, mode: str = "auto") -> MomentResult:
    """<p^{2-alpha}> computed from <p^alpha> via the inversion identity
    (eta/Z)^{2-alpha} <p^{2-alpha}> = (eta/Z)^alpha <p^alpha>."""
    alpha_f = float(alpha)
    _require_momentum_order(state, alpha_f)
    _require_momentum_order(state, 2 - alpha_f)
    base = p_moment(state, alpha, mode=mode)
    if base.is_exact and is_integral(alpha):
        a = int(round(alpha_f))
        factor = ExactValue((state.eta / state.Z_exact) ** (2 * a - 2))
        value = base.value * factor
        err = 0.0
    else:
        factor = (float(state.eta) / state.Z) ** (2 * alpha_f - 2)
        value = base.as_float() * factor
        err = base.error_estimate * factor + 4 * abs(value) * _EPS
    return MomentResult(value, err, Method.REFLECTION, Space.MOMENTUM, 2 - alpha_f, state)


def p_moment_circular(state: HydrogenicState, alpha, mode: str = "auto") -> MomentResult:
    """Gamma-ratio closed form for circular states (l = n-1)."""
    if not state.is_circular:
        raise NotCircular(f"state has l={state.l}, n={state.n}")
    alpha_f = float(alpha)
    _require_momentum_order(state, alpha_f)
    if mode == "auto":
        mode = "exact" if is_integral(alpha) else "float"
    eta = state.eta
    if mode == "exact":
        a = int(round(alpha_f))
        value = (
            _zeta_pow(state, a)
            * gamma_exact(eta + Fraction(a + 1, 2))
            * gamma_exact(eta + Fraction(3 - a, 2))
            / (gamma_exact(eta + Fraction(1, 2)) * gamma_exact(eta + Fraction(3, 2)))
        )
        return MomentResult(value, 0.0, Method.CLOSED_FORM, Space.MOMENTUM, alpha_f, state)
    value = math.exp(
        alpha_f * (math.log(state.Z) - math.log(float(eta)))
        + _gamma_quotient_float(float(eta), alpha_f)
    )
    return MomentResult(
        value, 8 * abs(value) * _EPS, Method.CLOSED_FORM, Space.MOMENTUM, alpha_f, state
    )


def mean_momentum(state: HydrogenicState, mode: str = "exact") -> MomentResult:
    """<p>, picking the cheapest applicable closed form."""
    if state.is_circular:
        return p_moment_circular(state, 1, mode=mode)
    if state.D == 3 and state.l == 0:
        n = state.n
        coeff = Fraction(8 * n, 4 * n * n - 1) * state.Z_exact
        value = ExactValue(coeff, Fraction(-1))
        if mode == "float":
            return MomentResult(
                value.to_float(), 4 * value.to_float() * _EPS,
                Method.CLOSED_FORM, Space.MOMENTUM, 1.0, state,
            )
        return MomentResult(value, 0.0, Method.CLOSED_FORM, Space.MOMENTUM, 1.0, state)
    return p_moment(state, 1, mode=mode)


def inverse_momentum(state: HydrogenicState, mode: str = "exact") -> MomentResult:
    """<p^{-1}>; for 3D nS states the exact digamma decomposition keeps the
    value rational over pi."""
    if state.is_circular:
        eta = state.eta
        if mode == "exact":
            value = (
                _zeta_pow(state, -1)
                * gamma_exact(eta)
                * gamma_exact(eta + 2)
                / (gamma_exact(eta + Fraction(1, 2)) * gamma_exact(eta + Fraction(3, 2)))
            )
            return MomentResult(value, 0.0, Method.CLOSED_FORM, Space.MOMENTUM, -1.0, state)
        return p_moment_circular(state, -1.0, mode="float")
    if state.D == 3 and state.l == 0:
        n = state.n
        bracket = digamma_half_exact(n) - Fraction(2 * n * n, 4 * n * n - 1)
        value = ExactValue(Fraction(4 * n) / state.Z_exact * bracket, Fraction(-1))
        if mode == "float":
            return MomentResult(
                value.to_float(), 4 * value.to_float() * _EPS,
                Method.CLOSED_FORM, Space.MOMENTUM, -1.0, state,
            )
        return MomentResult(value, 0.0, Method.CLOSED_FORM, Space.MOMENTUM, -1.0, state)
    return p_moment(state, -1, mode=mode)


# Physically named wrappers (proportionality constants deliberately omitted).

def dirac_slater_exchange_moment(state: HydrogenicState) -> MomentResult:
    return mean_momentum(state)


def kinetic_energy_moment(state: HydrogenicState) -> MomentResult:
    return p_moment(state, 2)


def interelectronic_repulsion_moment(state: HydrogenicState) -> MomentResult:
    return p_moment(state, 3)


def breit_pauli_moment(state: HydrogenicState) -> MomentResult:
    return p_moment(state, 4)


def appendix_constants(state: HydrogenicState) -> tuple[ExactValue, ExactValue]:
    """Exact prefactors multiplying the Gegenbauer integrals that reproduce
    <p> and <p^{-1}> respectively."""
    eta, L, k = state.eta, state.L, state.k
    base = (
        ExactValue(Fraction(2) ** int(2 * L + 2))
        * gamma_exact(L + 1) ** 2
        * ExactValue(Fraction(math.factorial(k), 2), Fraction(-1))
        / gamma_exact(eta + L + 1)
    )
    k_mean = ExactValue(state.Z_exact) * base
    k_inv = ExactValue(eta ** 2 / state.Z_exact) * base
    return k_mean, k_inv


def appendix_integral_circular_exact(state: HydrogenicState) -> ExactValue:
    """Exact value of the mean-momentum Gegenbauer integral for circular
    states (k = 0): I = 2^{2 nu + 1} Gamma(nu+1)^2 / Gamma(2 nu + 2)."""
    if not state.is_circular:
        raise NotCircular(f"state has l={state.l}, n={state.n}")
    nu = state.nu
    return (
        ExactValue(Fraction(2) ** int(2 * nu + 1))
        * gamma_exact(nu + 1) ** 2
        / gamma_exact(2 * nu + 2)
    )


def appendix_integrals(state: HydrogenicState) -> tuple[float, float]:
    """The Gegenbauer-squared integrals I (mean momentum) and J (inverse
    momentum), evaluated by Gauss-Jacobi quadrature."""
    from . import oracle

    nu = float(state.nu)
    k = state.k
    nodes = max(k + 2, 8)
    x_i, w_i = oracle.gauss_jacobi(nodes, nu, nu)
    I = math.fsum(w * oracle.gegenbauer(k, float(state.nu), x) ** 2 for x, w in zip(x_i, w_i))
    x_j, w_j = oracle.gauss_jacobi(nodes, nu - 1, nu + 1)
    J = math.fsum(w * oracle.gegenbauer(k, float(state.nu), x) ** 2 for x, w in zip(x_j, w_j))
    return I, J
