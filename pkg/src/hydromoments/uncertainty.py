"""Heisenberg-like uncertainty inequality checkers.

Each checker evaluates one position-momentum bound with the library's own
moment routines (and the quadrature oracle for entropic moments) and returns
a structured report.  Rigorous bounds carry satisfied flags meant for hard
assertions; the Daubechies-Thakkar family is semiclassical and its reports
are findings, not guarantees.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import NonpositiveParameters, NotSWave, OrderOutOfDomain
from .momom import p_moment
from .posmom import r_moment
from .specfun import log_gamma
from .states import HydrogenicState, MomentOrder, Space, check_order


class InequalityName(enum.Enum):
    HEISENBERG_GENERAL = "HeisenbergGeneral"
    HEISENBERG_D2_OVER_4 = "HeisenbergD2over4"
    SPHERICAL_L = "SphericalL"
    HEISENBERG_3D = "Heisenberg3D"
    HEISENBERG_3D_AB = "Heisenberg3Dab"
    PITT_BECKNER = "PittBeckner"
    KINETIC_BOUND = "KineticBound"
    DAUBECHIES_THAKKAR = "DaubechiesThakkar"
    DAUBECHIES_THAKKAR_3D = "DaubechiesThakkar3D"
    FERMION_PRODUCT = "FermionProduct"
    FERMION_PRODUCT_3D = "FermionProduct3D"


@dataclass(frozen=True)
class InequalityReport:
    name: InequalityName
    lhs: float
    rhs: float
    ratio: float
    satisfied: bool
    params: dict
    rigorous: bool = True
    siblings: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "name": self.name.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ratio": self.ratio,
            "satisfied": self.satisfied,
            "rigorous": self.rigorous,
            "params": {k: str(v) for k, v in self.params.items()},
            "siblings": [s.to_dict() for s in self.siblings],
        }


def _report(name, lhs, rhs, params, orientation_ge=True, rigorous=True, siblings=()):
    satisfied = lhs >= rhs if orientation_ge else lhs <= rhs
    return InequalityReport(
        name=name, lhs=lhs, rhs=rhs, ratio=lhs / rhs, satisfied=satisfied,
        params=params, rigorous=rigorous, siblings=tuple(siblings),
    )


def _require_orders(state: HydrogenicState, *orders: MomentOrder):
    for o in orders:
        if not check_order(state, o):
            raise OrderOutOfDomain(
                f"order {o.alpha} ({o.space.value}) out of domain for the state"
            )


def _dim_factor(D: int, c: float) -> float:
    """One bracket of the general Heisenberg product: the c-dependent
    dimensional constant e D^{2/c} Gamma(1+D/2)^{2/D} / ((ce)^{2/c}
    Gamma(1+D/c)^{2/D})."""
    return (
        math.e
        * D ** (2 / c)
        * math.exp((2 / D) * log_gamma(1 + D / 2))
        / ((c * math.e) ** (2 / c) * math.exp((2 / D) * log_gamma(1 + D / c)))
    )


def heisenberg_general(state: HydrogenicState, a: float, b: float) -> InequalityReport:
    """<r^a>^{2/a} <p^b>^{2/b} against the dimensional product bound, with
    the classic D^2/4, (l+D/2)^2 and 3D variants attached as siblings."""
    if a <= 0 or b <= 0:
        raise NonpositiveParameters("both orders must be positive")
    _require_orders(
        state, MomentOrder(a, Space.POSITION), MomentOrder(b, Space.MOMENTUM)
    )
    D = state.D
    ra = r_moment(state, a, mode="float").as_float()
    pb = p_moment(state, b, mode="float").as_float()
    lhs = ra ** (2 / a) * pb ** (2 / b)
    rhs = _dim_factor(D, a) * _dim_factor(D, b)
    params = {"state": state, "a": a, "b": b}

    r2 = r_moment(state, 2, mode="float").as_float()
    p2 = p_moment(state, 2, mode="float").as_float()
    sib = [
        _report(InequalityName.HEISENBERG_D2_OVER_4, r2 * p2, D * D / 4, params),
        _report(
            InequalityName.SPHERICAL_L, r2 * p2, (state.l + D / 2) ** 2, params
        ),
    ]
    if D == 3:
        rhs3 = (
            (math.pi * a * b / (16 * math.exp(log_gamma(3 / a) + log_gamma(3 / b))))
            ** (1 / 3)
            * (3 / a) ** (1 / a)
            * (3 / b) ** (1 / b)
            * math.e ** (1 - 1 / a - 1 / b)
        )
        sib.append(
            _report(
                InequalityName.HEISENBERG_3D, ra ** (1 / a) * pb ** (1 / b), rhs3, params
            )
        )
        if a == b:
            rhs3ab = (
                (27 * math.pi / (16 * a * math.exp(log_gamma(3 / a)))) ** (1 / 3)
                * (a * math.e / 3) ** (1 - 2 / a)
            ) ** a
            sib.append(
                _report(InequalityName.HEISENBERG_3D_AB, ra * pb, rhs3ab, params)
            )
    return _report(InequalityName.HEISENBERG_GENERAL, lhs, rhs, params, siblings=sib)


def pitt_beckner(state: HydrogenicState, alpha: float) -> InequalityReport:
    """<p^alpha> >= 2^alpha [Gamma((D+alpha)/4)/Gamma((D-alpha)/4)]^2
    <r^{-alpha}> for 0 <= alpha < D."""
    D = state.D
    if not 0 <= alpha < D:
        raise OrderOutOfDomain(f"need 0 <= alpha < D = {D}, got {alpha}")
    _require_orders(
        state,
        MomentOrder(alpha, Space.MOMENTUM),
        MomentOrder(-alpha, Space.POSITION),
    )
    pa = p_moment(state, alpha, mode="float").as_float()
    rma = r_moment(state, -alpha, mode="float").as_float()
    rhs = (
        2 ** alpha
        * math.exp(2 * (log_gamma((D + alpha) / 4) - log_gamma((D - alpha) / 4)))
        * rma
    )
    params = {"state": state, "alpha": alpha}
    sib = []
    if alpha == 2 and D > 2:
        rm2 = r_moment(state, -2, mode="float").as_float()
        p2 = p_moment(state, 2, mode="float").as_float()
        sib.append(
            _report(
                InequalityName.KINETIC_BOUND, p2 / 2, (D - 2) ** 2 / 8 * rm2, params
            )
        )
    return _report(InequalityName.PITT_BECKNER, pa, rhs, params, siblings=sib)


def momentum_space_constant(D: int, k: float) -> float:
    """K_D(k) = D/(k+D) (2 pi)^k Gamma(1+D/2)^{k/D} / pi^{k/2}."""
    return (
        D / (k + D)
        * (2 * math.pi) ** k
        * math.exp((k / D) * log_gamma(1 + D / 2))
        / math.pi ** (k / 2)
    )


def daubechies_thakkar(
    state: HydrogenicState, k: float, q: int = 2
) -> InequalityReport:
    """Semiclassical <p^k> vs K_D(k) q^{-k/D} W_{1+k/D}; orientation flips
    for k < 0.  D=3, q=2 emits the c_k variant as a sibling."""
    from . import oracle

    if state.l != 0:
        raise NotSWave(f"entropic moments implemented for l = 0, got l={state.l}")
    if k == 0 or not check_order(state, MomentOrder(k, Space.MOMENTUM)):
        raise OrderOutOfDomain(f"momentum order {k} invalid for the state")
    D = state.D
    pk = p_moment(state, k, mode="float").as_float()
    w = oracle.entropic_moment(state, 1 + k / D)
    rhs = momentum_space_constant(D, k) * q ** (-k / D) * w
    params = {"state": state, "k": k, "q": q}
    sib = []
    if D == 3 and q == 2:
        ck = 3 * (3 * math.pi ** 2) ** (k / 3) / (k + 3)
        sib.append(
            _report(
                InequalityName.DAUBECHIES_THAKKAR_3D, pk, ck * w, params,
                orientation_ge=k > 0, rigorous=False,
            )
        )
    return _report(
        InequalityName.DAUBECHIES_THAKKAR, pk, rhs, params,
        orientation_ge=k > 0, rigorous=False, siblings=sib,
    )


def fermion_factor(D: int, alpha: float, k: float) -> float:
    """F(D, alpha, k): the variational factor multiplying K_D(k)."""
    from .oracle import solid_angle

    if alpha <= 0 or k <= 0:
        raise NonpositiveParameters("alpha and k must be positive")
    omega = solid_angle(D).to_float()
    beta_log = log_gamma(D / alpha) + log_gamma(2 + D / k) - log_gamma(D / alpha + 2 + D / k)
    t = 1 + k / D
    return (
        t ** t
        * alpha ** (1 + 2 * k / D)
        / (omega * math.exp(beta_log)) ** (k / D)
        * (k ** k / (t * alpha + k) ** (t * alpha + k)) ** (1 / alpha)
    )


def fermion_product(
    state: HydrogenicState, alpha: float, k: float, q: int = 2, N: int = 1
) -> InequalityReport:
    """<r^alpha>^{k/alpha} <p^k> >= K_D(k) F(D,alpha,k) q^{-k/D}
    N^{1+k(1/alpha+1/D)}."""
    if N < 1 or q < 1:
        raise NonpositiveParameters("q and N must be positive integers")
    _require_orders(
        state, MomentOrder(alpha, Space.POSITION), MomentOrder(k, Space.MOMENTUM)
    )
    D = state.D
    ra = r_moment(state, alpha, mode="float").as_float()
    pk = p_moment(state, k, mode="float").as_float()
    lhs = ra ** (k / alpha) * pk
    script_f = momentum_space_constant(D, k) * fermion_factor(D, alpha, k)
    rhs = script_f * q ** (-k / D) * N ** (1 + k * (1 / alpha + 1 / D))
    params = {"state": state, "alpha": alpha, "k": k, "q": q, "N": N}
    sib = []
    if D == 3 and q == 2:
        sib.append(
            _report(
                InequalityName.FERMION_PRODUCT_3D, lhs,
                script_f * 2 ** (-k / 3) * N ** (k / alpha + (k + 3) / 3), params,
            )
        )
    return _report(InequalityName.FERMION_PRODUCT, lhs, rhs, params, siblings=sib)
