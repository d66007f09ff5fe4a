"""Closed-form analytics of the Brownian ratchet built on Airy functions.

Everything here is expressed at the reference binding rate 1/2, where the
gap process between jumps is reflected Brownian motion killed at rate equal
to half its height.  The Green function of that killed diffusion (with
respect to the speed measure 2dy) is

    G(x, y) = pi * psi(min(x, y)) * phi(max(x, y)),
    phi = Ai,  psi = Bi + sqrt(3) * Ai,

where psi is the increasing solution of u'' = x*u with psi'(0) = 0 and pi is
the inverse Wronskian.  From it come the killing-position density y*G(x, y),
the expected pre-jump position x + 2*pi*Ai(x)*Bi(0), the expected waiting
time 2*pi*(Gi(x) + Ai(x)/sqrt(3)), and the invariant gap density 3*Ai.

Results for a general binding rate g follow from the exact rescaling of the
ratchet: lengths scale by (2g)^(-1/3) and times by (2g)^(-2/3) relative to
the reference rate.  ``length_scale`` / ``time_scale`` expose those factors;
``asymptotic_constants`` applies them to the speed.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import airy as _af
from .quadrature import quad

#: binding rate at which the closed forms in this module are stated
REFERENCE_GAMMA = 0.5

SQRT3 = math.sqrt(3.0)

#: mean of the invariant gap density 3*Ai, equal to -3*Ai'(0)
INVARIANT_MEAN_GAP = -3.0 * _af.AIP_ZERO

#: mean waiting time between jumps under the invariant gap law, 6*Ai(0)
INVARIANT_MEAN_WAIT = 6.0 * _af.AI_ZERO

#: exponential envelope rate -Ai'(0)/Ai(0) used by the invariant sampler
INVARIANT_ENVELOPE_RATE = -_af.AIP_ZERO / _af.AI_ZERO


@dataclass(frozen=True)
class AiryBundle:
    """Ai, Bi and derivatives at one argument."""

    ai: float
    ai_prime: float
    bi: float
    bi_prime: float

    @property
    def wronskian(self):
        return self.bi_prime * self.ai - self.ai_prime * self.bi


@dataclass(frozen=True)
class GreenEval:
    x: float
    y: float
    value: float


@dataclass(frozen=True)
class AsymptoticConstants:
    """Speed constant and the conjectured CLT standard deviation."""

    speed: float
    sigma_conjectured: float


def _check_arg(x, name="x"):
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise ValueError(f"{name} must be a finite real, got {x!r}")
    if x < 0.0:
        raise ValueError(f"{name} must be non-negative, got {x!r}")
    return float(x)


def airy(x):
    """Evaluate Ai, Ai', Bi, Bi' at x >= 0."""
    x = _check_arg(x)
    ai, aip, bi, bip = _af.airy_values(x)
    return AiryBundle(ai=ai, ai_prime=aip, bi=bi, bi_prime=bip)


def ai_tail_integral(x):
    """int_x^inf Ai(u) du, via 1/3 minus quadrature for x <= 10, else the tail expansion."""
    x = _check_arg(x)
    if x <= 10.0:
        if x == 0.0:
            return 1.0 / 3.0
        head = quad(lambda u: _af.airy_values_vec(u)[0], 0.0, x, tol=1e-13)
        return 1.0 / 3.0 - head
    # int_x^inf Ai ~ exp(-zeta) / (2 sqrt(pi) x^(3/4)) * (1 - 41/(72 zeta) + ...)
    zeta = 2.0 / 3.0 * x ** 1.5
    corr = 1.0 - (41.0 / 72.0) / zeta + 0.8913 / (zeta * zeta)
    return math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * x ** 0.75) * corr


def scorer_gi(x):
    """Scorer function Gi(x) = Ai(x) int_0^x Bi + Bi(x) int_x^inf Ai.

    Solves u'' - x*u = -1/pi.  Both summands are evaluated from propagated
    antiderivative tables up to the table limit; beyond it the product would
    pair an overflowing Bi with a vanishing tail, so the inhomogeneous
    asymptotic series (1/pi) * sum (3k)!/(k! 3^k) x^(-3k-1) is used instead.
    """
    x = _check_arg(x)
    if x <= _af.NODE_XMAX:
        ai, _, bi, _ = _af.airy_values(x)
        return ai * _af.int_bi_zero_to(x) + bi * _af.int_ai_to_inf(x)
    s = 0.0
    coef = 1.0
    p = 1.0 / x
    xm3 = x ** -3
    for k in range(16):
        term = coef * p
        s += term
        if term < 1e-17 * s:
            break
        coef *= (3 * k + 1) * (3 * k + 2)
        p *= xm3
    return s / math.pi


def green(x, y):
    """Green function of the killed gap diffusion w.r.t. its speed measure."""
    x = _check_arg(x)
    y = _check_arg(y, "y")
    lo, hi = (x, y) if x <= y else (y, x)
    ai_lo, _, bi_lo, _ = _af.airy_values(lo)
    ai_hi = _af.airy_values(hi)[0]
    psi_lo = bi_lo + SQRT3 * ai_lo
    return GreenEval(x=x, y=y, value=math.pi * psi_lo * ai_hi)


def killing_position_density(x, y):
    """Density (in y) of the pre-jump position for the gap started at x."""
    return _check_arg(y, "y") * green(x, y).value


def killing_position_cdf(x, z):
    """Closed-form CDF of the killing position: integrates y*G(x, y) exactly.

    Uses int y*Ai = Ai' and int y*Bi = Bi' (both are u'' for u'' = y*u), so

        F_x(z) = pi * Ai(x) * psi'(z)                       for z <= x,
        F_x(z) = F_x(x) + pi * psi(x) * (Ai'(z) - Ai'(x))   for z > x,

    with psi'(0) = 0 making the total mass exactly pi * W(psi, Ai) = 1.
    """
    x = _check_arg(x)
    z = _check_arg(z, "z")
    ai_x, aip_x, bi_x, bip_x = _af.airy_values(x)
    if z <= x:
        ai_z, aip_z, bi_z, bip_z = _af.airy_values(z)
        return math.pi * ai_x * (bip_z + SQRT3 * aip_z)
    at_x = math.pi * ai_x * (bip_x + SQRT3 * aip_x)
    aip_z = _af.airy_values(z)[1]
    return at_x + math.pi * (bi_x + SQRT3 * ai_x) * (aip_z - aip_x)


def expected_jump_position(x):
    """Mean pre-jump position of the gap started at x: x + 2*pi*Ai(x)*Bi(0)."""
    x = _check_arg(x)
    return x + 2.0 * math.pi * _af.airy_values(x)[0] * _af.BI_ZERO


def expected_jump_time(x):
    """Mean waiting time to the next boundary jump from gap x."""
    x = _check_arg(x)
    return 2.0 * math.pi * (scorer_gi(x) + _af.airy_values(x)[0] / SQRT3)


def invariant_density(z):
    """Stationary density 3*Ai(z) of the gap at jump times."""
    z = _check_arg(z, "z")
    return 3.0 * _af.airy_values(z)[0]


def invariant_cdf(z):
    """CDF of the invariant gap density, 1 - 3*int_z^inf Ai."""
    z = _check_arg(z, "z")
    if z <= _af.NODE_XMAX:
        return 1.0 - 3.0 * _af.int_ai_to_inf(z)
    return 1.0 - 3.0 * ai_tail_integral(z)


def length_scale(gamma):
    """Length multiplier mapping reference-rate quantities to rate gamma."""
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    return (2.0 * gamma) ** (-1.0 / 3.0)


def time_scale(gamma):
    """Time multiplier mapping reference-rate quantities to rate gamma."""
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    return (2.0 * gamma) ** (-2.0 / 3.0)


def asymptotic_constants(gamma):
    """Long-run speed and the conjectured gamma-free CLT standard deviation.

    speed = Gamma(2/3)/Gamma(1/3) * (3*gamma/4)^(1/3); the CLT sigma is the
    reflected-Brownian value sqrt(1 - 2/pi), independent of gamma.
    """
    if not (isinstance(gamma, (int, float)) and math.isfinite(gamma)) or gamma <= 0:
        raise ValueError(f"gamma must be a positive finite real, got {gamma!r}")
    speed = (
        math.gamma(2.0 / 3.0)
        / math.gamma(1.0 / 3.0)
        * (0.75 * gamma) ** (1.0 / 3.0)
    )
    return AsymptoticConstants(speed=speed, sigma_conjectured=math.sqrt(1.0 - 2.0 / math.pi))


def gamma_reflection_check():
    """Residual of Euler's reflection identity Gamma(1/3)Gamma(2/3) = pi/sin(pi/3)."""
    lhs = math.gamma(1.0 / 3.0) * math.gamma(2.0 / 3.0)
    rhs = math.pi / math.sin(math.pi / 3.0)
    return abs(lhs - rhs)


def _ai_vec(y):
    return _af.airy_values_vec(y)[0]


def killing_density_normalization(x, tol=1e-9, cap=40.0):
    """Quadrature of the killing-position density over [0, inf); should be 1.

    Independent of the closed-form CDF: integrates y*G(x, y) directly with
    adaptive panels, truncating at ``cap`` where Ai has decayed below 1e-70.
    """
    x = _check_arg(x)

    def dens(y):
        out = np.empty_like(y)
        for i, yi in enumerate(np.atleast_1d(y)):
            out[i] = killing_position_density(x, float(yi))
        return out

    hi = min(cap, _af.NODE_XMAX)
    return quad(dens, 0.0, hi, tol=tol)
