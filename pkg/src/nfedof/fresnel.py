"""Fresnel integrals C(x) and S(x).

Convention: C(x) = integral of cos(pi t^2 / 2) from 0 to x, S(x) likewise
with sin. Hand-rolled so the library has no special-function dependency:
Maclaurin series near the origin, Chebyshev fits of the auxiliary functions
in the midrange, and the alternating asymptotic series far out. Absolute
error stays below 1e-12 on the real line; the test suite checks against an
adaptive-quadrature oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.chebyshev import chebval

_SERIES_EDGE = 1.6
_ASYMPTOTIC_EDGE = 6.0

# Auxiliary decomposition for x > 0:
#   C(x) = 1/2 + f(x) sin(pi x^2 / 2) - g(x) cos(pi x^2 / 2)
#   S(x) = 1/2 - f(x) cos(pi x^2 / 2) - g(x) sin(pi x^2 / 2)
# f and g are smooth and slowly varying for x above ~1, unlike C and S,
# which oscillate forever. The fits below are Chebyshev series in v = 1/x
# on 1/6 <= v <= 1/1.6, generated offline at 60-digit precision; the
# assembled C/S error on that interval is below 6e-15.
_V_LO = 1.0 / _ASYMPTOTIC_EDGE
_V_HI = 1.0 / _SERIES_EDGE

_F_CHEB = np.array([
    0.12387530598635449,
    0.06981156252698056,
    -0.00125423410230123,
    -0.00023873500305845286,
    -4.5370388982860365e-06,
    4.62115709330386e-06,
    2.6018510504750654e-08,
    -1.2337532343707108e-07,
    6.993966200287561e-09,
    3.33917286846912e-09,
    -5.44977196765217e-10,
    -6.559007068936378e-11,
    2.9636792265484073e-11,
    -1.3497169285608046e-12,
    -1.0837384360536914e-12,
    2.3713960111054557e-13,
    9.300138368478862e-15,
    -1.3206411865268272e-14,
])

_G_CHEB = np.array([
    0.008508005496900164,
    0.010328440155171894,
    0.0023917472056584352,
    6.587685381802873e-05,
    -3.775907792542395e-05,
    -1.449951541518846e-07,
    7.166721119044903e-07,
    -1.5557584229340228e-08,
    -2.0294210644081584e-08,
    2.041911038873719e-09,
    5.178294391727229e-10,
    -1.3280246961473333e-10,
    -3.939317126062985e-12,
    6.043907662408671e-12,
    -7.369101017313621e-13,
    -1.5316978416295254e-13,
    6.108915959324707e-14,
])

# Double-factorial coefficients of the asymptotic expansions
#   f(x) ~ (1/(pi x)) sum_m (-1)^m (4m-1)!! u^(2m),   u = 1/(pi x^2)
#   g(x) ~ (1/(pi x)) sum_m (-1)^m (4m+1)!! u^(2m+1)
_F_ASYMP = np.array([1.0, 3.0, 105.0, 10395.0, 2027025.0, 654729075.0])
_G_ASYMP = np.array([1.0, 15.0, 945.0, 135135.0, 34459425.0, 13749310575.0])


@dataclass(frozen=True)
class FresnelPair:
    """C and S evaluated at the same argument(s)."""

    c_value: float | np.ndarray
    s_value: float | np.ndarray


def _series_cs(x):
    # Maclaurin series; for |x| <= 1.6 it converges well before 26 terms.
    # C term_k = (-1)^k (pi/2)^(2k) x^(4k+1) / (2k)!, summed with weight
    # 1/(4k+1); S likewise with (pi/2)^(2k+1), (2k+1)! and 1/(4k+3).
    h = -((np.pi / 2) ** 2) * x**4
    term_c = np.array(x, dtype=float, copy=True)
    term_s = (np.pi / 2) * np.asarray(x, dtype=float) ** 3
    c_sum = term_c.copy()
    s_sum = term_s / 3.0
    for k in range(1, 30):
        term_c = term_c * h / ((2 * k - 1) * (2 * k))
        term_s = term_s * h / ((2 * k) * (2 * k + 1))
        c_sum += term_c / (4 * k + 1)
        s_sum += term_s / (4 * k + 3)
        if max(np.max(np.abs(term_c)), np.max(np.abs(term_s))) < 1e-18:
            break
    return c_sum, s_sum


def _aux_fg(x):
    # f, g for x > _SERIES_EDGE, piecewise Chebyshev / asymptotic.
    f = np.empty_like(x)
    g = np.empty_like(x)
    mid = x <= _ASYMPTOTIC_EDGE
    if np.any(mid):
        v = 1.0 / x[mid]
        t = (2.0 * v - (_V_LO + _V_HI)) / (_V_HI - _V_LO)
        f[mid] = chebval(t, _F_CHEB)
        g[mid] = chebval(t, _G_CHEB)
    far = ~mid
    if np.any(far):
        xf = x[far]
        u = 1.0 / (np.pi * xf**2)
        u2 = u * u
        pf = np.zeros_like(xf)
        pg = np.zeros_like(xf)
        for m in range(len(_F_ASYMP) - 1, -1, -1):
            sign = -1.0 if m % 2 else 1.0
            pf = pf * u2 + sign * _F_ASYMP[m]
            pg = pg * u2 + sign * _G_ASYMP[m]
        f[far] = pf / (np.pi * xf)
        g[far] = pg * u / (np.pi * xf)
    return f, g


def fresnel_cs(x):
    """Evaluate the Fresnel integrals C(x) and S(x).

    Parameters
    ----------
    x : float or array_like
        Real argument(s). Both integrals are odd in x.

    Returns
    -------
    FresnelPair
        c_value and s_value with the same shape as the input.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    ax = np.atleast_1d(arr)
    sign = np.sign(ax)
    ax = np.abs(ax)
    c = np.empty_like(ax)
    s = np.empty_like(ax)

    near = ax <= _SERIES_EDGE
    if np.any(near):
        c[near], s[near] = _series_cs(ax[near])
    outer = ~near
    if np.any(outer):
        xo = ax[outer]
        f, g = _aux_fg(xo)
        arg = 0.5 * np.pi * xo**2
        sn, cs = np.sin(arg), np.cos(arg)
        c[outer] = 0.5 + f * sn - g * cs
        s[outer] = 0.5 - f * cs - g * sn

    c *= sign
    s *= sign
    if scalar:
        return FresnelPair(float(c[0]), float(s[0]))
    return FresnelPair(c.reshape(arr.shape), s.reshape(arr.shape))
