#!/usr/bin/env python3
"""Regenerate data/golden/golden.json and data/golden/manifest.json.

Every reference constant is produced here by oracles that are independent
of the C++ library:

  * Lambda(x) = -integral_0^x log|2 sin u| du is evaluated with mpmath's
    adaptive quadrature (singularities split off), cross-checked against
    mpmath.clsin.
  * Gamma(z) = integral_0^z log(2 sinh u) du is evaluated through the
    dilogarithm closed form z^2/2 - pi^2/12 + Li2(exp(-2z))/2 and
    cross-checked by adaptive quadrature.

Values are written with 25 significant digits; consumers read them as
binary64.
"""

import json
import mpmath as mp

mp.mp.dps = 60
pi = mp.pi

CROSS_CHECK_TOL = mp.mpf("1e-40")


def lam_quad(x):
    """Quadrature of the defining integral, reduced to [0, pi/2]."""
    x = mp.mpf(x)
    n = mp.floor(x / pi + mp.mpf(1) / 2)
    y = x - n * pi  # Lambda is pi-periodic
    sign = 1
    if y < 0:
        sign, y = -1, -y  # and odd
    return -sign * mp.quad(lambda t: mp.log(abs(2 * mp.sin(t))), [0, y])


def lam(x):
    v = lam_quad(x)
    assert abs(v - mp.clsin(2, 2 * mp.mpf(x)) / 2) < CROSS_CHECK_TOL
    return v


def theta(r):
    return mp.acos(mp.cos(2 * pi * r) - mp.mpf(1) / 2)


def phi(r):
    return mp.acos(mp.cos(2 * pi * r) + mp.mpf(1) / 2)


def vhat(r):
    th = theta(r)
    return (2 * lam(pi * r + th / 2) - 2 * lam(pi * r - th / 2)) / r


def big_v(r):
    th = theta(r)
    return lam(pi * r + th / 2) - lam(pi * r - th / 2)


def big_w(r):
    ph = phi(r)
    return big_v(r) + lam(pi * r + ph / 2) - lam(pi * r - ph / 2)


def gamma_dilog(z):
    z = mp.mpf(z)
    if z == 0:
        return mp.mpf(0)
    return z * z / 2 - pi * pi / 12 + mp.polylog(2, mp.e ** (-2 * z)) / 2


def gamma(z):
    v = gamma_dilog(z)
    assert abs(v - mp.quad(lambda t: mp.log(2 * mp.sinh(t)), [0, z])) < CROSS_CHECK_TOL
    return v


def phi_h(s):
    return mp.acosh(mp.cosh(2 * pi * s) - mp.mpf(1) / 2)


def imaginary_growth(s):
    s = mp.mpf(s)
    if 2 * pi * s <= mp.acosh(mp.mpf(3) / 2):
        return mp.mpf(0)
    ph = phi_h(s)
    return (2 * gamma(pi * s + ph / 2) - 2 * gamma(pi * s - ph / 2)) / (2 * pi * s)


ENTRIES = [
    ("lambda_pi_over_6", lam(pi / 6),
     "adaptive quadrature of -int_0^x log|2 sin u| du at x = pi/6, "
     "cross-checked against mpmath.clsin to 1e-40"),
    ("vhat_1", vhat(1),
     "growth constant at r = 1 from the Lambda quadrature oracle "
     "(equals 4*Lambda(pi/6))"),
    ("vhat_9_10", vhat(mp.mpf(9) / 10),
     "growth constant at r = 9/10 from the Lambda quadrature oracle"),
    ("vhat_5_6", vhat(mp.mpf(5) / 6),
     "growth constant at r = 5/6 (cone angle pi/3) from the Lambda "
     "quadrature oracle"),
    ("v_1", big_v(1),
     "Lambda(pi + pi/6) - Lambda(pi - pi/6) from the quadrature oracle"),
    ("delta_0_8", big_w(mp.mpf("0.8")),
     "delta gap W(0.8) from the Lambda quadrature oracle"),
    ("delta_1_2", big_w(mp.mpf("1.2")),
     "delta gap W(1.2) from the Lambda quadrature oracle"),
    ("gamma_1", gamma(1),
     "dilogarithm closed form z^2/2 - pi^2/12 + Li2(exp(-2z))/2 at z = 1, "
     "cross-checked by adaptive quadrature to 1e-40"),
    ("phi_h_1", phi_h(1),
     "arccosh(cosh(2 pi) - 1/2) at 60-digit working precision"),
    ("imaginary_growth_1", imaginary_growth(1),
     "hyperbolic growth constant at s = 1 from the Gamma dilogarithm "
     "oracle"),
    ("arccosh_3_2", mp.acosh(mp.mpf(3) / 2),
     "threshold constant arccosh(3/2) at 60-digit working precision"),
]

golden = {name: mp.nstr(value, 25) for name, value, _ in ENTRIES}
manifest = {
    "generator": "scripts/make_golden.py",
    "working_precision_decimal_digits": 60,
    "recorded_digits": 25,
    "entries": [
        {"name": name, "oracle": note} for name, _, note in ENTRIES
    ],
}

with open("data/golden/golden.json", "w") as f:
    json.dump(golden, f, indent=2, sort_keys=True)
    f.write("\n")
with open("data/golden/manifest.json", "w") as f:
    json.dump(manifest, f, indent=2)
    f.write("\n")
print("wrote data/golden/golden.json and data/golden/manifest.json")
