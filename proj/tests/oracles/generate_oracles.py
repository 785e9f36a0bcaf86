#!/usr/bin/env python3
"""Arbitrary-precision reference values for the zkkr test suites.

Run once with mpmath; the printed constants are frozen into
tests/oracle_values.hpp. Nothing here shares code with the C++ library.
"""

import mpmath as mp

mp.mp.dps = 40


def show(name, value):
    print(f"{name} = {mp.nstr(value, 20)}")


def section(title):
    print(f"\n# {title}")


section("log-gamma")
for z in [mp.mpc(0.5, 10), mp.mpc(0.25, 500), mp.mpc(3, 1e6), mp.mpc(-2.5, 0.3),
          mp.mpc(1e-3, -7), mp.mpc(0.25, 25),
          mp.mpc(-7.3, -40), mp.mpc(-0.2, 3), mp.mpc(-30.5, 0.01), mp.mpc(-1e-3, 1e5)]:
    lg = mp.loggamma(z)
    print(f"loggamma({z}) = {mp.nstr(lg.real, 20)} {mp.nstr(lg.imag, 20)}")

section("Riemann-Siegel theta")
for t in [10, 20, 50, 100, 1000, 10000]:
    show(f"theta({t})", mp.siegeltheta(t))

section("zeta on the critical line")
show("zeta(1/2)", mp.zeta(0.5))
for t in [10, 20, 30, 40, 50]:
    z = mp.zeta(mp.mpc(0.5, t))
    print(f"zeta(1/2+{t}i) = {mp.nstr(z.real, 20)} {mp.nstr(z.imag, 20)} |.|={mp.nstr(abs(z), 20)}")
for t in [14, 15, 18, 30, 45, 60, 75, 100, 250, 500, 1000, 5000, 10000]:
    show(f"Z({t})", mp.siegelz(t))

section("zeros")
zeros = []
n = 1
while True:
    g = mp.zetazero(n).imag
    if g > 1000:
        break
    zeros.append(g)
    n += 1
print("count <= 100:", sum(1 for g in zeros if g <= 100))
print("count <= 1000:", len(zeros))
print("first 29:")
for i in range(29):
    print(f"  {mp.nstr(zeros[i], 17)},")
gaps = [zeros[i + 1] - zeros[i] for i in range(len(zeros) - 1)]
print("min gap <= 1000:", mp.nstr(min(gaps), 8), "max gap:", mp.nstr(max(gaps), 8))

section("S(E) on the 0.5 grid over [20, 1000]")
worst = 0
E = mp.mpf(20)
idx = 0
while E <= 1000:
    while idx < len(zeros) and zeros[idx] <= E:
        idx += 1
    s = idx - 1 - mp.siegeltheta(E) / mp.pi
    worst = max(worst, abs(s))
    E += mp.mpf("0.5")
show("max |S|", worst)

section("smooth-count root estimates")
rs = lambda E: 1 + mp.siegeltheta(E) / mp.pi
polya = lambda E: mp.mpf(7) / 8 + E / (2 * mp.pi) * mp.log(E / (2 * mp.pi * mp.e))
show("rs_smooth n=1", mp.findroot(lambda E: rs(E) - 0.5, 14.5))
show("polya n=1", mp.findroot(lambda E: polya(E) - 0.5, 14.5))
show("polya n=10", mp.findroot(lambda E: polya(E) - 9.5, 50))
show("polya(100)", polya(100))
show("kkr asymptote(100)", mp.mpf(7) / 8 + 100 / (2 * mp.pi) * mp.log(100 / (2 * mp.e)))

section("monotone-domain cutoff of Im ln Gamma(1/2 + iE) ratio")
estar = mp.findroot(lambda y: mp.re(mp.digamma(mp.mpc(0.5, y))), 1.0)
show("E*", estar)
show("phase(E*)", 2 * mp.im(mp.loggamma(mp.mpc(0.5, estar))))

section("minimum of theta")
tmin = mp.findroot(lambda t: mp.diff(mp.siegeltheta, t), 6.29)
show("t_min", tmin)
show("theta(t_min)", mp.siegeltheta(tmin))

section("parabolic cylinder W(a, x) at the origin (mpmath.pcfw)")
for a in [0.5, 1, 2, 5, 10]:
    w0 = mp.pcfw(a, 0)
    dw0 = mp.diff(lambda x: mp.pcfw(a, x), 0)
    print(f"W({a},0) = {mp.nstr(w0, 20)}  W'({a},0) = {mp.nstr(dw0, 20)}")

section("Riemann-Siegel Psi(p) Taylor coefficients about p = 1/2")
mp.mp.dps = 80
psi = lambda p: mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)
coeffs = mp.taylor(psi, mp.mpf(1) / 2, 60)
for k, c in enumerate(coeffs):
    print(f"  {mp.nstr(c, 22)},  // {k}")
