"""Regenerates tests/oracle_values.hpp with mpmath at 40 digits."""
from mpmath import mp, mpc, mpf, exp, pi, jtheta, sqrt, ellipk, hyp2f1, diff, polyroots, nsum, inf, gamma

mp.dps = 40
I = mpc(0, 1)


def q(t):
    return exp(I * pi * t)


def t2(t):
    return jtheta(2, 0, q(t))


def t3(t):
    return jtheta(3, 0, q(t))


def t4(t):
    return jtheta(4, 0, q(t))


def eta(t):
    qq = exp(2 * I * pi * t)
    s = mpc(0)
    for n in range(-60, 61):
        s += (-1) ** n * qq ** (mpf(n * (3 * n - 1)) / 2)
    return exp(I * pi * t / 12) * s


def eis(k, t):
    qq = exp(2 * I * pi * t)
    c = {2: -24, 4: 240, 6: -504}[k]
    return 1 + c * nsum(lambda n: n ** (k - 1) * qq ** n / (1 - qq ** n), [1, inf])


def g2(t):
    return pi ** 4 / 12 * eis(4, t)


def g3(t):
    return pi ** 6 / 216 * eis(6, t)


def J(t):
    return g2(t) ** 3 / (g2(t) ** 3 - 27 * g3(t) ** 2)


def wp(z, t):
    # half-periods (1, t)
    v = pi * z / 2
    qq = q(t)
    e1 = (pi / 2) ** 2 * (t3(t) ** 4 + t4(t) ** 4) / 3
    return e1 + (pi / 2 * t3(t) * t4(t) * jtheta(2, v, qq) / jtheta(1, v, qq)) ** 2


def X(t):
    return t4(t) / t3(t)


def chi_b(t):
    return -t4(t / 2) / t3(t / 2)


def mero(f, t):
    a, b, c = diff(f, t, 1), diff(f, t, 2), diff(f, t, 3)
    return (c / a - mpf(3) / 2 * (b / a) ** 2) / a ** 2


def c(z):
    z = mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-30, max_fixed=30), mp.nstr(z.imag, 20, min_fixed=-30, max_fixed=30))


taus = [mpc("0.1", "1.2"), mpc(1, 3) / 3 + mpc(0, 0) , mpc("-0.4", "0.7"), mpc("0.25", "0.5")]
taus[1] = mpc(mpf(1) / 3, 1)
tau_names = ["0.1, 1.2", "1.0 / 3, 1", "-0.4, 0.7", "0.25, 0.5"]

out = []
out.append("#pragma once\n// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.\n")
out.append("#include <complex>\n#include <vector>\n\nnamespace oracle {\n\nusing cplx = std::complex<double>;\n")
out.append("struct ThetaRow {\n  cplx tau, t2, t3, t4, eta, e2, g2, g3, J;\n};\n")
out.append("inline const std::vector<ThetaRow> theta_rows{")
for t, n in zip(taus, tau_names):
    out.append("    {{%s}, %s, %s, %s, %s, %s, %s, %s, %s}," % (
        n, c(t2(t)), c(t3(t)), c(t4(t)), c(eta(t)), c(eis(2, t)), c(g2(t)), c(g3(t)), c(J(t))))
out.append("};\n")

ks = [mpc("0.3", "0.1"), mpc("0.9", "-0.2"), mpc("0.05", "0.01"), mpc("1.3", "0.4")]
out.append("struct KRow {\n  cplx k, K, Kp;\n};\n")
out.append("inline const std::vector<KRow> k_rows{")
for k in ks:
    out.append("    {%s, %s, %s}," % (c(k), c(ellipk(k ** 2)), c(ellipk(1 - k ** 2))))
out.append("};\n")

zs = [mpc("0.3", "0.2"), mpc("-0.8", "0.1")]
hz = [hyp2f1(0.5, 0.5, 1, z) for z in zs]
out.append("struct HypRow {\n  cplx z, f;\n};\n")
out.append("inline const std::vector<HypRow> hyp_rows{")
for z, f in zip(zs, hz):
    out.append("    {%s, %s}," % (c(z), c(f)))
out.append("};\n")

out.append("struct WpRow {\n  cplx tau, z, p;\n};\n")
out.append("inline const std::vector<WpRow> wp_rows{")
for t, z in [(mpc("0.1", "1.2"), mpc("0.3", "0.2")), (mpc("-0.4", "0.7"), mpc("0.5", "-0.1"))]:
    out.append("    {%s, %s, %s}," % (c(t), c(z), c(wp(z, t))))
out.append("};\n")

out.append("struct ChiRow {\n  cplx tau, chi, bracket;\n};\n")
out.append("inline const std::vector<ChiRow> chi_rows{")
for t in [mpc("0.1", "1.2"), mpc("-0.3", "0.8")]:
    out.append("    {%s, %s, %s}," % (c(t), c(chi_b(t)), c(mero(X, t))))
out.append("};\n")

a = mpc("0.3", "0.2")
roots = polyroots([1, 0, 0, 0, -1, a], maxsteps=200, extraprec=60)
out.append("inline const cplx quintic_a" + c(a) + ";")
out.append("inline const std::vector<cplx> quintic_roots{")
for r in sorted(roots, key=lambda r: (float(r.real), float(r.imag))):
    out.append("    %s," % c(r))
out.append("};\n")

lem = gamma(mpf(1) / 4) ** 2 / (4 * sqrt(pi))  # 2^{1/4}(pi/2) t4^2(2i)
out.append("inline constexpr double lemniscate = %s;" % mp.nstr(lem, 22))
out.append("inline constexpr double g2_at_i = %s;" % mp.nstr(g2(I).real, 22))
out.append("\n}  // namespace oracle")
open(__file__.replace("oracles/generate.py", "oracle_values.hpp"), "w").write("\n".join(out) + "\n")
