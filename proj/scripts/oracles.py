#!/usr/bin/env python3
"""Reference values for the C++ tests, written to tests/unit/oracle_values.hpp.

Everything here is computed independently of the library: a plain
Eratosthenes sieve with math.fsum for the prime sums, mpmath at 40 digits for
the special functions, zeta zeros from mpmath.zetazero, and mpmath.quad for
the density integrals.
"""
import math
import sys
from pathlib import Path

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def prime_powers(limit):
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    out = []
    for p in np.nonzero(is_prime)[0].tolist():
        q = p
        while q <= limit:
            out.append((q, math.log(p)))
            q *= p
    out.sort()
    return out


def weighted_sum(pp, x):
    return math.fsum(lp / math.sqrt(n) for n, lp in pp if n <= x)


def lemma_and_growth(pp):
    checkpoints = [10.0**k for k in range(2, 8)]
    ratios = []
    for x in checkpoints:
        e = weighted_sum(pp, x) - 2 * math.sqrt(x)
        ratios.append(abs(e) / math.log(x) ** 3)
    sup_1e3 = max(r for x, r in zip(checkpoints, ratios) if x >= 1e3)

    # |alpha(x)| / x^3 on [1, log 1e7]. alpha decreases between atoms, so the
    # extremes sit at the atoms (right values) and just before them (left limits).
    ns = np.array([n for n, _ in pp], dtype=np.float64)
    w = np.array([lp for _, lp in pp]) / np.sqrt(ns)
    s_right = np.cumsum(w)
    s_left = s_right - w
    xs = np.log(ns)
    xmax = math.log(1e7)
    grid = [(1.0, float(s_right[ns <= math.e][-1]))]
    for x, sl, sr in zip(xs, s_left, s_right):
        if 1.0 <= x <= xmax:
            grid.append((x, sl))
            grid.append((x, sr))
    grid.append((xmax, float(s_right[-1])))
    growth = max(abs(s - 4 * math.sinh(x / 2)) / x**3 for x, s in grid)
    return ratios, sup_1e3, growth


def ghat_pair(x0, beta):
    return lambda x: mp.exp(-mp.pi * (x - x0) ** 2 / beta) + mp.exp(-mp.pi * (x + x0) ** 2 / beta)


def g_pair(x0, beta):
    return lambda t: 2 * mp.sqrt(beta) * mp.exp(-mp.pi * beta * t * t) * mp.cos(2 * mp.pi * x0 * t)


def ghat_dgauss(a):
    return lambda x: mp.sqrt(a) * mp.exp(-mp.pi * a * x * x)


def g_dgauss(a):
    return lambda t: mp.exp(-mp.pi * t * t / a)


def theta_prime(t):
    return mp.re(mp.digamma(mp.mpf(1) / 4 + 1j * t / 2)) / 2 - mp.log(mp.pi) / 2


def prime_side(ghat, pp):
    atoms = mp.fsum(-lp / mp.sqrt(n) * 2 * ghat(mp.log(n)) for n, lp in pp if n <= 1000)
    dens = 2 * mp.quad(lambda x: ghat(x) * 2 * mp.cosh(x / 2), [0, 1, 2, 3, 5, 10])
    return atoms + dens


def zero_side(g, gammas):
    atoms = mp.fsum(2 * g(gm / (2 * mp.pi)) for gm in gammas)
    dens = -2 * mp.quad(lambda t: g(t) * 2 * theta_prime(2 * mp.pi * t), [0, 1, 2, 4, 8, 12])
    return atoms + dens


def probe_value(s):
    s = mp.mpmathify(s)
    total = mp.mpf(0)
    for k in range(200):
        z = mp.mpf(1) / 2 + (2 * k + 1) * s
        term = (-1) ** k * mp.zeta(z, derivative=1) / mp.zeta(z)
        total += term
        if abs(term) < mp.mpf(10) ** -30:
            break
    return total + mp.pi / (2 * s * mp.cos(mp.pi / (4 * s)))


def cpp(name, value):
    return f"inline constexpr double {name} = {mp.nstr(value, 17, strip_zeros=False)};\n"


def main(out_path):
    pp = prime_powers(10_000_000)
    pp6 = [(n, lp) for n, lp in pp if n <= 1_000_000]
    ratios, sup_1e3, growth = lemma_and_growth(pp)

    gammas = [mp.im(mp.zetazero(k)) for k in range(1, 41)]
    x0, beta = mp.log(2), mp.mpf(1) / 4

    lines = ["#pragma once\n", "\n", "#include <cstddef>\n", "\n", "// Generated by scripts/oracles.py; do not edit by hand.\n",
             "namespace oracle {\n"]
    lines.append(cpp("kWeightedSum1e6", weighted_sum(pp6, 1e6)))
    lines.append(cpp("kPsi1e6", math.fsum(lp for _, lp in pp6)))
    lines.append(f"inline constexpr std::size_t kPrimePowers1e6 = {len(pp6)};\n")
    lines.append(f"inline constexpr std::size_t kPrimePowers1e7 = {len(pp)};\n")
    for k, r in zip(range(2, 8), ratios):
        lines.append(cpp(f"kLemmaRatio1e{k}", r))
    lines.append(cpp("kLemmaRatioSup", sup_1e3))
    lines.append(cpp("kAlphaGrowth", growth))
    lines.append(cpp("kDigamma1", mp.digamma(1)))
    lines.append(cpp("kTheta20", mp.siegeltheta(20)))
    lines.append(cpp("kThetaPrime1000", theta_prime(1000)))
    lines.append(cpp("kZetaHalf", mp.zeta(0.5)))
    lines.append(cpp("kZeta2", mp.zeta(2)))
    lines.append(cpp("kZeta1p3iRe", mp.re(mp.zeta(mp.mpc(1, 3)))))
    lines.append(cpp("kZeta1p3iIm", mp.im(mp.zeta(mp.mpc(1, 3)))))
    lines.append(cpp("kZetaPrime2", mp.zeta(2, derivative=1)))
    lines.append(cpp("kLogDeriv3", mp.zeta(3, derivative=1) / mp.zeta(3)))
    lines.append(cpp("kAbsZeta30", abs(mp.zeta(mp.mpc(0.5, 30)))))
    lines.append(cpp("kZ30", mp.siegelz(30)))
    lines.append(cpp("kZ200", mp.siegelz(200)))
    lines.append(cpp("kZ1000", mp.siegelz(1000)))
    lines.append(cpp("kPrimeSidePair", prime_side(ghat_pair(x0, beta), pp6)))
    lines.append(cpp("kZeroSidePair", zero_side(g_pair(x0, beta), gammas)))
    lines.append(cpp("kPrimeSideDgauss4", prime_side(ghat_dgauss(4), pp6)))
    lines.append(cpp("kZeroSideDgauss4", zero_side(g_dgauss(4), gammas)))
    lines.append(cpp("kProbe1", mp.re(probe_value(1))))
    lines.append(cpp("kProbe2", mp.re(probe_value(2))))
    p = probe_value(mp.mpc(1, 0.5))
    lines.append(cpp("kProbe1p05iRe", mp.re(p)))
    lines.append(cpp("kProbe1p05iIm", mp.im(p)))
    lines.append(cpp("kGamma1", gammas[0]))
    lines.append("}  // namespace oracle\n")
    Path(out_path).write_text("".join(lines), encoding="utf-8")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/unit/oracle_values.hpp")
