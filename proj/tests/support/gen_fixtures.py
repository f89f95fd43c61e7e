#!/usr/bin/env python3
"""Regenerates fixtures.hpp: high-precision reference values for the unit tests.

Every value is computed with mpmath at 60 decimal digits and printed with 25
significant digits, well beyond binary64. Run from the repository root:

    python3 tests/support/gen_fixtures.py > tests/support/fixtures.hpp
"""

import mpmath as mp

mp.mp.dps = 60

E = mp.e
PI = mp.pi


def bump(x):
    # unnormalized 1-D bump profile exp(1/(x^2-1)) on (-1,1)
    return mp.exp(1 / (x * x - 1))


def n_moment(p):
    # integral of x^p * exp(1/(x^2-1)) over [-1,1]; zero for odd p
    if p % 2 == 1:
        return mp.mpf(0)
    return 2 * mp.quad(lambda x: x**p * bump(x), [0, mp.mpf(1) / 2, 1])


def r_moment(p):
    # integral of r^p * exp(1/(r^2-1)) over [0,1]
    return mp.quad(lambda r: r**p * bump(r), [0, mp.mpf(1) / 2, 1])


def deriv_unnorm(m, k, x):
    # k-th derivative of x^m * exp(1/(x^2-1)) at x
    return mp.diff(lambda t: t**m * bump(t), x, k)


def sphere_area(d):
    return 2 * PI ** (mp.mpf(d) / 2) / mp.gamma(mp.mpf(d) / 2)


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 25)};")


print("// Generated by gen_fixtures.py -- do not edit by hand.")
print("#pragma once")
print()
print("namespace fixtures {")
print()

N = {}
for m in range(0, 14, 2):
    N[m] = n_moment(m)
    emit(f"kNorm1d_{m}", N[m])

print()
R = {}
for p in range(1, 10):
    R[p] = r_moment(p)
    emit(f"kRadialMoment_{p}", R[p])

print()
# A_j = N_{m-j} / N_m for the bump of order m
emit("kA2_m2", N[0] / N[2])
emit("kA4_m4", N[0] / N[4])
emit("kA6_m6", N[0] / N[6])

print()
# B_m = N_{2m} / (e N_m^2)
emit("kB2", N[4] / (E * N[2] ** 2))
emit("kB4", N[8] / (E * N[4] ** 2))
emit("kB6", N[12] / (E * N[6] ** 2))

print()
# Btilde_m = -m(m-1) N_{2m-2} / (e N_m^2)
emit("kBt2", -2 * N[2] / (E * N[2] ** 2))
emit("kBt4", -12 * N[6] / (E * N[4] ** 2))
emit("kBt6", -30 * N[10] / (E * N[6] ** 2))

print()
# radial normalization and limit constants, d = 2 and 3, m = 2
for d in (2, 3):
    S = sphere_area(d)
    Nprime = S * R[2 + d - 1]
    emit(f"kNormRadial_m2_d{d}", Nprime)
    emit(f"kCm_m2_d{d}", S * R[4 + d - 1] / (E * Nprime**2))
    emit(f"kCmLinear_m2_d{d}", S * R[2 + d] / (E * Nprime**2))

print()
# derivatives of the unnormalized order-2 profile at x = 0.3
for k in range(0, 7):
    emit(f"kDerivU_m2_k{k}_x03", deriv_unnorm(2, k, mp.mpf(3) / 10))
print()
# and of the order-4 profile
for k in range(0, 5):
    emit(f"kDerivU_m4_k{k}_x03", deriv_unnorm(4, k, mp.mpf(3) / 10))

print()
print("}  // namespace fixtures")
