#!/usr/bin/env python3
"""Generate orthonormal wavelet filter tables (Daubechies and symlets).

Solves the quadrature-mirror moment/orthogonality equations by spectral
factorization of the Bernstein polynomial, at 60-digit precision, and emits
a C++ header with one coefficient per line at 17 significant digits.

Run from the repository root:  python3 tools/gen_filters.py
"""

import itertools
from mpmath import mp, mpf, mpc, binomial, sqrt, polyroots, pi, exp, arg, fabs

mp.dps = 60

N_MIN, N_MAX = 2, 20


def bernstein_roots(n):
    """Roots of P(y) = sum_{k<n} C(n-1+k, k) y^k."""
    coeffs = [binomial(n - 1 + k, k) for k in range(n)]  # ascending in y
    return polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=120)


def z_pairs_from_y(y):
    """Solve z + 1/z = 2 - 4y; return the root with |z| < 1."""
    b = 2 - 4 * y
    disc = (b * b - 4) ** mpf("0.5")
    z1 = (b + disc) / 2
    z2 = (b - disc) / 2
    return (z1, z2) if fabs(z1) < fabs(z2) else (z2, z1)


def root_groups(n):
    """Group the spectral-factor roots into flip units.

    Each unit is (inside_choice, outside_choice), where a choice is a list of
    roots to multiply into the factor Q(z).  Complex y give conjugate pairs,
    real y a single real root.
    """
    ys = bernstein_roots(n)
    used = [False] * len(ys)
    groups = []
    for i, y in enumerate(ys):
        if used[i]:
            continue
        used[i] = True
        if fabs(y.imag) < mpf("1e-40"):
            zin, zout = z_pairs_from_y(y.real)
            groups.append(([zin], [zout]))
        else:
            for j in range(i + 1, len(ys)):
                if not used[j] and fabs(ys[j] - y.conjugate()) < mpf("1e-30"):
                    used[j] = True
                    break
            zin, zout = z_pairs_from_y(y)
            groups.append(([zin, zin.conjugate()], [zout, zout.conjugate()]))
    return groups


def poly_from_roots(roots):
    coeffs = [mpc(1)]
    for r in roots:
        nxt = [mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] -= c * r
        coeffs = nxt
    return coeffs


def filter_from_selection(n, selection):
    """Build h from (1+z)^n times the selected spectral-factor roots."""
    roots = [r for grp in selection for r in grp]
    q = poly_from_roots(roots)
    h = [mpc(1)]
    for _ in range(n):  # multiply by (1 + z)
        nxt = [mpc(0)] * (len(h) + 1)
        for i, c in enumerate(h):
            nxt[i] += c
            nxt[i + 1] += c
        h = nxt
    out = [mpc(0)] * (len(h) + len(q) - 1)
    for i, a in enumerate(h):
        for j, b in enumerate(q):
            out[i + j] += a * b
    real = [c.real for c in out]
    s = sum(real)
    scale = sqrt(2) / s
    return [c * scale for c in real]


def phase_nonlinearity(h):
    """L2 deviation of the transfer-function phase from linear on (0, pi)."""
    n_samples = 256
    phases = []
    prev = mpf(0)
    offset = mpf(0)
    for idx in range(1, n_samples):
        w = pi * idx / n_samples
        m = sum(hk * exp(-1j * k * w) for k, hk in enumerate(h))
        ph = arg(m) + offset
        while ph - prev > pi:
            ph -= 2 * pi
            offset -= 2 * pi
        while ph - prev < -pi:
            ph += 2 * pi
            offset += 2 * pi
        prev = ph
        phases.append((w, ph))
    slope = phases[-1][1] / phases[-1][0]
    return sum((ph - slope * w) ** 2 for w, ph in phases)


def check(h, n):
    tol = mpf("1e-30")
    assert fabs(sum(h) - sqrt(2)) < tol, "lowpass sum"
    for m in range(1, n):
        dot = sum(h[k] * h[k + 2 * m] for k in range(len(h) - 2 * m))
        assert fabs(dot) < tol, f"shift orthogonality m={m}"
    dot0 = sum(hk * hk for hk in h)
    assert fabs(dot0 - 1) < tol, "unit norm"
    g = [(-1) ** k * h[len(h) - 1 - k] for k in range(len(h))]
    for i in range(n):
        mom = sum((mpf(k) ** i if i else mpf(1)) * g[k] for k in range(len(g)))
        assert fabs(mom) < mpf("1e-25"), f"vanishing moment {i}"


def daubechies(n):
    groups = root_groups(n)
    h = filter_from_selection(n, [grp[0] for grp in groups])
    check(h, n)
    return h


def symlet(n):
    groups = root_groups(n)
    best = None
    for bits in itertools.product([0, 1], repeat=len(groups)):
        sel = [grp[b] for grp, b in zip(groups, bits)]
        h = filter_from_selection(n, sel)
        score = phase_nonlinearity(h)
        if best is None or score < best[0]:
            best = (score, h)
    h = best[1]
    check(h, n)
    # canonical orientation: energy centroid in the right half, as published
    half = len(h) // 2
    if sum(c * c for c in h[:half]) > sum(c * c for c in h[half:]):
        h = list(reversed(h))
    check(h, n)
    return h


def fmt(x):
    return mp.nstr(x, 17, strip_zeros=False)


def emit(out, name, h):
    out.append(f"inline constexpr double {name}[] = {{")
    for c in h:
        out.append(f"    {fmt(c)},")
    out.append("};")
    out.append("")


def main():
    out = [
        "#pragma once",
        "",
        "// Orthonormal wavelet lowpass filters, one coefficient per line at 17",
        "// significant digits.  Generated by tools/gen_filters.py (spectral",
        "// factorization at 60-digit precision); do not edit by hand.",
        "",
        "namespace ssband::tables {",
        "",
        "inline constexpr double kHaar[] = {",
        f"    {fmt(1 / sqrt(2))},",
        f"    {fmt(1 / sqrt(2))},",
        "};",
        "",
    ]
    db_names, sym_names = [], []
    for n in range(N_MIN, N_MAX + 1):
        h = daubechies(n)
        name = f"kDaub{n}"
        db_names.append(name)
        emit(out, name, h)
        print(f"db{n} ok, h0={mp.nstr(h[0], 10)}")
    for n in range(N_MIN, N_MAX + 1):
        h = symlet(n)
        name = f"kSym{n}"
        sym_names.append(name)
        emit(out, name, h)
        print(f"sym{n} ok, h0={mp.nstr(h[0], 10)}")

    out.append("struct FilterRow { int order; const double* coeff; int len; };")
    out.append("")
    out.append("inline constexpr FilterRow kDaubechies[] = {")
    for n, name in zip(range(N_MIN, N_MAX + 1), db_names):
        out.append(f"    {{{n}, {name}, {2 * n}}},")
    out.append("};")
    out.append("")
    out.append("inline constexpr FilterRow kSymlets[] = {")
    for n, name in zip(range(N_MIN, N_MAX + 1), sym_names):
        out.append(f"    {{{n}, {name}, {2 * n}}},")
    out.append("};")
    out.append("")
    out.append("}  // namespace ssband::tables")
    out.append("")
    with open("include/ssband/filter_tables.hpp", "w") as f:
        f.write("\n".join(out))
    print("wrote include/ssband/filter_tables.hpp")


if __name__ == "__main__":
    main()
