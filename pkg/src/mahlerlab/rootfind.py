"""Simultaneous (Aberth-style) complex root finding with per-root error radii,
plus disk / real-line / annulus counting helpers.

The finder runs a machine-precision Aberth sweep from ring-distributed initial
guesses, then refines at the requested mpmath working precision.  Error radii
are residual-based inclusion bounds (d*|P(z)|/|P'(z)| with fallback widening),
not formal ball arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .polycore import Polynomial

__all__ = [
    "Root",
    "RootSet",
    "DiskCount",
    "RootFindError",
    "PrecisionError",
    "roots",
    "count_in_disk",
    "count_real",
    "count_outside_radius",
    "contour_count",
    "vieta_residual",
    "reconstruction_residual",
]

ITERATION_CAP = 200


class RootFindError(RuntimeError):
    """Raised when the iteration does not converge; carries best iterates."""

    def __init__(self, message, iterates=None, residuals=None):
        super().__init__(message)
        self.iterates = iterates
        self.residuals = residuals


class PrecisionError(RuntimeError):
    """Raised when a query is undecidable at the current precision."""


@dataclass(frozen=True)
class Root:
    value: mp.mpc
    error_radius: float
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]
    source_degree: int
    precision_bits: int
    polynomial: Polynomial

    def __iter__(self):
        return iter(self.roots)

    def expanded(self):
        """Roots repeated according to multiplicity."""
        out = []
        for r in self.roots:
            out.extend([r] * r.multiplicity)
        return out


@dataclass(frozen=True)
class DiskCount:
    count: int
    certified: bool
    separation_margin: float


def _coeffs_mp(p: Polynomial):
    return [mp.mpf(c.numerator) / c.denominator for c in p.coeffs]


def _horner(cs, z):
    acc = mp.mpc(0)
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _horner_mag(cs, az):
    acc = mp.mpf(0)
    for c in reversed(cs):
        acc = acc * az + abs(c)
    return acc


def _aberth_sweeps(cs, dcs, zs, tol, cap):
    """Aberth simultaneous iteration; zs mutated in place. Returns max step."""
    d = len(zs)
    step = mp.inf
    for _ in range(cap):
        step = mp.mpf(0)
        for k in range(d):
            pk = _horner(cs, zs[k])
            dpk = _horner(dcs, zs[k])
            if dpk == 0:
                # nudge off a critical point
                zs[k] += mp.mpc(tol, tol)
                continue
            newton = pk / dpk
            s = mp.mpc(0)
            for j in range(d):
                if j != k:
                    dz = zs[k] - zs[j]
                    if dz != 0:
                        s += 1 / dz
            denom = 1 - newton * s
            w = newton if denom == 0 else newton / denom
            zs[k] -= w
            step = max(step, abs(w))
        if step < tol:
            break
    return step


def _initial_guesses(p: Polynomial, d: int):
    """Ring-distributed starting points with deterministic angular jitter."""
    a0 = abs(p[0])
    scale = float(a0 / abs(p.coeffs[-1])) ** (1.0 / d) if a0 != 0 else 1.0
    scale = max(scale, 0.5)
    zs = []
    for k in range(d):
        ang = 2 * math.pi * k / d + 0.4 / (d + 1) + 0.13
        r = scale * (1.0 + 0.05 * ((k * 7919) % 13) / 13.0)
        zs.append(complex(r * math.cos(ang), r * math.sin(ang)))
    return zs


def roots(p: Polynomial, precision_bits: int = 128) -> RootSet:
    """All complex roots of P with residual-based error radii and multiplicity
    via cluster merging."""
    if p.degree < 1:
        raise ValueError("root finding requires degree >= 1")

    # exact zero roots: deflate x^k
    k0 = 0
    cs_exact = list(p.coeffs)
    while cs_exact[0] == 0:
        cs_exact.pop(0)
        k0 += 1
    pd = Polynomial(cs_exact)
    d = pd.degree

    found: list[Root] = []
    if k0:
        found.append(Root(mp.mpc(0), 0.0, k0))

    if d >= 1:
        found.extend(_nonzero_roots(pd, precision_bits))

    found.sort(key=lambda r: (mp.re(r.value), mp.im(r.value)))
    rs = RootSet(tuple(found), p.degree, precision_bits, p)
    total = sum(r.multiplicity for r in rs.roots)
    if total != p.degree:
        raise RootFindError(
            f"root count {total} does not match degree {p.degree}",
            iterates=[r.value for r in rs.roots],
        )
    return rs


def _nonzero_roots(p: Polynomial, precision_bits: int) -> list[Root]:
    d = p.degree
    # phase 1: machine-precision seeds (companion eigenvalues when viable,
    # otherwise Aberth from ring guesses), polished by a machine Aberth pass
    fc = [float(c) for c in p.coeffs]
    zs = _eigen_seeds(fc) or _initial_guesses(p, d)
    _machine_aberth(fc, zs)

    # phase 2: refine at working precision
    work = precision_bits + 32
    with mp.workprec(work):
        cs = _coeffs_mp(p)
        dcs = _coeffs_mp(p.derivative())
        mzs = [mp.mpc(z) for z in zs]
        tol = mp.mpf(2) ** (-precision_bits)
        step = _aberth_sweeps(cs, dcs, mzs, tol, ITERATION_CAP)

        # backward-stable acceptance: residual below roundoff of evaluation
        eps = mp.mpf(2) ** (12 - work)
        residuals = [abs(_horner(cs, z)) for z in mzs]
        ok = all(
            r <= eps * max(_horner_mag(cs, abs(z)), 1) * d
            for r, z in zip(residuals, mzs)
        )
        if step > tol and not ok:
            raise RootFindError(
                "Aberth iteration did not converge",
                iterates=list(mzs),
                residuals=[float(r) for r in residuals],
            )

        merged = _merge_clusters(mzs, precision_bits)
        out = []
        for center, mult in merged:
            out.append(Root(center, _error_radius(p, cs, dcs, center, mult, work), mult))
        return out


def _eigen_seeds(fc):
    """Companion-matrix eigenvalues as starting points, or None when the
    coefficients do not fit machine floats."""
    if len(fc) - 1 > 400:
        return None
    if not all(math.isfinite(c) for c in fc):
        return None
    try:
        import numpy as np

        vals = np.roots(list(reversed(fc)))
    except Exception:
        return None
    if len(vals) != len(fc) - 1 or not all(
        math.isfinite(v.real) and math.isfinite(v.imag) for v in vals
    ):
        return None
    return [complex(v) for v in vals]


def _machine_aberth(fc, zs):
    d = len(fc) - 1
    dfc = [j * fc[j] for j in range(1, d + 1)]

    def ev(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    for _ in range(ITERATION_CAP):
        step = 0.0
        for k in range(d):
            pk = ev(fc, zs[k])
            dpk = ev(dfc, zs[k])
            if dpk == 0:
                zs[k] += 1e-8 + 1e-8j
                continue
            newton = pk / dpk
            s = 0j
            for j in range(d):
                if j != k:
                    dz = zs[k] - zs[j]
                    if dz != 0:
                        s += 1 / dz
            denom = 1 - newton * s
            w = newton if denom == 0 else newton / denom
            zs[k] -= w
            step = max(step, abs(w))
        if step < 1e-14:
            break


def _merge_clusters(mzs, precision_bits):
    """Union-find merge of iterates closer than 2^(-precision_bits/4)."""
    thr = mp.mpf(2) ** (-(precision_bits // 4))
    n = len(mzs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(mzs[i] - mzs[j]) < thr:
                parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(mzs[i])
    out = []
    for members in groups.values():
        center = sum(members) / len(members)
        out.append((center, len(members)))
    return out


def _error_radius(p, cs, dcs, z, mult, work):
    d = p.degree
    pv = abs(_horner(cs, z))
    dpv = abs(_horner(dcs, z))
    floor_r = float(mp.mpf(2) ** (8 - work) * max(1.0, abs(z)))
    if mult == 1 and dpv > 0 and pv / dpv < 1:
        return max(float(d * pv / dpv), floor_r)
    # multiple root or tiny derivative: widen via the multiplicity-m bound
    base = pv / max(abs(cs[-1]), mp.mpf(1))
    r = float(d * base ** (mp.mpf(1) / mult)) if base > 0 else 0.0
    return max(r, floor_r)


# ---------------------------------------------------------------------------
# counting


def count_in_disk(rs: RootSet, center, radius, _retried=False) -> DiskCount:
    """Number of roots (with multiplicity) strictly inside the open disk."""
    c = mp.mpc(center)
    count = 0
    certified = True
    margin = math.inf
    for r in rs.roots:
        dist = float(abs(r.value - c))
        margin = min(margin, abs(dist - radius))
        if dist < radius:
            count += r.multiplicity
        if abs(dist - radius) <= r.error_radius:
            certified = False
    if not certified and not _retried:
        rs2 = roots(rs.polynomial, rs.precision_bits * 2)
        return count_in_disk(rs2, center, radius, _retried=True)
    return DiskCount(count, certified, margin)


def _conjugate_partner(rs: RootSet, r: Root) -> bool:
    """True if some *other* root matches conj(r.value) within paired radii."""
    target = mp.conj(r.value)
    for s in rs.roots:
        if s is r:
            continue
        if abs(s.value - target) <= max(s.error_radius + r.error_radius, 1e-300):
            return True
    return False


def count_real(rs: RootSet, tolerance=None) -> tuple[int, int]:
    """(m, n): number of real zeros and of positive real zeros, with
    multiplicity.  Raises PrecisionError when a root's realness is undecidable
    at the RootSet's precision."""
    p = rs.polynomial
    m = n = 0
    for r in rs.roots:
        im = abs(mp.im(r.value))
        tol = max(r.error_radius, float(mp.mpf(2) ** (-rs.precision_bits // 2)))
        if im > tol:
            continue  # clearly non-real
        if _conjugate_partner(rs, r):
            continue  # member of a genuine conjugate pair near the axis
        x = mp.re(r.value)
        if r.multiplicity % 2 == 1 and r.error_radius > 0:
            # sign-change confirmation on a bracketing interval
            h = max(10 * r.error_radius, float(mp.mpf(2) ** (-rs.precision_bits // 2)))
            cs = _coeffs_mp(p)
            with mp.workprec(rs.precision_bits + 32):
                lo = _horner(cs, mp.mpc(x - h)).real
                hi = _horner(cs, mp.mpc(x + h)).real
            if lo * hi > 0 and im > r.error_radius / 4:
                raise PrecisionError(
                    f"realness of root near {complex(r.value)} undecidable; "
                    "increase precision"
                )
        m += r.multiplicity
        if x > 0:
            n += r.multiplicity
    return m, n


def count_outside_radius(p: Polynomial, r: float, rs: RootSet, mahler: float | None = None):
    """(count, bound, holds): |roots outside |x|>r| against log M / log r."""
    if not p.is_monic():
        raise ValueError("count_outside_radius requires a monic polynomial")
    if r <= 1:
        raise ValueError("requires r > 1")
    if mahler is None:
        from .measure import mahler_from_roots

        mahler = mahler_from_roots(p, rs).value
    count = sum(rt.multiplicity for rt in rs.roots if abs(rt.value) > r)
    bound = math.log(mahler) / math.log(r) if mahler > 0 else 0.0
    return count, bound, count < bound


# ---------------------------------------------------------------------------
# independent oracle: argument-principle contour counting


def contour_count(p: Polynomial, center, radius, nodes: int = 4096) -> int:
    """Zeros inside the circle via trapezoidal integration of P'/P, snapped to
    the nearest integer with a residue check.  Node count escalates up to 32x
    when a root close to the contour spoils the quadrature.  Test oracle, not
    the primary counter."""
    dp = p.derivative()
    fc = [complex(c) for c in p.coeffs]
    fdc = [complex(c) for c in dp.coeffs]

    def ev(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    c0 = complex(center)
    n = nodes
    while True:
        total = 0j
        for k in range(n):
            t = 2 * math.pi * k / n
            z = c0 + radius * cmath.exp(1j * t)
            pv = ev(fc, z)
            if pv == 0:
                raise ValueError("zero on the contour")
            total += ev(fdc, z) / pv * 1j * radius * cmath.exp(1j * t)
        total *= 2 * math.pi / n / (2j * math.pi)
        count = round(total.real)
        if abs(total - count) <= 0.1:
            return count
        if n >= nodes * 32:
            raise PrecisionError(
                f"contour integral {total} too far from an integer at {n} nodes"
            )
        n *= 4


# ---------------------------------------------------------------------------
# residual diagnostics


def vieta_residual(rs: RootSet) -> float:
    """| prod roots - (-1)^d a0/ad | relative to |a0/ad| (or absolute when
    a0 = 0 is impossible since zero roots are exact)."""
    p = rs.polynomial
    with mp.workprec(rs.precision_bits + 32):
        prod = mp.mpc(1)
        for r in rs.roots:
            prod *= r.value ** r.multiplicity
        target = mp.mpf((-1) ** p.degree) * (
            mp.mpf(p[0].numerator) / p[0].denominator
        ) / (mp.mpf(p.coeffs[-1].numerator) / p.coeffs[-1].denominator)
        denom = max(abs(target), mp.mpf(1))
        return float(abs(prod - target) / denom)


def reconstruction_residual(rs: RootSet) -> float:
    """Max relative coefficient error of lead * prod (x - root) vs input."""
    p = rs.polynomial
    with mp.workprec(rs.precision_bits + 32):
        coeffs = [mp.mpc(1)]
        for r in rs.expanded():
            new = [mp.mpc(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                new[i + 1] += c
                new[i] -= c * r.value
            coeffs = new
        lead = mp.mpf(p.coeffs[-1].numerator) / p.coeffs[-1].denominator
        scale = max(abs(mp.mpf(c.numerator) / c.denominator) for c in p.coeffs)
        worst = mp.mpf(0)
        for j, c in enumerate(coeffs):
            exact = mp.mpf(p[j].numerator) / p[j].denominator
            worst = max(worst, abs(lead * c - exact))
        return float(worst / scale)
