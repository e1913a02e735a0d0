"""Evaluators for every inequality of the zero-geometry results: Liouville-type
separation bounds, Jensen-disk estimates, the generalized Schinzel lower bound,
real-zero counting bounds, the Vandermonde/Hadamard lemma chain and the
disk-count lower bound, together with the transcendental constants they use.

Every proved inequality gets a Holds/Violated verdict with its margin;
asymptotic statements with non-effective thresholds are evaluated but tagged
ReportOnly, never pass/fail.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from .measure import (
    MeasureResult,
    mahler,
    mahler_from_roots,
    mahler_graeffe,
    norm_chain_check,
    sup_norm_circle,
)
from .polycore import Polynomial, norms, structural_flags
from .reporting import (
    BoundEntry,
    BoundReport,
    Verdict,
    entry_from_inequality,
    entry_not_applicable,
    entry_report_only,
)
from .rootfind import RootSet, count_in_disk, count_outside_radius, count_real, roots
from .structure import (
    IrreducibilityStatus,
    cyclotomic,
    cyclotomic_factor,
    irreducibility_probe,
    is_squarefree,
)

__all__ = [
    "PaperConstants",
    "solve_constants",
    "liouville_selfreciprocal",
    "dubickas_selfreciprocal_rhs",
    "general_separation",
    "jensen_disk_rhs",
    "lower1_bounds",
    "corollary_bounds",
    "schinzel_lower",
    "realzero_upper_com",
    "realzero_upper_length",
    "vandermonde_R",
    "hadamard_bound",
    "lemmaK_check",
    "zhang_zagier_check",
    "around1_report",
    "verify_all",
]

# printed 3-decimal value accompanying the c log c = 1 + c constant in the
# source literature; displayed next to the solved value, never forced to agree
PRINTED_C = 3.594

_REL_SLACK = 1e-9


@dataclass(frozen=True)
class PaperConstants:
    theta0: float  # real root of x^3 - x - 1
    golden: float  # (1 + sqrt 5)/2
    c: float  # c log c = 1 + c
    a: float  # a (log a)^3 = 4
    A: float  # A^2 = 4 / (a (2 + log a))
    b: float  # b (log b)^2 (log b - 2) = 8
    B: float  # B^4 = 8 log(b^2) / (b (log b + 2))
    printed_c: float = PRINTED_C

    def residuals(self) -> dict[str, float]:
        t, c, a, b = self.theta0, self.c, self.a, self.b
        return {
            "theta0": abs(t ** 3 - t - 1),
            "golden": abs(self.golden ** 2 - self.golden - 1),
            "c": abs(c * math.log(c) - 1 - c),
            "a": abs(a * math.log(a) ** 3 - 4),
            "A": abs(self.A ** 2 - 4 / (a * (2 + math.log(a)))),
            "b": abs(b * math.log(b) ** 2 * (math.log(b) - 2) - 8),
            "B": abs(self.B ** 4 - 8 * math.log(b ** 2) / (b * (math.log(b) + 2))),
        }


def _bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (flo < 0) == (fm < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def solve_constants() -> PaperConstants:
    """Solve the defining equations to < 1e-12 residual.

    `log b^2` is read as log(b^2) = 2 log b; that reading reproduces the
    printed B = 0.984 while (log b)^2 does not."""
    with mp.workdps(40):
        theta0 = float(mp.findroot(lambda x: x ** 3 - x - 1, 1.3))
        golden = float((1 + mp.sqrt(5)) / 2)
        c = float(mp.findroot(lambda x: x * mp.log(x) - 1 - x, 3.6))
        a = float(mp.findroot(lambda x: x * mp.log(x) ** 3 - 4, 3.0))
        b = float(mp.findroot(lambda x: x * mp.log(x) ** 2 * (mp.log(x) - 2) - 8, 9.0))
    A = math.sqrt(4 / (a * (2 + math.log(a))))
    B = (8 * math.log(b ** 2) / (b * (math.log(b) + 2))) ** 0.25
    return PaperConstants(theta0, golden, c, a, A, b, B)


# ---------------------------------------------------------------------------
# section 3.1: Liouville-type separation from roots of unity


def _roots_of_pm_one(m: int, sign: int):
    """All omega with omega^m = sign (sign is +1 or -1)."""
    offset = 0.0 if sign > 0 else 1.0
    return [cmath.exp(1j * math.pi * (2 * k + offset) / m) for k in range(m)]


def liouville_selfreciprocal(
    p: Polynomial, rs: RootSet, m: int, sign: int = 1
) -> list[BoundEntry]:
    """|mu - omega| >= m^-1 2^(1-n) M^(-m/2) for real-or-unit-modulus roots and
    >= m^-1 2^(1-n/2) M^(-m/4) for the rest; self-reciprocal monic integer
    squarefree P of even degree 2n with no cyclotomic factor."""
    tid = f"liouville_m{m}{'p' if sign > 0 else 'n'}"
    flags = structural_flags(p)
    if (
        not p.is_integer()
        or not p.is_monic()
        or not flags.self_reciprocal
        or p.degree % 2
        or not is_squarefree(p)
        or cyclotomic_factor(p) is not None
    ):
        return [entry_not_applicable(tid, "requires squarefree self-reciprocal monic integer P with no cyclotomic factor")]
    n = p.degree // 2
    mval = mahler_from_roots(p, rs).value
    worst = None
    for omega in _roots_of_pm_one(m, sign):
        for rt in rs.roots:
            mu = complex(rt.value)
            # a generous tolerance is safe here: the real-or-unit branch is the
            # weaker bound, so misclassifying an off-circle root toward it can
            # only make the check easier, while the converse could falsely fail
            near = max(8 * rt.error_radius, 1e-12)
            real_or_unit = abs(mu.imag) <= near or abs(abs(mu) - 1) <= near
            if real_or_unit:
                bound = 2.0 ** (1 - n) / m * mval ** (-m / 2.0)
            else:
                bound = 2.0 ** (1 - n / 2.0) / m * mval ** (-m / 4.0)
            dist = abs(mu - omega)
            if worst is None or dist - bound < worst[0] - worst[1]:
                worst = (dist, bound, mu, omega)
    dist, bound, mu, omega = worst
    return [
        entry_from_inequality(
            tid, bound, dist, slack=_REL_SLACK * (1 + bound),
            note=f"tightest root {mu:.6g} vs omega {omega:.6g}",
        )
    ]


def dubickas_selfreciprocal_rhs(
    p: Polynomial, m: int, epsilon: float, rs: RootSet | None = None
) -> list[BoundEntry]:
    """RHS evaluator for the improved pi*sqrt(m)/8 separation exponent; the
    threshold D0(eps) is non-effective, so these rows are ReportOnly.  Includes
    comparison columns for the historical constants 1 and pi/4."""
    d = p.degree
    flags = structural_flags(p)
    if d < 2 or not flags.self_reciprocal or not p.is_integer() or not p.is_monic():
        return [entry_not_applicable(f"dubickas_rhs_m{m}", "requires monic integer self-reciprocal P of degree >= 2")]
    mval = mahler(p).value
    if mval <= 1.0:
        return [entry_not_applicable(f"dubickas_rhs_m{m}", "requires M(P) > 1")]
    base = math.sqrt(d * math.log(d) * math.log(mval))
    lhs = None
    if rs is not None:
        omegas = _roots_of_pm_one(m, 1) + _roots_of_pm_one(m, -1)
        lhs = min(
            abs(complex(rt.value) - w) for rt in rs.roots for w in omegas
        )
    out = []
    rhs8 = math.exp(-(math.pi * math.sqrt(m) / 8 + epsilon) * base)
    rhs16 = math.exp(-(math.pi * math.sqrt(m) / 16 + epsilon) * base)
    out.append(entry_report_only(f"dubickas_rhs_m{m}", rhs8, lhs, note="exponent pi*sqrt(m)/8; lhs col = RHS, rhs col = min |mu-omega|"))
    out.append(entry_report_only(f"dubickas_rhs_m{m}_nonreal", rhs16, lhs, note="exponent pi*sqrt(m)/16 (non-real off-circle roots)"))
    out.append(
        entry_report_only(
            f"dubickas_rhs_m{m}_comparison",
            math.exp(-(1 + epsilon) * base),
            math.exp(-(math.pi / 4 + epsilon) * base),
            note="Mignotte-Waldschmidt (const 1) vs Dubickas (const pi/4)",
        )
    )
    return out


# ---------------------------------------------------------------------------
# section 3.2: coefficient-based separation


def general_separation(p: Polynomial, rs: RootSet, omega: complex) -> list[BoundEntry]:
    """|mu - omega| >= d^-1 (e^-1 |P(omega)| / L)^(1/m_mu) for every root,
    plus the positive-coefficient and sup-norm-attaining corollaries."""
    d = p.degree
    if d < 1:
        return [entry_not_applicable("general_separation", "degree 0")]
    w = complex(omega)
    pw = abs(_eval_c(p, w))
    if pw == 0:
        return [entry_not_applicable("general_separation", "P(omega) = 0")]
    L = float(norms(p).L)
    entries = []
    worst = None
    for rt in rs.roots:
        bound = (pw / (math.e * L)) ** (1.0 / rt.multiplicity) / d
        dist = abs(complex(rt.value) - w)
        if worst is None or dist - bound < worst[0] - worst[1]:
            worst = (dist, bound)
    entries.append(
        entry_from_inequality(
            "general_separation", worst[1], worst[0], slack=_REL_SLACK * (1 + worst[1])
        )
    )

    if all(c > 0 for c in p.coeffs) and abs(w - 1) < 1e-15:
        worst = None
        for rt in rs.roots:
            bound = math.exp(-1.0 / rt.multiplicity) / d
            dist = abs(complex(rt.value) - 1)
            if worst is None or dist - bound < worst[0] - worst[1]:
                worst = (dist, bound)
        entries.append(
            entry_from_inequality(
                "general_separation_positive", worst[1], worst[0],
                slack=_REL_SLACK * (1 + worst[1]),
            )
        )

    sup, _ = sup_norm_circle(p)
    if abs(pw - sup) <= 1e-9 * sup:
        worst = None
        for rt in rs.roots:
            bound = (math.exp(-1.0) / math.sqrt(d + 1)) ** (1.0 / rt.multiplicity) / d
            dist = abs(complex(rt.value) - w)
            if worst is None or dist - bound < worst[0] - worst[1]:
                worst = (dist, bound)
        entries.append(
            entry_from_inequality(
                "general_separation_supnorm", worst[1], worst[0],
                slack=_REL_SLACK * (1 + worst[1]),
            )
        )
    return entries


def _eval_c(p: Polynomial, z: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + complex(c)
    return acc


def _weighted_sums(p: Polynomial):
    """(S1, S2) = sum over j < n of (n-j)|a_j| and (n-j)^2 |a_j|."""
    n = p.degree // 2
    s1 = s2 = 0.0
    for j in range(n):
        aj = abs(float(p[j]))
        s1 += (n - j) * aj
        s2 += (n - j) ** 2 * aj
    return s1, s2


def _selfreciprocal_even_real(p: Polynomial) -> bool:
    flags = structural_flags(p)
    return flags.self_reciprocal and p.degree >= 2 and p.degree % 2 == 0


def jensen_disk_rhs(p: Polynomial, omega: complex, rho: float, rs: RootSet):
    """(lhs_sum, rhs_general, rhs_pm1, entries) for the Jensen-disk lemma.

    lhs_sum = sum of log(rho/|mu-omega|) over roots within rho of omega."""
    tid = "jensen_disk"
    if not _selfreciprocal_even_real(p):
        return None, None, None, [entry_not_applicable(tid, "requires self-reciprocal even degree")]
    if not (0 < rho < 1):
        raise ValueError("rho must lie in (0,1)")
    w = complex(omega)
    pw = abs(_eval_c(p, w))
    if pw == 0:
        return None, None, None, [entry_not_applicable(tid, "P(omega) = 0")]
    n = p.degree // 2
    s1, s2 = _weighted_sums(p)
    lhs = 0.0
    for rt in rs.roots:
        dist = abs(complex(rt.value) - w)
        if 0 < dist <= rho:
            lhs += rt.multiplicity * math.log(rho / dist)
    rhs_general = math.log(1 + rho * (1 + (1 - rho) ** (-n)) / pw * s1)
    entries = [
        entry_from_inequality(tid, lhs, rhs_general, slack=_REL_SLACK * (1 + rhs_general))
    ]
    rhs_pm1 = None
    if abs(w - 1) < 1e-15 or abs(w + 1) < 1e-15:
        rhs_pm1 = math.log(1 + rho ** 2 * (1 - rho) ** (-n) / pw * s2)
        entries.append(
            entry_from_inequality(
                tid + "_pm1", lhs, rhs_pm1, slack=_REL_SLACK * (1 + rhs_pm1)
            )
        )
    return lhs, rhs_general, rhs_pm1, entries


def _modulus_status(rt, bits):
    """'unit', 'offunit', or 'undecided' for |mu| = 1 within the error radius."""
    gap = abs(abs(complex(rt.value)) - 1.0)
    if gap > max(rt.error_radius, 1e-25):
        return "offunit"
    if rt.error_radius <= 1e-25:
        return "unit"
    return "undecided"


def lower1_bounds(
    p: Polynomial, rs: RootSet, omega: complex, delta: float
) -> list[BoundEntry]:
    """The four disk inequalities for self-reciprocal real P of degree 2n:
    (alpha) 1/|mu-omega|, (betagamma) |mu|/|mu-omega|^2 off the unit circle,
    and for omega = +-1 the (n-j)^2 variants (alphabeta) and (gamma)."""
    if not _selfreciprocal_even_real(p):
        return [entry_not_applicable("lower1_alpha", "requires self-reciprocal even degree")]
    if delta <= 1:
        raise ValueError("delta must be > 1")
    w = complex(omega)
    pw = abs(_eval_c(p, w))
    if pw == 0:
        return [entry_not_applicable("lower1_alpha", "P(omega) = 0")]
    n = p.degree // 2
    s1, s2 = _weighted_sums(p)
    T = n / math.log(delta) + 1
    at_pm1 = abs(w - 1) < 1e-15 or abs(w + 1) < 1e-15

    worst = {}

    def upd(key, lhs, rhs):
        if key not in worst or rhs - lhs < worst[key][1] - worst[key][0]:
            worst[key] = (lhs, rhs)

    undecided = 0
    for rt in rs.roots:
        mu = complex(rt.value)
        dist = abs(mu - w)
        if dist == 0:
            continue
        amu = abs(mu)
        upd("alpha", 1.0 / dist, T + (1 + delta) * s1 / pw)
        status = _modulus_status(rt, rs.precision_bits)
        if status == "undecided":
            undecided += 1
            continue
        offunit = status == "offunit"
        if offunit:
            upd("betagamma", amu / dist ** 2, T ** 2 + T * (1 + delta) * s1 / pw)
        if at_pm1:
            upd("alphabeta", amu / dist ** 2, T ** 2 + delta * s2 / pw)
            nonreal = abs(mu.imag) > max(rt.error_radius, 1e-25)
            if offunit and nonreal:
                upd("gamma", amu ** 2 / dist ** 4, T ** 4 + T ** 2 * delta * s2 / pw)

    entries = []
    for key in ("alpha", "betagamma", "alphabeta", "gamma"):
        tid = f"lower1_{key}"
        if key in worst:
            lhs, rhs = worst[key]
            entries.append(
                entry_from_inequality(tid, lhs, rhs, slack=_REL_SLACK * (1 + rhs))
            )
        else:
            entries.append(entry_not_applicable(tid, "no qualifying root"))
    if undecided:
        entries.append(
            entry_not_applicable(
                "lower1_unit_status", f"{undecided} roots with undecidable |mu| = 1"
            )
        )
    return entries


def corollary_bounds(p: Polynomial, rs: RootSet, omega: complex) -> list[BoundEntry]:
    """Pre-asymptotic forms of the three corollaries, obtained by substituting
    the proofs' delta choices and coefficient-sum majorants into the four disk
    inequalities; the asymptotic constants A, B are attached as context."""
    if not _selfreciprocal_even_real(p):
        return [entry_not_applicable("cor36_alpha", "requires self-reciprocal even degree")]
    w = complex(omega)
    pw = abs(_eval_c(p, w))
    if pw == 0:
        return [entry_not_applicable("cor36_alpha", "P(omega) = 0")]
    n = p.degree // 2
    consts = solve_constants()
    c = consts.c
    H = float(norms(p).H)
    L = float(norms(p).L)
    L2 = norms(p).L2
    maj1_H = n * (n + 1) / 2 * H
    maj2_H = n * (n + 1) * (2 * n + 1) / 6 * H

    entries: list[BoundEntry] = []

    def run(tag, delta_map, maj1, maj2, pw_eff, note=""):
        # evaluate the four disk inequalities with majorized sums
        T = lambda dl: n / math.log(dl) + 1
        worst = {}

        def upd(key, lhs, rhs):
            if key not in worst or rhs - lhs < worst[key][1] - worst[key][0]:
                worst[key] = (lhs, rhs)

        for rt in rs.roots:
            mu = complex(rt.value)
            dist = abs(mu - w)
            if dist == 0:
                continue
            amu = abs(mu)
            status = _modulus_status(rt, rs.precision_bits)
            if "alpha" in delta_map:
                dl = delta_map["alpha"]
                upd("alpha", 1.0 / dist, T(dl) + (1 + dl) * maj1 / pw_eff)
            if "betagamma" in delta_map and status == "offunit":
                dl = delta_map["betagamma"]
                upd("betagamma", amu / dist ** 2, T(dl) ** 2 + T(dl) * (1 + dl) * maj1 / pw_eff)
            at_pm1 = abs(w - 1) < 1e-15 or abs(w + 1) < 1e-15
            if "alphabeta" in delta_map and at_pm1:
                dl = delta_map["alphabeta"]
                upd("alphabeta", amu / dist ** 2, T(dl) ** 2 + dl * maj2 / pw_eff)
            if (
                "gamma" in delta_map
                and at_pm1
                and status == "offunit"
                and abs(mu.imag) > max(rt.error_radius, 1e-25)
            ):
                dl = delta_map["gamma"]
                upd("gamma", amu ** 2 / dist ** 4, T(dl) ** 4 + T(dl) ** 2 * dl * maj2 / pw_eff)
        for key, (lhs, rhs) in worst.items():
            entries.append(
                entry_from_inequality(
                    f"{tag}_{key}", lhs, rhs, slack=_REL_SLACK * (1 + rhs), note=note
                )
            )

    # Cor 3.6: height-bounded, |P(omega)| >= 1
    if pw >= 1 - 1e-12:
        run(
            "cor36",
            {
                "alpha": 1 + 1 / math.sqrt(n),
                "betagamma": c,
                "alphabeta": 1 + n ** -0.25,
                "gamma": math.e ** 2,
            },
            maj1_H,
            maj2_H,
            max(pw, 1.0),
        )
    else:
        entries.append(entry_not_applicable("cor36_alpha", "|P(omega)| < 1"))

    # Cor 3.7: nonnegative coefficients, omega = 1
    if all(co >= 0 for co in p.coeffs) and abs(w - 1) < 1e-15:
        run(
            "cor37",
            {"alphabeta": consts.a, "gamma": consts.b},
            0.0,
            n * n / 2 * L,
            pw,
            note=f"asymptotic constants A={consts.A:.3f}, B={consts.B:.3f}",
        )
    else:
        entries.append(entry_not_applicable("cor37_alphabeta", "requires nonnegative coefficients and omega = 1"))

    # Cor 3.8: omega attains the sup norm
    sup, _ = sup_norm_circle(p)
    if abs(pw - sup) <= 1e-9 * sup:
        maj1_38 = math.sqrt(n * (n + 1) * (2 * n + 1) / 12.0) * L2
        maj2_38 = math.sqrt(n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1) / 60.0) * L2
        run(
            "cor38",
            {
                "alpha": 1 + n ** -0.25,
                "betagamma": c,
                "alphabeta": 1 + n ** -0.125,
                "gamma": math.e ** 2,
            },
            maj1_38,
            maj2_38,
            pw,
        )
    else:
        entries.append(entry_not_applicable("cor38_alpha", "omega does not attain the sup norm"))
    return entries


# ---------------------------------------------------------------------------
# section 4: generalized Schinzel lower bound


def _schinzel_rhs_m(p: Polynomial, m: int) -> float:
    d = p.degree
    P0 = abs(float(p.eval_exact(0)))
    P1Pm1 = abs(float(p.eval_exact(1) * p.eval_exact(-1)))
    t = P1Pm1 ** (1.0 / m)
    inner = math.sqrt(4.0 ** (d / m) * P0 ** (2.0 / m) + P1Pm1 ** (2.0 / m))
    return ((t + inner) / 2.0 ** (d / m)) ** (m / 2.0)


def _schinzel_rhs_n(p: Polynomial, n: int) -> float:
    d = p.degree
    P0 = abs(float(p.eval_exact(0)))
    P1 = abs(float(p.eval_exact(1)))
    t = P1 ** (1.0 / n)
    inner = math.sqrt(4.0 ** (d / n) * P0 ** (1.0 / n) + P1 ** (2.0 / n))
    return ((t + inner) / 2.0 ** (d / n)) ** float(n)


def _matches_equality_family_m(rs: RootSet, tol=1e-6) -> bool:
    """Roots must be +-i and +-a, +-1/a for a single a > 1 (any multiplicities)."""
    a = None
    for rt in rs.roots:
        mu = complex(rt.value)
        if abs(mu - 1j) < tol or abs(mu + 1j) < tol:
            continue
        if abs(mu.imag) > tol:
            return False
        x = abs(mu.real)
        if x == 0:
            return False
        cand = x if x > 1 else 1 / x
        if cand <= 1 + tol / 10:
            return False
        if a is None:
            a = cand
        elif abs(cand - a) > tol * max(1, a):
            return False
    return a is not None


def _matches_equality_family_n(rs: RootSet, tol=1e-6) -> bool:
    """Roots must be a and 1/a for a single a > 1, all positive real."""
    a = None
    for rt in rs.roots:
        mu = complex(rt.value)
        if abs(mu.imag) > tol or mu.real <= 0:
            return False
        x = mu.real
        cand = x if x > 1 else 1 / x
        if cand <= 1 + tol / 10:
            return False
        if a is None:
            a = cand
        elif abs(cand - a) > tol * max(1, a):
            return False
    return a is not None


def schinzel_lower(p: Polynomial, rs: RootSet):
    """(entries, certificate): the two generalized Schinzel inequalities with
    their root-configuration equality certificates."""
    entries = []
    cert = {"m": False, "n": False}
    d = p.degree
    if not p.is_monic() or d < 2:
        return [entry_not_applicable("schinzel_m", "requires monic degree >= 2")], cert
    P0 = p.eval_exact(0)
    P1 = p.eval_exact(1)
    Pm1 = p.eval_exact(-1)
    mres = mahler_from_roots(p, rs)
    m, n = count_real(rs)

    if P0 != 0 and P1 != 0 and Pm1 != 0 and m >= 1:
        rhs = _schinzel_rhs_m(p, m)
        entries.append(
            entry_from_inequality(
                "schinzel_m", rhs, mres.value,
                slack=mres.error_bound + _REL_SLACK * (1 + rhs),
                note=f"m={m}",
            )
        )
        if abs(mres.value - rhs) <= 1e-9 * max(1.0, rhs) and _matches_equality_family_m(rs):
            cert["m"] = True
    else:
        entries.append(entry_not_applicable("schinzel_m", "needs P(0)P(1)P(-1) != 0 and m >= 1"))

    if P0 != 0 and P1 != 0 and n >= 1:
        rhs = _schinzel_rhs_n(p, n)
        entries.append(
            entry_from_inequality(
                "schinzel_n", rhs, mres.value,
                slack=mres.error_bound + _REL_SLACK * (1 + rhs),
                note=f"n={n}",
            )
        )
        if abs(mres.value - rhs) <= 1e-9 * max(1.0, rhs) and _matches_equality_family_n(rs):
            cert["n"] = True
    else:
        entries.append(entry_not_applicable("schinzel_n", "needs P(0)P(1) != 0 and n >= 1"))
    return entries, cert


# ---------------------------------------------------------------------------
# section 5: number of real zeros


def realzero_upper_com(p: Polynomial, rs: RootSet) -> list[BoundEntry]:
    """m <= max of the two branches of the sinh-based bound."""
    d = p.degree
    if not p.is_monic() or d < 2:
        return [entry_not_applicable("realzero_com", "requires monic degree >= 2")]
    P0 = abs(float(p.eval_exact(0)))
    P1Pm1 = abs(float(p.eval_exact(1) * p.eval_exact(-1)))
    if P0 == 0 or P1Pm1 == 0:
        return [entry_not_applicable("realzero_com", "P(0)P(1)P(-1) = 0")]
    mres = mahler_from_roots(p, rs)
    m, _ = count_real(rs)
    denom = -math.log(math.sinh(math.log(d) / d))
    branch1 = (d * math.log(2) + math.log(P0) - math.log(P1Pm1)) / denom
    branch2 = d * math.log(mres.value ** 2 / P0) / math.log(d)
    rhs = max(branch1, branch2)
    return [
        entry_from_inequality(
            "realzero_com", m, rhs, slack=_REL_SLACK * (1 + abs(rhs)),
            note=f"branches {branch1:.6g}, {branch2:.6g}",
        )
    ]


def realzero_upper_length(
    p: Polynomial, rs: RootSet, c1: float = 1.0
) -> list[BoundEntry]:
    """Length-based real-zero bounds: the sqrt(c) form for monic P, the integer
    rescale corollary, and the asymptotic (report-only) constant c2."""
    d = p.degree
    entries = []
    if d < 1:
        return [entry_not_applicable("realzero_length_complex", "degree 0")]
    P0 = p.eval_exact(0)
    P1 = p.eval_exact(1)
    Pm1 = p.eval_exact(-1)
    if P0 == 0 or P1 == 0 or Pm1 == 0:
        return [entry_not_applicable("realzero_length_complex", "P(0)P(1)P(-1) = 0")]
    c = solve_constants().c
    mres = mahler_from_roots(p, rs)
    m, _ = count_real(rs)
    L = float(norms(p).L)

    if p.is_monic():
        ratio = mres.value ** 2 / abs(float(P0))
        lr = math.log(ratio)
        rhs = (
            2 * math.sqrt(c) * math.sqrt(d * lr)
            + (c + 1) * lr
            + math.log(1 + d * d) / math.log(c)
            + math.log(
                L ** 2 / (2 * float(P1) ** 2) + L ** 2 / (2 * float(Pm1) ** 2)
            )
            / math.log(c)
        )
        entries.append(
            entry_from_inequality(
                "realzero_length_complex", m, rhs, slack=_REL_SLACK * (1 + abs(rhs))
            )
        )
    else:
        entries.append(entry_not_applicable("realzero_length_complex", "not monic"))

    if p.is_integer():
        lm = math.log(max(mres.value, 1.0))
        rhs = (
            2 * math.sqrt(2 * c * d * lm)
            + 2 * (c + 1) * lm
            + math.log(1 + d * d) / math.log(c)
            + 2 * math.log(L) / math.log(c)
        )
        entries.append(
            entry_from_inequality(
                "realzero_length_integer", m, rhs, slack=_REL_SLACK * (1 + abs(rhs))
            )
        )
        # asymptotic form with supplied c1; threshold non-effective
        c2 = 2 * (math.sqrt(2 * c) + c + 1 + c1 / math.log(c))
        asy = c2 * math.sqrt(d * lm) if lm > 0 else 0.0
        entries.append(
            entry_report_only(
                "realzero_length_integer1", m, asy, note=f"c2={c2:.6g} for c1={c1:g}"
            )
        )
    return entries


# ---------------------------------------------------------------------------
# section 6: zeros near 1


def vandermonde_R(x: complex, N: int) -> float:
    """prod over j < N of |x^j - 1|^(N-j)."""
    if N < 2:
        raise ValueError("N must be >= 2")
    x = complex(x)
    out = 1.0
    for j in range(1, N):
        out *= abs(x ** j - 1) ** (N - j)
    return out


def hadamard_bound(x: complex, N: int) -> float:
    return max(1.0, abs(complex(x))) ** ((N - 1) * N * (N + 1) / 6.0) * N ** (N / 2.0)


def lemmaK_check(
    p: Polynomial, mres: MeasureResult, n_max: int = 10
) -> list[BoundEntry]:
    """|P(1)| <= N^(d/(N-1)) M^((N+1)/3) for N = 2..n_max; N = 2 reproduces the
    classical |P(1)| <= 2^d M."""
    if not p.is_integer() or not p.is_monic():
        return [entry_not_applicable("lemmaK_N2", "requires monic integer P")]
    if cyclotomic_factor(p) is not None:
        return [entry_not_applicable("lemmaK_N2", "vanishes at a root of unity")]
    d = p.degree
    P1 = abs(float(p.eval_exact(1)))
    entries = []
    for N in range(2, n_max + 1):
        rhs = N ** (d / (N - 1.0)) * mres.value ** ((N + 1) / 3.0)
        entries.append(
            entry_from_inequality(
                f"lemmaK_N{N}", P1, rhs,
                slack=mres.error_bound * (N + 1) * rhs + _REL_SLACK * (1 + rhs),
            )
        )
    return entries


def zhang_zagier_check(p: Polynomial, rs: RootSet) -> list[BoundEntry]:
    """M(P) M(P(1-x)) >= golden^(d/2); applicability needs P(0)P(1) != 0 and no
    primitive 6th root of unity among the zeros (exact via Phi_6 divisibility)."""
    if not p.is_integer():
        return [entry_not_applicable("zhang_zagier", "requires integer P")]
    d = p.degree
    if d < 1:
        return [entry_not_applicable("zhang_zagier", "degree 0")]
    if p.eval_exact(0) == 0 or p.eval_exact(1) == 0 or cyclotomic(6).divides(p):
        return [entry_not_applicable("zhang_zagier", "P(0)P(1)P(omega_6) = 0")]
    golden = (1 + math.sqrt(5)) / 2
    m1 = mahler_from_roots(p, rs)
    # the composed polynomial only needs a modestly accurate measure, and its
    # coefficients are huge; root-squaring is much cheaper than root finding
    pstar = p.compose(Polynomial([1, -1]))  # P(1-x)
    m2 = mahler_graeffe(pstar, k=24, precision_bits=max(rs.precision_bits, 256))
    lhs = golden ** (d / 2.0)
    rhs = m1.value * m2.value
    slack = rhs * ((m1.error_bound / max(m1.value, 1e-300)) + (m2.error_bound / max(m2.value, 1e-300))) + _REL_SLACK * (1 + lhs)
    return [entry_from_inequality("zhang_zagier", lhs, rhs, slack=slack)]


def around1_report(
    p: Polynomial, rs: RootSet, epsilon: float = 0.01
) -> list[BoundEntry]:
    """Disk counts J, J', K = min(J, J') against the asymptotic lower bound and
    the derived measure bound; ReportOnly (non-effective threshold)."""
    if not p.is_integer() or not p.is_monic():
        return [entry_not_applicable("around1_K", "requires monic integer P")]
    d = p.degree
    if d < 2:
        return [entry_not_applicable("around1_K", "needs degree >= 2 (log d > 0)")]
    verdict = irreducibility_probe(p) if p.content() == 1 else None
    if verdict is None or verdict.status is not IrreducibilityStatus.IRREDUCIBLE:
        return [entry_not_applicable("around1_K", "requires (verified) irreducible P")]
    mres = mahler_from_roots(p, rs)
    if mres.value <= 1.0 + mres.error_bound:
        return [entry_not_applicable("around1_K", "requires M(P) > 1")]
    golden = (1 + math.sqrt(5)) / 2
    J = count_in_disk(rs, 1, 1).count
    Jp = count_in_disk(rs, -1, 1).count
    K = min(J, Jp)
    lm = math.log(mres.value)
    coef = 2 / math.pi * math.log(golden) - epsilon
    bound = coef * math.sqrt(d / (math.log(d) * lm))
    minor_rhs = coef ** 2 * d / (K * K * math.log(d)) if K > 0 else math.inf
    return [
        entry_report_only("around1_K", bound, K, note=f"J={J}, J'={Jp}"),
        entry_report_only("around1_minor", minor_rhs, lm, note="log M vs disk-count bound"),
    ]


# ---------------------------------------------------------------------------
# aggregate


def verify_all(
    p: Polynomial,
    precision_bits: int = 128,
    polynomial_id: str = "",
    rs: RootSet | None = None,
) -> BoundReport:
    """Run every applicable checker and aggregate entries in a stable order."""
    report = BoundReport(polynomial_id)
    if p.degree < 1:
        return report
    if rs is None:
        rs = roots(p, precision_bits)
    mres = mahler_from_roots(p, rs)

    report.extend(norm_chain_check(p, measure=mres))

    for r in (1.1, 1.5, 2.0):
        count, bound, holds = count_outside_radius(p, r, rs, mres.value) if p.is_monic() else (None, None, None)
        tid = f"outside_r{r:g}"
        if count is None:
            report.entries.append(entry_not_applicable(tid, "not monic"))
        elif mres.value <= 1.0 + mres.error_bound:
            report.entries.append(
                entry_report_only(tid, count, bound, note="vacuous at M = 1")
            )
        else:
            report.entries.append(
                entry_from_inequality(tid, count, bound, slack=_REL_SLACK, note="strict count < log M / log r")
            )

    if p.is_integer() and p.is_monic():
        for m in (1, 2, 3, 4):
            for sign in (1, -1):
                report.extend(liouville_selfreciprocal(p, rs, m, sign))
        report.extend(dubickas_selfreciprocal_rhs(p, 1, 0.01, rs))

    if p.eval_exact(1) != 0:
        report.extend(general_separation(p, rs, 1.0))
    else:
        report.entries.append(entry_not_applicable("general_separation", "P(1) = 0"))

    if _selfreciprocal_even_real(p) and p.eval_exact(1) != 0:
        _, _, _, je = jensen_disk_rhs(p, 1.0, 0.3, rs)
        report.extend(je)
        for delta in (1.5, 2.0, math.e ** 2):
            report.extend(
                e
                for e in lower1_bounds(p, rs, 1.0, delta)
                if not (e.theorem_id != "lower1_alpha" and e.verdict is Verdict.NOT_APPLICABLE)
            )
        report.extend(corollary_bounds(p, rs, 1.0))

    se, _ = schinzel_lower(p, rs)
    report.extend(se)
    report.extend(realzero_upper_com(p, rs))
    report.extend(realzero_upper_length(p, rs))

    if p.is_integer():
        report.extend(lemmaK_check(p, mres))
        report.extend(zhang_zagier_check(p, rs))
        if p.is_monic():
            report.extend(around1_report(p, rs))
    return report
