"""Cyclotomic machinery, irreducibility probing, and small-measure-set
classification with the seven-property zero-geometry audit."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import sympy

from .measure import MeasureResult, mahler
from .polycore import Polynomial, structural_flags
from .rootfind import RootSet, roots

__all__ = [
    "THETA0",
    "IrreducibilityVerdict",
    "IrreducibilityStatus",
    "EthetaVerdict",
    "cyclotomic",
    "cyclotomic_factor",
    "irreducibility_probe",
    "classify_E_theta",
    "is_squarefree",
]

# real root of x^3 - x - 1, Smyth's bound for non-self-reciprocal polynomials
THETA0 = 1.3247179572447460


class IrreducibilityStatus(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: IrreducibilityStatus
    witness: str
    factor: Polynomial | None = None


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Polynomial:
    """Exact n-th cyclotomic polynomial via recursive division of x^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    num = Polynomial([-1] + [0] * (n - 1) + [1])
    for m in range(1, n):
        if n % m == 0:
            q, r = num.divmod(cyclotomic(m))
            assert r.is_zero()
            num = q
    return num


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    return int(sympy.totient(n))


def cyclotomic_factor(p: Polynomial):
    """Least n with Phi_n | P (exactly), or None.

    Scanning n <= 2 d^2 suffices: phi(n) >= sqrt(n/2), so phi(n) <= d forces
    n <= 2 d^2."""
    if not p.is_integer():
        raise ValueError("cyclotomic_factor requires integer coefficients")
    d = p.degree
    if d < 1:
        return None
    for n in range(1, 2 * d * d + 1):
        if _totient(n) > d:
            continue
        phi = cyclotomic(n)
        if phi.divides(p):
            return n, phi
    return None


def is_squarefree(p: Polynomial) -> bool:
    """Exact: gcd(P, P') is constant."""
    a, b = p, p.derivative()
    while not b.is_zero():
        a, b = b, a % b
    return a.degree == 0


def _sympy_poly(p: Polynomial, modulus=None):
    x = sympy.Symbol("x")
    coeffs = [int(c) for c in reversed(p.coeffs)]
    if modulus is None:
        return sympy.Poly(coeffs, x)
    return sympy.Poly(coeffs, x, modulus=modulus)


def _from_sympy(sp) -> Polynomial:
    return Polynomial(list(reversed([Fraction(str(c)) for c in sp.all_coeffs()])))


def _rational_root(p: Polynomial):
    """A linear integer factor (qx - r) with r/q a rational root, or None."""
    a0 = abs(int(p[0]))
    ad = abs(int(p.coeffs[-1]))
    if a0 == 0:
        return Polynomial([0, 1])

    def divisors(n):
        out = []
        for i in range(1, int(math.isqrt(n)) + 1):
            if n % i == 0:
                out.extend((i, n // i))
        return sorted(set(out))

    for q in divisors(ad):
        for r in divisors(a0):
            for s in (1, -1):
                if p.eval_exact(Fraction(s * r, q)) == 0:
                    return Polynomial([-s * r, q])
    return None


def irreducibility_probe(
    p: Polynomial, prime_budget: int = 10, degree_cap_for_factor: int = 64
) -> IrreducibilityVerdict:
    """Three-stage probe over Z: mod-p reductions, rational-root/cyclotomic
    screens, then full rational factorization up to the degree cap."""
    if not p.is_integer():
        raise ValueError("irreducibility probe requires integer coefficients")
    if p.content() != 1:
        raise ValueError("irreducibility probe requires content 1")
    d = p.degree
    if d <= 0:
        return IrreducibilityVerdict(IrreducibilityStatus.REDUCIBLE, "constant")
    if d == 1:
        return IrreducibilityVerdict(IrreducibilityStatus.IRREDUCIBLE, "degree 1")

    # stage 1: irreducible mod some small prime not dividing the lead
    lead = abs(int(p.coeffs[-1]))
    tried = 0
    q = 2
    while tried < prime_budget:
        q = sympy.nextprime(q)
        if lead % q == 0:
            continue
        tried += 1
        if _sympy_poly(p, modulus=q).is_irreducible:
            return IrreducibilityVerdict(
                IrreducibilityStatus.IRREDUCIBLE, f"irreducible mod {q}"
            )

    # stage 2: rational roots and cyclotomic factors
    lin = _rational_root(p)
    if lin is not None and lin.degree < d:
        return IrreducibilityVerdict(
            IrreducibilityStatus.REDUCIBLE, "rational root", lin
        )
    cyc = cyclotomic_factor(p)
    if cyc is not None and cyc[1].degree < d:
        return IrreducibilityVerdict(
            IrreducibilityStatus.REDUCIBLE, f"cyclotomic factor Phi_{cyc[0]}", cyc[1]
        )

    # stage 3: full factorization over Z (Zassenhaus-style) up to the cap
    if d <= degree_cap_for_factor:
        _, factors = _sympy_poly(p).factor_list()
        if len(factors) == 1 and factors[0][1] == 1:
            return IrreducibilityVerdict(
                IrreducibilityStatus.IRREDUCIBLE, "full rational factorization"
            )
        fpoly = _from_sympy(factors[0][0])
        return IrreducibilityVerdict(
            IrreducibilityStatus.REDUCIBLE, "rational factorization", fpoly
        )
    return IrreducibilityVerdict(
        IrreducibilityStatus.UNKNOWN,
        f"degree {d} exceeds factorization cap {degree_cap_for_factor}",
    )


@dataclass
class EthetaVerdict:
    member: bool
    conditional: bool
    failures: list[str]
    theta: float
    measure: MeasureResult | None
    property_audit: dict[str, str] = field(default_factory=dict)


_AUDIT_PASS = "pass"
_AUDIT_FAIL = "fail"
_AUDIT_NA = "not-applicable"


def classify_E_theta(
    p: Polynomial,
    theta: float,
    r: float = 1.1,
    precision_bits: int = 128,
    degree_cap_for_factor: int = 64,
) -> EthetaVerdict:
    """Membership in the set of monic irreducible integer polynomials with
    measure in (1, theta], primitivity (c1) and sign normalization (c2);
    members get the seven-property zero-geometry audit."""
    if not (1.0 < theta <= THETA0 + 1e-15):
        raise ValueError(f"theta must lie in (1, {THETA0}]")

    failures: list[str] = []
    conditional = False
    if not p.is_integer():
        failures.append("nonInteger")
        return EthetaVerdict(False, False, failures, theta, None)
    if not p.is_monic():
        failures.append("nonMonic")

    flags = structural_flags(p)
    if flags.primitive_c1 is False:
        failures.append("notPrimitiveC1")
    if flags.sign_c2 is False:
        failures.append("signC2Fail")

    verdict = None
    if p.is_monic() and p.degree >= 1 and p.content() == 1:
        verdict = irreducibility_probe(p, degree_cap_for_factor=degree_cap_for_factor)
        if verdict.status is IrreducibilityStatus.REDUCIBLE:
            failures.append("reducible")
        elif verdict.status is IrreducibilityStatus.UNKNOWN:
            conditional = True

    mres = None
    if p.degree >= 1:
        bits = precision_bits
        mres = mahler(p, bits)
        # escalate while the theta boundary is straddled
        while abs(mres.value - theta) <= mres.error_bound and bits < 1024:
            bits *= 2
            mres = mahler(p, bits)

        cyc = cyclotomic_factor(p) if p.is_integer() else None
        is_cyclotomic = cyc is not None and cyc[1] == p
        is_x = p == Polynomial([0, 1])
        if is_cyclotomic or is_x:
            # Kronecker: measure exactly 1
            failures.append("measureOutOfRange")
        elif verdict is not None and verdict.status is IrreducibilityStatus.IRREDUCIBLE:
            # irreducible, non-cyclotomic, not x: M > 1 exactly (Kronecker);
            # only the upper boundary needs the numeric value
            if mres.value > theta + mres.error_bound:
                failures.append("measureOutOfRange")
        elif not (1.0 + mres.error_bound < mres.value <= theta + mres.error_bound):
            failures.append("measureOutOfRange")
    else:
        failures.append("measureOutOfRange")

    member = not failures and not conditional
    out = EthetaVerdict(member, conditional, failures, theta, mres)
    if member:
        out.property_audit = _audit_properties(p, theta, r, precision_bits)
    return out


def _audit_properties(p: Polynomial, theta: float, r: float, precision_bits: int):
    rs = roots(p, precision_bits)
    n = p.degree // 2
    audit = {}

    audit["simple_zeros"] = (
        _AUDIT_PASS if all(rt.multiplicity == 1 for rt in rs.roots) else _AUDIT_FAIL
    )

    # closure under conjugation and inversion within paired error radii; the
    # comparison must run at working precision or 1/conj() noise dominates
    ok = True
    with mp.workprec(precision_bits + 32):
        for rt in rs.roots:
            for target in (mp.conj(rt.value), 1 / mp.conj(rt.value)):
                if not any(
                    abs(s.value - target)
                    <= max(s.error_radius + rt.error_radius, 1e-30)
                    for s in rs.roots
                ):
                    ok = False
    audit["symmetry_circle_and_real_axis"] = _AUDIT_PASS if ok else _AUDIT_FAIL

    tol = 1e-12
    moduli = [float(abs(rt.value)) for rt in rs.roots]
    audit["annulus_theta"] = (
        _AUDIT_PASS
        if all(1 / theta - tol <= a <= theta + tol for a in moduli)
        else _AUDIT_FAIL
    )

    sq = math.sqrt(theta)
    nonreal = [
        float(abs(rt.value))
        for rt in rs.roots
        if abs(mp.im(rt.value)) > max(rt.error_radius, 1e-30)
    ]
    audit["nonreal_annulus_sqrt_theta"] = (
        _AUDIT_PASS
        if all(1 / sq - tol <= a <= sq + tol for a in nonreal)
        else _AUDIT_FAIL
    )

    if r > 1:
        inside = sum(
            rt.multiplicity
            for rt, a in zip(rs.roots, moduli)
            if 1 / r <= a <= r
        )
        need = 2 * (n - math.log(theta) / math.log(r))
        audit["annulus_count"] = _AUDIT_PASS if inside > need else _AUDIT_FAIL
    else:
        audit["annulus_count"] = _AUDIT_NA

    audit["no_root_of_unity"] = (
        _AUDIT_PASS if cyclotomic_factor(p) is None else _AUDIT_FAIL
    )

    off_axis = all(
        abs(mp.re(rt.value)) > rt.error_radius for rt in rs.roots
    )
    audit["off_imaginary_axis"] = _AUDIT_PASS if off_axis else _AUDIT_FAIL
    return audit
