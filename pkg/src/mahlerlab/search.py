"""Exhaustive enumeration of monic self-reciprocal integer polynomials and
search for minimal Mahler measures above 1.

Restricting to self-reciprocal polynomials misses nothing below Smyth's bound
theta_0 among monic integer polynomials with P(0)P(1) != 0, which is why every
published small-measure search uses the same normalization."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .measure import MeasureResult, mahler, mahler_graeffe
from .polycore import Polynomial, StructureFlags, structural_flags
from .structure import cyclotomic_factor

__all__ = ["SearchRecord", "SearchSpaceError", "enumerate_selfreciprocal", "search_min_mahler"]

SIZE_CAP = 10 ** 9


class SearchSpaceError(ValueError):
    pass


@dataclass(frozen=True)
class SearchRecord:
    polynomial: Polynomial
    measure: MeasureResult
    flags: StructureFlags
    rank: int


def enumerate_selfreciprocal(degree: int, height: int, size_cap: int = SIZE_CAP):
    """All monic palindromic integer polynomials of the given even degree with
    a_0 = 1 and free coefficients a_1..a_n in [-height, height], in
    deterministic lexicographic order."""
    if degree < 2 or degree % 2:
        raise ValueError("degree must be even and >= 2")
    if height < 1:
        raise ValueError("height must be >= 1")
    n = degree // 2
    size = (2 * height + 1) ** n
    if size > size_cap:
        raise SearchSpaceError(
            f"search space {size} exceeds cap {size_cap}; pass size_cap to override"
        )
    span = range(-height, height + 1)
    for free in itertools.product(span, repeat=n):
        # coefficients 1, a1..a_{n-1}, a_n, a_{n-1}..a1, 1
        coeffs = (1,) + free + tuple(reversed(free[:-1])) + (1,)
        yield Polynomial(coeffs)


def _prefilter_rejects(p: Polynomial, theta: float) -> bool:
    """Cheap Graeffe screen: reject when even the bracketing lower bound for
    M(P) exceeds theta * 1.01."""
    est = mahler_graeffe(p, k=6, precision_bits=64)
    lower = est.value * 2.0 ** (-p.degree / 64.0)
    return lower > theta * 1.01


def search_min_mahler(
    degree_cap: int,
    height: int,
    theta: float,
    precision_bits: int = 128,
    size_cap: int = SIZE_CAP,
    progress=None,
) -> list[SearchRecord]:
    """Records with 1 < M(P) < theta over all even degrees up to the cap,
    sorted ascending by measure.

    Polynomials with a cyclotomic factor are dropped, the sign normalization
    (c2) is applied by the x -> -x substitution, non-primitive rewrites
    Q(x^m) and the x -> -x duplicates are deduplicated in reporting."""
    if degree_cap < 2:
        raise ValueError("degree cap must be >= 2")
    seen: set[tuple] = set()
    found: list[tuple[Polynomial, MeasureResult, StructureFlags]] = []
    degrees = [d for d in range(2, degree_cap + 1) if d % 2 == 0]
    blocks_total = len(degrees)
    for bi, deg in enumerate(degrees):
        for p in enumerate_selfreciprocal(deg, height, size_cap=size_cap):
            if _prefilter_rejects(p, theta):
                continue
            if cyclotomic_factor(p) is not None:
                continue
            q = p.substitute_neg_x()
            flags = structural_flags(p)
            qflags = structural_flags(q)
            # pick the x -> -x representative satisfying the sign condition;
            # when the condition cannot disambiguate (first nonzero coefficient
            # at an even index) take the lexicographically larger tuple
            if flags.sign_c2 != qflags.sign_c2:
                if qflags.sign_c2:
                    p, flags = q, qflags
            elif q.coeffs > p.coeffs:
                p, flags = q, qflags
            if not flags.primitive_c1:
                continue  # its primitive base has the same measure
            if p.coeffs in seen:
                continue
            seen.add(p.coeffs)
            m = mahler(p, precision_bits)
            if m.value <= 1.0 + m.error_bound:
                continue
            if m.value >= theta:
                continue
            found.append((p, m, flags))
        if progress is not None:
            progress(bi + 1, blocks_total)
    found.sort(key=lambda t: t[1].value)
    return [
        SearchRecord(p, m, flags, rank)
        for rank, (p, m, flags) in enumerate(found, start=1)
    ]
