"""Chern-Simons values, Floer gradings and counting invariants of Seifert
homology spheres, lens-space spectra, and connected-sum combinators.

Orientation: the values e^2/(4a) form the critical-value set of
-Sigma(a_1, ..., a_n); the mirror of that set is the one of Sigma(a_1, ..., a_n).
The raw Floer gradings below are those of the same orientation, and
``orientation="mirror"`` returns -3 - ind (mod 8).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Optional

import mpmath

from .ratmod1 import ONE, Mod1Rational, Spectrum, SpectrumKind, mirror_spectrum, mirror_value
from .seifert import FlatComponent, SeifertData, enumerate_components, seifert_data

WORKING_DPS = 60
INDEX_TOL = mpmath.mpf("1e-6")
R_TOL = mpmath.mpf("1e-20")

# Sign convention of the index formula
#   ind = s_e * 2e^2/a + s_c * (3 - m) + sum_i (2/a_i) sum_k cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi e k / a_i)
# (s_e, s_c, m) frozen by calibration against the 22 components of Sigma(2,3,5,7);
# m counts the non-central rotation numbers. See tests/test_calibration.py.
INDEX_CONVENTION = (1, 1, "nontrivial")


class NonIntegral(ArithmeticError):
    pass


class NonRational(ArithmeticError):
    pass


class NotCoprime(ValueError):
    pass


class InexactInput(ValueError):
    pass


def cs_value(data: SeifertData, c: FlatComponent) -> Mod1Rational:
    """e^2 / (4a) mod 1."""
    a = data.order
    return Mod1Rational(Fraction(c.e * c.e % (4 * a), 4 * a))


@lru_cache(maxsize=None)
def _cot_weights(a: int, ai: int, dps: int) -> tuple:
    with mpmath.workdps(dps):
        return tuple(mpmath.cot(mpmath.pi * a * k / ai ** 2) * mpmath.cot(mpmath.pi * k / ai)
                     for k in range(1, ai))


def _trig_sum(a: int, mults, e: int, dps: int = WORKING_DPS):
    """sum_i (2/a_i) sum_k cot(pi a k/a_i^2) cot(pi k/a_i) sin^2(pi e k/a_i)."""
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for ai in mults:
            if e % ai == 0:
                continue  # every sin^2 term vanishes
            w = _cot_weights(a, ai, dps)
            s = mpmath.fsum(w[k - 1] * mpmath.sin(mpmath.pi * e * k / ai) ** 2 for k in range(1, ai))
            total += 2 * s / ai
        return total


def index_raw_value(data: SeifertData, c: FlatComponent, convention=INDEX_CONVENTION,
                    dps: int = WORKING_DPS):
    """Unreduced real value of the index formula under ``convention``."""
    s_e, s_c, m_kind = convention
    m = c.nontrivial if m_kind == "nontrivial" else data.n
    a = data.order
    with mpmath.workdps(dps):
        return (s_e * mpmath.mpf(2 * c.e * c.e) / a + s_c * (3 - m)
                + _trig_sum(a, data.a, c.e, dps))


def floer_index(data: SeifertData, c: FlatComponent, orientation: str = "raw",
                convention=INDEX_CONVENTION) -> int:
    """Floer grading mod 8 of the component ``c``.

    Raises NonIntegral if the formula is not within 1e-6 of an integer.
    """
    with mpmath.workdps(WORKING_DPS):
        v = index_raw_value(data, c, convention)
        n = int(mpmath.nint(v))
        if abs(v - n) > INDEX_TOL:
            raise NonIntegral(f"index of {c.l} evaluates to {mpmath.nstr(v, 20)}")
    if orientation == "raw":
        return n % 8
    if orientation == "mirror":
        return (-3 - n) % 8
    raise ValueError(f"unknown orientation {orientation!r}")


def _reconstruct(x, max_den: int) -> Fraction:
    with mpmath.workdps(WORKING_DPS):
        q = Fraction(mpmath.nstr(x, WORKING_DPS - 5, strip_zeros=False)).limit_denominator(max_den)
        if abs(x - mpmath.mpf(q.numerator) / q.denominator) > R_TOL:
            raise NonRational(f"{mpmath.nstr(x, 30)} has no rational form with denominator <= {max_den}")
    return q


def r_invariant(a) -> Fraction:
    """R(a_1, ..., a_n) = 2/a - 3 + n + sum_i (2/a_i) sum_k cot(pi a k/a_i^2) cot(pi k/a_i) sin^2(pi k/a_i),
    returned as an exact rational with denominator dividing a."""
    data = seifert_data(a)
    total = data.order
    with mpmath.workdps(WORKING_DPS):
        x = mpmath.mpf(2) / total - 3 + data.n + _trig_sum(total, data.a, 1)
        q = _reconstruct(x, total)
    if total % q.denominator:
        raise NonRational(f"R({a}) = {q} has denominator not dividing {total}")
    return q


@dataclass(frozen=True)
class ComponentRecord:
    component: FlatComponent
    cs: Mod1Rational
    index: int


@dataclass(frozen=True)
class InvariantRecord:
    data: SeifertData
    components: tuple
    spectrum: Spectrum
    nu: Mod1Rational
    l_total: Optional[int]
    l_refined: dict = field(hash=False)
    casson_abs: Optional[int]
    r_invariant: Fraction
    orientation: str = "raw"


def _nu(spec: Spectrum) -> Mod1Rational:
    inner = spec.interior()
    return inner[0] if inner else ONE


def seifert_record(a, orientation: str = "raw") -> InvariantRecord:
    """Full invariant record of Sigma(a) (``raw``: the e^2/4a orientation)."""
    data = seifert_data(a)
    comps = enumerate_components(data)
    rows = []
    for c in comps:
        v = cs_value(data, c)
        if orientation == "mirror":
            v = mirror_value(v)
        rows.append(ComponentRecord(c, v, floer_index(data, c, orientation)))
    spectrum = Spectrum(tuple(r.cs for r in rows) + (ONE,), SpectrumKind.EXACT)
    if any(c.dimension > 2 for c in comps):
        l_total = None
    else:
        l_total = sum(1 if c.dimension == 0 else 2 for c in comps)
    refined = Counter()
    if l_total is not None:
        for r in rows:
            refined[(r.cs, r.index)] += 1 if r.component.dimension == 0 else 2
    return InvariantRecord(
        data=data,
        components=tuple(rows),
        spectrum=spectrum,
        nu=_nu(spectrum),
        l_total=l_total,
        l_refined=dict(refined),
        casson_abs=None if l_total is None else l_total // 2,
        r_invariant=r_invariant(a),
        orientation=orientation,
    )


def seifert_spectrum(a, orientation: str = "raw") -> Spectrum:
    """Spectrum only (no index or R evaluation)."""
    data = seifert_data(a)
    spec = Spectrum(tuple(cs_value(data, c) for c in enumerate_components(data)) + (ONE,))
    return mirror_spectrum(spec) if orientation == "mirror" else spec


def lens_spectrum(p: int, q: int) -> Spectrum:
    """{-n^2 r / p mod 1 : 0 <= n <= ceil(p/2)} with q r = -1 mod p."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    r = (-pow(q, -1, p)) % p
    top = -(-p // 2)
    return Spectrum(tuple(Mod1Rational(Fraction(-n * n * r, p)) for n in range(top + 1)))


def square_condition(p: int) -> bool:
    """True iff no s in {2, ..., p-2} has p | s^2 - 1."""
    return all((s * s - 1) % p for s in range(2, p - 1))


def connected_sum_spectrum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Critical values of Y1 # Y2: pairwise sums plus both summand spectra."""
    if not (s1.exact and s2.exact):
        raise InexactInput("connected sum needs exact spectra")
    sums = tuple(x + y for x in s1 for y in s2)
    return Spectrum(sums + s1.values + s2.values, SpectrumKind.EXACT)


def l_connected_sum_bound(l1: int, l2: int) -> int:
    return 4 * l1 * l2 + l1 + l2


def l_refined_connected_sum_bound(t1: dict, t2: dict, r: Mod1Rational, i: int) -> int:
    """4 * sum_{r = r1 + r2 (mod 1), i = i1 + i2 (mod 8)} t1 t2 + t1(r, i) + t2(r, i)."""
    i %= 8
    cross = 0
    for (r1, i1), n1 in t1.items():
        for (r2, i2), n2 in t2.items():
            if r1 + r2 == r and (i1 + i2) % 8 == i:
                cross += n1 * n2
    return 4 * cross + t1.get((r, i), 0) + t2.get((r, i), 0)
