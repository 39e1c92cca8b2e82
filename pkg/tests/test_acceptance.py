import io
import json
import random
import time
from fractions import Fraction
from math import gcd, prod

import mpmath
import pytest
from dataclasses import replace
from hypothesis import given, settings, strategies as st

from csspectra.cli import main
from csspectra.knot2 import (
    ConnSum, Mirror, Ribbon, TwistSpunMontesinos, TwistSpunTorus, TwistSpunTwoBridge, Unknot,
    check_j_monotonicity, knot_spectrum, parse_knot,
)
from csspectra.obstruct import (
    NO_OBSTRUCTION, OBSTRUCTED, MirrorBrieskorn, check_seifert_hypersurface, default_table,
    parse_y, q_rigidity, rigid_spectrum,
)
from csspectra.ratmod1 import ONE, Mod1Rational, Spectrum, mirror_spectrum, spectrum_union
from csspectra.seifert import SeifertData, enumerate_components, seifert_data
from csspectra.spectra import cs_value, lens_spectrum, r_invariant, seifert_record, seifert_spectrum, square_condition

from expected import SPHERES, TABLE1, brieskorn_spectrum_closed_form
from su2_oracle import find_signatures

F = Fraction


def cli_result(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, json.loads(buf.getvalue())


@pytest.mark.acceptance(1)
def test_table1_reproduction():
    t0 = time.perf_counter()
    rec = seifert_record((2, 3, 5, 7))
    elapsed = time.perf_counter() - t0
    got = {r.component.l: (r.cs, r.index) for r in rec.components}
    assert set(got) == set(TABLE1)
    for l, (num, ind) in TABLE1.items():
        assert got[l][0] == Mod1Rational(F(num, 840)), l
        assert got[l][1] == ind, l
    assert elapsed < 1.0


@pytest.mark.acceptance(2)
def test_census_2357():
    t0 = time.perf_counter()
    rec = seifert_record((2, 3, 5, 7))
    elapsed = time.perf_counter() - t0
    points = {r.component.l for r in rec.components if r.component.topology == "point"}
    spheres = {r.component.l for r in rec.components if r.component.topology == "sphere2"}
    assert len(points) == 16 and len(spheres) == 6
    assert spheres == SPHERES
    assert rec.l_total == 28
    assert rec.casson_abs == 14
    assert elapsed < 1.0


@pytest.mark.acceptance(3)
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_brieskorn_family(k):
    t0 = time.perf_counter()
    a = (2, 3, 6 * k - 1)
    rec = seifert_record(a)
    mirror = seifert_record(a, "mirror")
    elapsed = time.perf_counter() - t0
    assert {r.component.l for r in rec.components} == {(1, 2, l) for l in range(k, 5 * k) if l % 2 == 0}
    assert list(rec.spectrum) == brieskorn_spectrum_closed_form(k)
    assert rec.l_total == 2 * k
    # gradings of Sigma(2,3,6k-1) itself, the mirror of the e^2/4a orientation
    assert all(r.index % 2 == 0 for r in mirror.components)
    assert elapsed < 1.0


@pytest.mark.acceptance(4)
def test_two_knot_values():
    code, obj = cli_result("knot", "--expr", "mirror(tspin(torus(2,3),5))", "--orientation", "raw")
    assert code == 0
    assert obj["result"]["spectrum"] == ["1/120", "49/120", "1"]
    assert knot_spectrum(parse_knot("mirror(tspin(torus(2,3),5))")).spectrum.strings() == ["1/120", "49/120", "1"]
    for j in (1, 2, 9):
        assert knot_spectrum(Ribbon(), j).spectrum.strings() == ["1"]
    assert cli_result("knot", "--expr", "ribbon", "--j", "9")[1]["result"]["spectrum"] == ["1"]


@pytest.mark.acceptance(5)
def test_lens_formula():
    assert lens_spectrum(3, 1).strings() == ["1/3", "1"]
    assert mirror_spectrum(lens_spectrum(3, 1)).strings() == ["2/3", "1"]
    assert knot_spectrum(TwistSpunTwoBridge(3, 1), 1, "mirror").spectrum.strings() == ["2/3", "1"]
    assert lens_spectrum(5, 1).strings() == ["1/5", "4/5", "1"]
    assert square_condition(3) is True
    assert square_condition(15) is False


@pytest.mark.acceptance(6)
@settings(max_examples=40, deadline=None)
@given(k=st.integers(2, 5), orientation=st.sampled_from(["raw", "mirror"]), j=st.integers(1, 12))
def test_obstruction_suite_family(k, orientation, j):
    y = MirrorBrieskorn((2, 3, 6 * k - 1))
    res = check_seifert_hypersurface(y, TwistSpunTwoBridge(3, 1))
    assert res["by_orientation"][orientation].status == OBSTRUCTED
    # the certified value 1/(24(6k-1)) is outside Im cs_{K,j} = {1/3, 1} or {2/3, 1}
    r = Mod1Rational(F(1, 24 * (6 * k - 1)))
    assert r not in knot_spectrum(TwistSpunTwoBridge(3, 1), j, orientation).spectrum


@pytest.mark.acceptance(6)
def test_obstruction_suite_poincare():
    y = MirrorBrieskorn((2, 3, 5))
    k = Mirror(TwistSpunTorus(2, 3, 5))
    assert check_seifert_hypersurface(y, k)["verdict"].status == NO_OBSTRUCTION
    assert Mod1Rational(F(1, 120)) in knot_spectrum(k).spectrum


@pytest.mark.acceptance(7)
def test_rigidity():
    assert rigid_spectrum(MirrorBrieskorn((2, 3, 5))).strings() == ["1/120", "49/120", "1"]
    for n in range(1, 5):
        y = parse_y(f"{n}*mirror-brieskorn(2,3,5,7)")
        assert q_rigidity(y) == Mod1Rational(F(1, 840))


@pytest.mark.acceptance(7)
def test_table_consistency():
    assert default_table().check_consistency() == []


def _random_spectrum(rng):
    vals = {Mod1Rational(F(rng.randint(1, 999), rng.randint(1, 999))) for _ in range(rng.randint(0, 12))}
    return Spectrum.of(vals | {ONE})


@pytest.mark.acceptance(8)
def test_mirror_involution_random():
    rng = random.Random(20261016)
    for _ in range(1000):
        s = _random_spectrum(rng)
        assert mirror_spectrum(mirror_spectrum(s)) == s


@pytest.mark.acceptance(8)
def test_union_laws():
    rng = random.Random(7)
    unit = Spectrum.of([ONE])
    for _ in range(300):
        a, b, c = (_random_spectrum(rng) for _ in range(3))
        assert spectrum_union(a, b).values == spectrum_union(b, a).values
        assert spectrum_union(spectrum_union(a, b), c).values == spectrum_union(a, spectrum_union(b, c)).values
        assert spectrum_union(a, a).values == a.values
        assert spectrum_union(a, unit).values == a.values
        assert a.issubset(spectrum_union(a, b))
        assert mirror_spectrum(spectrum_union(a, b)).values == spectrum_union(mirror_spectrum(a), mirror_spectrum(b)).values


KNOTS = [
    Unknot(), Ribbon(), TwistSpunTorus(2, 3, 5), TwistSpunTorus(2, 3, 1), TwistSpunTorus(3, 4, 5),
    TwistSpunMontesinos(2, 3, 7), TwistSpunTwoBridge(3, 1), TwistSpunTwoBridge(5, 2),
    ConnSum(TwistSpunTorus(2, 3, 5), TwistSpunTwoBridge(3, 1)), Mirror(TwistSpunTorus(2, 3, 7)),
]


@pytest.mark.acceptance(8)
@pytest.mark.parametrize("knot", KNOTS, ids=lambda k: type(k).__name__)
def test_j_monotonicity_equality(knot):
    for orientation in ("raw", "mirror"):
        base = knot_spectrum(knot, 1, orientation).spectrum
        for j in range(1, 13):
            assert knot_spectrum(knot, j, orientation).spectrum == base
            for m in range(1, 13):
                assert check_j_monotonicity(knot, j, m, orientation)


@pytest.mark.acceptance(8)
@pytest.mark.parametrize("a", [(2, 3, 5), (2, 3, 7), (2, 3, 11), (3, 4, 5), (2, 5, 7), (2, 3, 5, 7)])
def test_cs_invariant_under_e_shift(a):
    d = seifert_data(a)
    for c in enumerate_components(d):
        for shift in (2 * d.order, -2 * d.order, 6 * d.order):
            assert cs_value(d, replace(c, e=c.e + shift)) == cs_value(d, c)


def _random_triples(n, seed=11):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        t = tuple(rng.randint(2, 17) for _ in range(3))
        if len(set(t)) == 3 and all(gcd(x, y) == 1 for i, x in enumerate(t) for y in t[i + 1:]):
            out.append(t)
    return out


@pytest.mark.acceptance(8)
@pytest.mark.parametrize("a", _random_triples(20))
def test_spectrum_presentation_invariance(a):
    ref = seifert_spectrum(a)
    for perm in ((a[1], a[2], a[0]), (a[2], a[0], a[1]), (a[2], a[1], a[0])):
        assert seifert_spectrum(perm) == ref
    d = seifert_data(a)
    # shift b_2 by 2a_2 and b_3 by -2a_3; parity and the defining relation are kept
    bs = list(d.bs)
    bs[1] += 2 * d.a[1]
    bs[2] -= 2 * d.a[2]
    alt = SeifertData(d.a, tuple(bs))
    alt_spec = Spectrum.of([cs_value(alt, c) for c in enumerate_components(alt)] + [ONE])
    assert alt_spec == ref


@pytest.mark.acceptance(9)
def test_numerical_oracle():
    t0 = time.perf_counter()
    for a in [(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 4, 5)]:
        d = seifert_data(a)
        found = find_signatures(d.a, d.bs, restarts=200)
        expected = {(c.l, c.holonomy_sign) for c in enumerate_components(d)}
        assert found == expected, a
    assert time.perf_counter() - t0 < 60


def _r_direct(a):
    total = prod(a)
    with mpmath.workdps(50):
        s = mpmath.mpf(2) / total - 3 + len(a)
        for ai in a:
            s += 2 * mpmath.fsum(mpmath.cot(mpmath.pi * total * k / ai ** 2) * mpmath.cot(mpmath.pi * k / ai)
                                 * mpmath.sin(mpmath.pi * k / ai) ** 2 for k in range(1, ai)) / ai
        return s


@pytest.mark.acceptance(10)
def test_r_invariant():
    t0 = time.perf_counter()
    r2357 = r_invariant((2, 3, 5, 7))
    r235 = r_invariant((2, 3, 5))
    assert time.perf_counter() - t0 < 1.0
    assert r2357 == 1
    assert r235 > 0
    with mpmath.workdps(50):
        for a, r in (((2, 3, 5, 7), r2357), ((2, 3, 5), r235)):
            assert abs(_r_direct(a) - mpmath.mpf(r.numerator) / r.denominator) < mpmath.mpf("1e-20")
