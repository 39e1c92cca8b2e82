"""Seifert invariants of Sigma(a_1, ..., a_n) and enumeration of the
components of irreducible SU(2) flat connections by rotation numbers.

A representation sends the exceptional-fibre generator x_i to the conjugacy
class of diag(exp(i pi l_i / a_i), exp(-i pi l_i / a_i)), 0 <= l_i <= a_i,
and the central fibre h to +-1.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

log = logging.getLogger(__name__)


class NotPairwiseCoprime(ValueError):
    pass


class InvalidSeifertData(ValueError):
    pass


def _check_multiplicities(a) -> tuple:
    a = tuple(int(x) for x in a)
    if len(a) < 3:
        raise InvalidSeifertData(f"need at least 3 exceptional fibres, got {len(a)}")
    if any(x < 2 for x in a):
        raise InvalidSeifertData(f"multiplicities must be >= 2: {a}")
    for x, y in itertools.combinations(a, 2):
        if gcd(x, y) != 1:
            raise NotPairwiseCoprime(f"{x} and {y} are not coprime in {a}")
    return a


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariant (b, (a_1, b_1), ..., (a_n, b_n)).

    ``a`` holds the multiplicities with the even one (if any) first, and
    ``bs`` the matching b_i. We always take b = 0: with the relations
    x_i^{a_i} = h^{-b_i}, x_1...x_n = 1 the first homology has order
    |sum_k b_k a/a_k| = |1 + ab|, which is 1 only for b = 0.
    """

    a: tuple
    bs: tuple
    b: int = 0

    def __post_init__(self):
        a = _check_multiplicities(self.a)
        bs = tuple(int(x) for x in self.bs)
        if len(bs) != len(a):
            raise InvalidSeifertData("a and bs differ in length")
        total = self.order
        if sum(bk * (total // ak) for ak, bk in zip(a, bs)) != 1 + total * self.b:
            raise InvalidSeifertData(f"a*sum(b_k/a_k) != 1 + a*b for a={a}, bs={bs}, b={self.b}")
        evens = [i for i, x in enumerate(a) if x % 2 == 0]
        if evens:
            if evens != [0]:
                raise InvalidSeifertData("the even multiplicity must be indexed first")
            if any(x % 2 for x in bs[1:]):
                raise InvalidSeifertData("b_j must be even for j != 1 when a_1 is even")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "bs", bs)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def order(self) -> int:
        """The product a = a_1 ... a_n."""
        return prod(self.a)

    @classmethod
    def from_invariants(cls, a, bs, b: int = 0) -> "SeifertData":
        return cls(tuple(a), tuple(bs), b)


def _normal_order(a) -> tuple:
    evens = [x for x in a if x % 2 == 0]
    return tuple(evens) + tuple(x for x in a if x % 2)


def seifert_data(a) -> SeifertData:
    """Canonical Seifert invariant for Sigma(a_1, ..., a_n).

    The multiplicities are reordered so the even one (if any) comes first.
    Among presentations with b = 0, b_j in [-a_j, a_j] for j >= 2 (even when
    a_1 is even) and b_1 solved from the defining relation, the one with the
    least sum |b_i| is returned, ties broken lexicographically.
    """
    a = _normal_order(_check_multiplicities(a))
    total = prod(a)
    head = total // a[0]
    need_even = a[0] % 2 == 0
    ranges = []
    for aj in a[1:]:
        cof = total // aj
        inv = pow(cof, -1, aj)
        cands = [inv + t * aj for t in (-2, -1, 0, 1) if abs(inv + t * aj) <= aj]
        if need_even:
            cands = [c for c in cands if c % 2 == 0]
        ranges.append(cands)
    best = None
    for tail in itertools.product(*ranges):
        rest = 1 - sum(bj * (total // aj) for aj, bj in zip(a[1:], tail))
        if rest % head:
            continue
        bs = (rest // head,) + tail
        key = (sum(map(abs, bs)), bs)
        if best is None or key < best:
            best = key
    # coprime input always admits such a presentation
    assert best is not None, f"no even normalization for {a}"
    return SeifertData(a, best[1], 0)


def product_angle_interval(t1, t2) -> tuple:
    """Rotation angles (in units of pi) attained by g1 g2 when g1, g2 run over
    the SU(2) conjugacy classes of angles pi*t1, pi*t2 (t in [0, 1])."""
    t1, t2 = Fraction(t1), Fraction(t2)
    return abs(t1 - t2), min(t1 + t2, 2 - t1 - t2)


def _fold_step(lo, hi, t):
    # image of [lo, hi] under the product rule with a fixed angle t
    if lo <= t <= hi:
        low = Fraction(0)
    else:
        low = min(abs(t - lo), abs(t - hi))
    if lo <= 1 - t <= hi:
        high = Fraction(1)
    elif hi < 1 - t:
        high = hi + t
    else:
        high = 2 - lo - t
    return low, high


class Existence(enum.Enum):
    NONE = "None"
    DEGENERATE = "Degenerate"
    IRREDUCIBLE = "Irreducible"


def reachable_interval(angles) -> tuple:
    """Closed interval of angles of a product g_1...g_k, g_i in the class of angles[i]."""
    lo = hi = Fraction(angles[0])
    for t in angles[1:]:
        lo, hi = _fold_step(lo, hi, Fraction(t))
    return lo, hi


def exists_representation(data: SeifertData, l) -> Existence:
    """Decide whether rotation numbers ``l`` are realized with x_1...x_n = 1.

    Central entries (l_i in {0, a_i}) are factored out: each l_i = a_i
    contributes a sign -1, which reflects the angle of the last non-central
    element t -> 1 - t. The remaining angles are folded with the product rule.
    """
    if len(l) != data.n:
        raise ValueError("rotation tuple has wrong length")
    angles = []
    sign = 1
    for li, ai in zip(l, data.a):
        if not 0 <= li <= ai:
            raise ValueError(f"rotation number {li} outside [0, {ai}]")
        if li == 0:
            continue
        if li == ai:
            sign = -sign
            continue
        angles.append(Fraction(li, ai))
    if len(angles) < 2:
        # a product of central elements, or a single non-central element, cannot be 1
        # unless everything is central (the reducible class)
        return Existence.DEGENERATE if not angles and sign == 1 else Existence.NONE
    target = angles[-1] if sign == 1 else 1 - angles[-1]
    lo, hi = reachable_interval(angles[:-1])
    if lo < target < hi:
        return Existence.IRREDUCIBLE if len(angles) >= 3 else Existence.DEGENERATE
    if target == lo or target == hi:
        return Existence.DEGENERATE
    return Existence.NONE


@dataclass(frozen=True, order=True)
class RotationNumbers:
    l: tuple
    holonomy_sign: int



@dataclass(frozen=True)
class FlatComponent:
    rot: RotationNumbers
    e: int
    dimension: int

    @property
    def l(self) -> tuple:
        return self.rot.l

    @property
    def holonomy_sign(self) -> int:
        return self.rot.holonomy_sign

    @property
    def nontrivial(self) -> int:
        """Number of non-central rotation numbers, m = dimension/2 + 3."""
        return self.dimension // 2 + 3

    @property
    def topology(self) -> str:
        if self.dimension == 0:
            return "point"
        if self.dimension == 2:
            return "sphere2"
        return f"higher({self.dimension})"


def rotation_e(data: SeifertData, l) -> int:
    """e = sum_i (a / a_i) l_i."""
    a = data.order
    return sum((a // ai) * li for ai, li in zip(data.a, l))


def _parity_ranges(data: SeifertData, sign: int):
    # (-1)^{l_i} = sign^{b_i}
    out = []
    for ai, bi in zip(data.a, data.bs):
        parity = 0 if sign == 1 else bi % 2
        out.append(range(parity, ai + 1, 2))
    return out


def enumerate_components(data: SeifertData) -> list:
    """All components of irreducible flat connections, sorted by
    (e mod 4a, rotation tuple)."""
    a = data.order
    found = {}
    for sign in (1, -1):
        for l in itertools.product(*_parity_ranges(data, sign)):
            m = sum(1 for li, ai in zip(l, data.a) if 0 < li < ai)
            if m < 3:
                continue
            if exists_representation(data, l) is not Existence.IRREDUCIBLE:
                continue
            if l in found:
                log.warning("rotation tuple %s realized for both holonomy signs", l)
                continue
            found[l] = FlatComponent(RotationNumbers(l, sign), rotation_e(data, l), 2 * m - 6)
    return sorted(found.values(), key=lambda c: (c.e % (4 * a), c.l))
