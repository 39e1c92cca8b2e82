"""2-knot expressions and their Chern-Simons images Im cs_{K,j}.

Grammar (ASCII, whitespace-insensitive)::

    expr := "unknot" | "ribbon" | "tspin" "(" base "," int ")"
          | "sum" "(" expr "," expr ")" | "mirror" "(" expr ")"
    base := "torus" "(" int "," int ")"
          | "montesinos" "(" int "," int "," int ")"
          | "twobridge" "(" int "/" int ")"

Base spectra under ``orientation="raw"``: the twisted m-spun torus knot and
the 2-twist-spun Montesinos knot take the critical values of Sigma(p,q,m)
(resp. Sigma(p,q,r)), i.e. the mirror of the e^2/4a set; the 2-twist-spun
2-bridge knot takes the lens-space set as the formula gives it.
``orientation="mirror"`` reflects every base spectrum.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Union

from .ratmod1 import ONE, Mod1Rational, Spectrum, SpectrumKind, mirror_spectrum, spectrum_union
from .spectra import lens_spectrum, seifert_spectrum, square_condition

ORIENTATIONS = ("raw", "mirror")


class KnotSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ConstraintError(ValueError):
    pass


class UnsupportedKnot(ValueError):
    pass


def _pairwise_coprime(*xs) -> bool:
    return all(gcd(x, y) == 1 for i, x in enumerate(xs) for y in xs[i + 1:])


@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class Ribbon:
    pass


@dataclass(frozen=True)
class TwistSpunTorus:
    p: int
    q: int
    m: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2 or self.m < 1:
            raise ConstraintError(f"torus({self.p},{self.q}) spun {self.m} times: need p,q >= 2, m >= 1")
        if not _pairwise_coprime(self.p, self.q, self.m):
            raise ConstraintError(f"p, q, m = {self.p}, {self.q}, {self.m} are not pairwise coprime")


@dataclass(frozen=True)
class TwistSpunMontesinos:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise ConstraintError("Montesinos parameters must be >= 2")
        if not _pairwise_coprime(self.p, self.q, self.r):
            raise ConstraintError(f"{self.p}, {self.q}, {self.r} are not pairwise coprime")


@dataclass(frozen=True)
class TwistSpunTwoBridge:
    p: int
    q: int

    def __post_init__(self):
        if gcd(self.p, self.q) != 1:
            raise ConstraintError(f"gcd({self.p}, {self.q}) != 1")
        if self.p < 3 or self.p % 2 == 0:
            raise ConstraintError(f"2-bridge parameter p = {self.p} must be odd and >= 3")
        if not square_condition(self.p):
            raise ConstraintError(f"p = {self.p} has a nontrivial square root of 1 mod p")


@dataclass(frozen=True)
class ConnSum:
    left: "TwoKnotExpr"
    right: "TwoKnotExpr"


@dataclass(frozen=True)
class Mirror:
    inner: "TwoKnotExpr"


TwoKnotExpr = Union[Unknot, Ribbon, TwistSpunTorus, TwistSpunMontesinos,
                    TwistSpunTwoBridge, ConnSum, Mirror]


_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[a-z][a-z0-9_-]*)|(?P<punct>[(),/]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise KnotSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise KnotSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take("int")[1])

    def expr(self):
        kind, name, off = self.take("name")
        if name == "unknot":
            return Unknot()
        if name == "ribbon":
            return Ribbon()
        if name == "mirror":
            self.take("punct", "(")
            inner = self.expr()
            self.take("punct", ")")
            return Mirror(inner)
        if name == "sum":
            self.take("punct", "(")
            left = self.expr()
            self.take("punct", ",")
            right = self.expr()
            self.take("punct", ")")
            return ConnSum(left, right)
        if name == "tspin":
            self.take("punct", "(")
            base = self.base()
            self.take("punct", ",")
            m = self.integer()
            self.take("punct", ")")
            kind_, args = base
            if kind_ == "torus":
                return TwistSpunTorus(args[0], args[1], m)
            if m != 2:
                raise UnsupportedKnot(f"{kind_} knots are supported only with twist count 2, got {m}")
            if kind_ == "montesinos":
                return TwistSpunMontesinos(*args)
            return TwistSpunTwoBridge(*args)
        raise KnotSyntaxError(f"unknown constructor {name!r}", off)

    def base(self):
        _, name, off = self.take("name")
        self.take("punct", "(")
        if name == "torus":
            args = (self.integer(), self.take("punct", ",") and self.integer())
        elif name == "montesinos":
            p = self.integer()
            self.take("punct", ",")
            q = self.integer()
            self.take("punct", ",")
            args = (p, q, self.integer())
        elif name == "twobridge":
            p = self.integer()
            self.take("punct", "/")
            args = (p, self.integer())
        else:
            raise KnotSyntaxError(f"unknown base knot {name!r}", off)
        self.take("punct", ")")
        return name, args


def parse_knot(text: str) -> TwoKnotExpr:
    """Parse a 2-knot expression.

    Raises KnotSyntaxError (with ``offset``), ConstraintError or UnsupportedKnot.
    """
    p = _Parser(text)
    expr = p.expr()
    p.take("end")
    return expr


def format_knot(k: TwoKnotExpr) -> str:
    """Canonical printed form; ``parse_knot(format_knot(k)) == k``."""
    if isinstance(k, Unknot):
        return "unknot"
    if isinstance(k, Ribbon):
        return "ribbon"
    if isinstance(k, TwistSpunTorus):
        return f"tspin(torus({k.p},{k.q}),{k.m})"
    if isinstance(k, TwistSpunMontesinos):
        return f"tspin(montesinos({k.p},{k.q},{k.r}),2)"
    if isinstance(k, TwistSpunTwoBridge):
        return f"tspin(twobridge({k.p}/{k.q}),2)"
    if isinstance(k, ConnSum):
        return f"sum({format_knot(k.left)},{format_knot(k.right)})"
    if isinstance(k, Mirror):
        return f"mirror({format_knot(k.inner)})"
    raise TypeError(f"not a 2-knot expression: {k!r}")


def is_ribbon(k: TwoKnotExpr) -> bool:
    """Syntactic ribbon test: unknot, ribbon, 1-twist spins, and sums/mirrors of these."""
    if isinstance(k, (Unknot, Ribbon)):
        return True
    if isinstance(k, TwistSpunTorus):
        return k.m == 1
    if isinstance(k, ConnSum):
        return is_ribbon(k.left) and is_ribbon(k.right)
    if isinstance(k, Mirror):
        return is_ribbon(k.inner)
    return False


@dataclass(frozen=True)
class KnotSpectrumResult:
    spectrum: Spectrum
    j: int
    q_invariant: Mod1Rational
    q_role: str
    irreducible_rep_lower_bound: int

    def to_json(self) -> dict:
        return {
            "spectrum": self.spectrum.strings(),
            "kind": self.spectrum.kind.value,
            "j": self.j,
            "q_invariant": str(self.q_invariant),
            "q_role": self.q_role,
            "irreducible_rep_lower_bound": self.irreducible_rep_lower_bound,
        }


TRIVIAL = Spectrum((ONE,))


def _spectrum(k: TwoKnotExpr, orientation: str) -> Spectrum:
    if is_ribbon(k):
        return TRIVIAL
    if isinstance(k, TwistSpunTorus):
        base = seifert_spectrum((k.p, k.q, k.m), "mirror")
    elif isinstance(k, TwistSpunMontesinos):
        base = seifert_spectrum((k.p, k.q, k.r), "mirror")
    elif isinstance(k, TwistSpunTwoBridge):
        base = lens_spectrum(k.p, k.q)
    elif isinstance(k, Mirror):
        return mirror_spectrum(_spectrum(k.inner, orientation))
    elif isinstance(k, ConnSum):
        # only the inclusion of both summand images is known
        return spectrum_union(_spectrum(k.left, orientation), _spectrum(k.right, orientation))
    else:
        raise TypeError(f"not a 2-knot expression: {k!r}")
    return mirror_spectrum(base) if orientation == "mirror" else base


def knot_spectrum(k: TwoKnotExpr, j: int = 1, orientation: str = "raw") -> KnotSpectrumResult:
    """Im cs_{K,j} for the implemented constructors (independent of j)."""
    if j < 1:
        raise ValueError("j must be a positive integer")
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    spec = _spectrum(k, orientation)
    return KnotSpectrumResult(
        spectrum=spec,
        j=j,
        q_invariant=spec.minimum(),
        q_role="MinExact" if spec.exact else "UpperBound",
        irreducible_rep_lower_bound=2 * len(spec.interior()),
    )


def check_j_monotonicity(k: TwoKnotExpr, j: int, m: int, orientation: str = "raw") -> bool:
    """Im cs_{K,j} is contained in Im cs_{K,mj}."""
    small = knot_spectrum(k, j, orientation).spectrum
    big = knot_spectrum(k, m * j, orientation).spectrum
    return small.issubset(big)
