"""Known values of r_s, Gamma and l-invariants, and rule-based verdicts about
Seifert hypersurfaces of 2-knots, ribbonness and negative-definite embeddings.

Every verdict carries the identifiers of the rules it used; ``RULES`` maps
each identifier to the statement applied.
"""

from __future__ import annotations

import ast
import json
import math
import operator
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Union

import jsonschema

from .knot2 import ORIENTATIONS, TwoKnotExpr, format_knot, knot_spectrum
from .ratmod1 import ONE, Mod1Rational, Spectrum
from .seifert import _check_multiplicities
from .spectra import connected_sum_spectrum, r_invariant, seifert_spectrum

INF = math.inf
TABLE_ENV = "CS_SPECTRUM_TABLE"

RULES = {
    "rs-membership": "if r_s(Y), l^s_Y < inf then frac(r_s(Y)) lies in the union of Im cs_{K,j}, 1 <= j <= l^s_Y",
    "gamma-membership": "if Gamma_{-Y}(k), l^k_Y < inf then frac(Gamma_{-Y}(k)) lies in the union of Im cs_{K,j}, 1 <= j <= l^k_Y",
    "rigid-image": "if finite r_s / Gamma_{-Y} values with l = 1 exhaust Lambda_Y ∩ (0,1), then Im cs_{K,j} = Lambda_Y ∩ (0,1] for all j",
    "q-rigidity": "if r_0(Y) = nu(Y) and l^0_Y = 1 then Q^j_K = r_0(Y) for all j",
    "ribbon-trivial": "a ribbon 2-knot has Im cs_{K,j} = {1} for all j",
    "ribbon-obstruction": "a finite r_s (or Gamma_{-Y}(k)) with finite l-invariant and nonzero fractional part rules out ribbon 2-knots with Seifert hypersurface Y",
    "R-positive": "R(a_1,...,a_n) > 0 implies h(Sigma(a_1,...,a_n)) > 0, and h(-Y) = -h(Y)",
    "embedding-h-nonzero": "a Seifert homology sphere with h != 0 does not embed in a negative definite X whose R(X_{j,c}) is connected for some j",
    "connected-sum-rs": "r_s(Y1 # Y2) >= min{r_{s1}(Y1) + s2, r_{s2}(Y2) + s1} for s = s1 + s2",
}


# ---------------------------------------------------------------- descriptors

@dataclass(frozen=True)
class Brieskorn:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _check_multiplicities(self.a))


@dataclass(frozen=True)
class MirrorBrieskorn:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _check_multiplicities(self.a))


@dataclass(frozen=True)
class ConnSumY:
    terms: tuple


YDescriptor = Union[Brieskorn, MirrorBrieskorn, ConnSumY]


def flatten(y: YDescriptor) -> list:
    """Summands of ``y`` as (orientation, sorted multiplicities) pairs."""
    if isinstance(y, Brieskorn):
        return [("plain", tuple(sorted(y.a)))]
    if isinstance(y, MirrorBrieskorn):
        return [("mirror", tuple(sorted(y.a)))]
    if isinstance(y, ConnSumY):
        out = []
        for t in y.terms:
            out.extend(flatten(t))
        return out
    raise TypeError(f"not a Y descriptor: {y!r}")


def mirror_y(y: YDescriptor) -> YDescriptor:
    if isinstance(y, Brieskorn):
        return MirrorBrieskorn(y.a)
    if isinstance(y, MirrorBrieskorn):
        return Brieskorn(y.a)
    return ConnSumY(tuple(mirror_y(t) for t in y.terms))


def format_y(y: YDescriptor) -> str:
    """Canonical text: summands joined by ' # ', repeated runs as 'n*term'."""
    def atom(t):
        name = "brieskorn" if t[0] == "plain" else "mirror-brieskorn"
        return f"{name}({','.join(map(str, t[1]))})"

    if isinstance(y, (Brieskorn, MirrorBrieskorn)):
        name = "brieskorn" if isinstance(y, Brieskorn) else "mirror-brieskorn"
        return f"{name}({','.join(map(str, y.a))})"
    parts, run = [], []
    for t in flatten(y):
        if run and run[-1] != t:
            parts.append(atom(run[0]) if len(run) == 1 else f"{len(run)}*{atom(run[0])}")
            run = []
        run.append(t)
    if run:
        parts.append(atom(run[0]) if len(run) == 1 else f"{len(run)}*{atom(run[0])}")
    return " # ".join(parts)


_YTOK = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>mirror-brieskorn|brieskorn|sum)|(?P<punct>[(),#*]))")


class YSyntaxError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def parse_y(text: str) -> YDescriptor:
    """Parse e.g. ``mirror-brieskorn(2,3,11)``, ``3*mirror-brieskorn(2,3,5,7)``,
    ``mirror-brieskorn(2,3,11) # brieskorn(2,3,7)`` or ``sum(y, y, ...)``."""
    toks, pos = [], 0
    while text[pos:].strip():
        m = _YTOK.match(text, pos)
        if not m:
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise YSyntaxError(f"unexpected character {text[off]!r}", off)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    i = 0

    def take(kind, value=None):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise YSyntaxError(f"expected {value or kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        i += 1
        return tok

    def ints():
        out = [int(take("int")[1])]
        while toks[i][1] == ",":
            take("punct", ",")
            out.append(int(take("int")[1]))
        return tuple(out)

    def term():
        count = 1
        if toks[i][0] == "int":
            count = int(take("int")[1])
            take("punct", "*")
            if count < 1:
                raise YSyntaxError("repeat count must be positive", toks[i - 2][2])
        kind, name, off = toks[i]
        if name == "sum":
            take("name")
            take("punct", "(")
            parts = [expr()]
            while toks[i][1] == ",":
                take("punct", ",")
                parts.append(expr())
            take("punct", ")")
            atom = ConnSumY(tuple(parts))
        elif name in ("brieskorn", "mirror-brieskorn"):
            take("name")
            take("punct", "(")
            a = ints()
            take("punct", ")")
            atom = Brieskorn(a) if name == "brieskorn" else MirrorBrieskorn(a)
        elif name == "(":
            take("punct", "(")
            atom = expr()
            take("punct", ")")
        else:
            raise YSyntaxError(f"expected a summand, found {name or 'end of input'!r}", off)
        return [atom] * count

    def expr():
        parts = term()
        while toks[i][1] == "#":
            take("punct", "#")
            parts.extend(term())
        return parts[0] if len(parts) == 1 else ConnSumY(tuple(parts))

    y = expr()
    take("end")
    return y


@lru_cache(maxsize=256)
def _term_spectrum(orientation: str, a: tuple) -> Spectrum:
    # e^2/4a is the spectrum of -Sigma(a)
    return seifert_spectrum(a, "raw" if orientation == "mirror" else "mirror")


def y_spectrum(y: YDescriptor) -> Spectrum:
    """Lambda_Y ∩ (0,1] computed from the summands."""
    terms = flatten(y)
    spec = _term_spectrum(*terms[0])
    for t in terms[1:]:
        spec = connected_sum_spectrum(spec, _term_spectrum(*t))
    return spec


def y_nu(y: YDescriptor) -> Mod1Rational:
    inner = y_spectrum(y).interior()
    return inner[0] if inner else ONE


# ---------------------------------------------------------------- table

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def eval_value(expr: str, k: Optional[int] = None):
    """Evaluate a table value: 'inf' or an integer-rational expression in k."""
    expr = expr.strip()
    if expr == "inf":
        return INF

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "k":
            if k is None:
                raise ValueError(f"{expr!r} needs the family parameter k")
            return Fraction(k)
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported table expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


def _s_bound(text: str):
    return -INF if text == "-inf" else Fraction(text)


@dataclass(frozen=True)
class SValue:
    s_lo: object
    s_hi: object
    value: object

    def covers(self, s) -> bool:
        return self.s_lo <= s <= self.s_hi


@dataclass(frozen=True)
class KValue:
    k_lo: int
    k_hi: Optional[int]
    value: object

    def covers(self, k: int) -> bool:
        return self.k_lo <= k and (self.k_hi is None or k <= self.k_hi)


@dataclass(frozen=True)
class Certificate:
    """A finite r_s or Gamma_{-Y}(k) value paired with its finite l-invariant."""
    kind: str          # "r_s" or "gamma"
    where: str         # "s in [lo, hi]" or "k = n"
    value: Fraction
    l: int

    @property
    def fractional(self) -> Mod1Rational:
        return Mod1Rational(self.value)

    def describe(self) -> str:
        name = "r_s" if self.kind == "r_s" else "Gamma_{-Y}(k)"
        return f"{name} = {self.value} ({self.where}), l = {self.l}"


def _fmt_s(x) -> str:
    return "-inf" if x == -INF else str(x)


def _fmt_value(v) -> str:
    return "inf" if v == INF else str(v)


@dataclass(frozen=True)
class KnownInvariantEntry:
    id: str
    source: str
    params: tuple
    r_s: tuple
    l_s: tuple
    gamma: tuple
    l_k: tuple
    provisional: bool = False
    r_s_lower_bound: tuple = ()
    claims: str = ""

    def r_at(self, s):
        for item in self.r_s:
            if item.covers(s):
                return item.value
        return None

    def l_s_at(self, s):
        for item in self.l_s:
            if item.covers(s):
                return item.value
        return None

    def gamma_at(self, k: int):
        for item in self.gamma:
            if item.covers(k):
                return item.value
        return None

    def l_k_at(self, k: int):
        for item in self.l_k:
            if item.covers(k):
                return item.value
        return None

    def certificates(self) -> list:
        """Finite (value, l) pairs usable by the membership rules."""
        if self.provisional:
            return []
        out = []
        for item in self.r_s:
            if item.value == INF:
                continue
            for l in self.l_s:
                lo, hi = max(item.s_lo, l.s_lo), min(item.s_hi, l.s_hi)
                if lo <= hi:
                    out.append(Certificate("r_s", f"s in [{_fmt_s(lo)}, {_fmt_s(hi)}]", item.value, l.value))
        for item in self.gamma:
            if item.value == INF:
                continue
            hi = item.k_hi if item.k_hi is not None else item.k_lo
            for k in range(item.k_lo, hi + 1):
                l = self.l_k_at(k)
                if l is not None:
                    out.append(Certificate("gamma", f"k = {k}", item.value, l))
        return out

    def finite_values(self) -> list:
        vals = [x.value for x in self.r_s + self.gamma if x.value != INF]
        return vals

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "provisional": self.provisional,
            "r_s": [{"s": [_fmt_s(x.s_lo), _fmt_s(x.s_hi)], "value": _fmt_value(x.value)} for x in self.r_s],
            "l_s": [{"s": [_fmt_s(x.s_lo), _fmt_s(x.s_hi)], "value": x.value} for x in self.l_s],
            "gamma": [{"k": [x.k_lo, x.k_hi], "value": _fmt_value(x.value)} for x in self.gamma],
            "l_k": [{"k": [x.k_lo, x.k_hi], "value": x.value} for x in self.l_k],
            "r_s_lower_bound": [{"s": [_fmt_s(x.s_lo), _fmt_s(x.s_hi)], "value": _fmt_value(x.value)}
                                for x in self.r_s_lower_bound],
            "claims": self.claims,
            "source": self.source,
        }


class NotFound(LookupError):
    pass


class TableError(ValueError):
    pass


def _term_matches(template: dict, term, k) -> bool:
    orient, mults = term
    if template["orientation"] != orient:
        return False
    want = sorted(eval_value(m, k) for m in template["multiplicities"])
    return [Fraction(x) for x in mults] == want


def _k_candidates(match: dict, terms) -> list:
    if not any("k" in m for t in _templates(match) for m in t["multiplicities"]):
        return [None]
    top = max((max(t[1]) for t in terms), default=0) + 2
    lo = match.get("k_min", 1)
    hi = match.get("k_max")
    return [k for k in range(lo, top + 1) if hi is None or k <= hi]


def _templates(match: dict) -> list:
    if "term" in match:
        return [match["term"]]
    return match.get("terms", [])


def _match_entry(match: dict, terms) -> Optional[dict]:
    """Return the family parameters if ``terms`` matches, else None."""
    kind = match["type"]
    if kind == "connsum_ex":
        return _match_connsum_ex(match, terms)
    for k in _k_candidates(match, terms):
        params = {} if k is None else {"k": k}
        if kind == "single":
            if len(terms) == 1 and _term_matches(match["term"], terms[0], k):
                return params
        elif kind == "copies":
            n = len(terms)
            if n < match.get("n_min", 1) or (match.get("n_max") is not None and n > match["n_max"]):
                continue
            if all(_term_matches(match["term"], t, k) for t in terms):
                return dict(params, n=n)
        elif kind == "pair":
            t1, t2 = match["terms"]
            if len(terms) == 2 and (
                (_term_matches(t1, terms[0], k) and _term_matches(t2, terms[1], k))
                or (_term_matches(t1, terms[1], k) and _term_matches(t2, terms[0], k))
            ):
                return params
    return None


def _match_connsum_ex(match: dict, terms) -> Optional[dict]:
    lo_k = match.get("k_min", 1)
    ks = {(t[1][2] + 1) // 6 for t in terms
          if t[0] == "mirror" and len(t[1]) == 3 and t[1][:2] == (2, 3) and (t[1][2] + 1) % 6 == 0}
    for k in sorted(ks):
        if k < lo_k:
            continue
        core = (2, 3, 6 * k - 1)
        copies = sum(1 for t in terms if t == ("mirror", core))
        if any(t == ("plain", core) for t in terms):
            continue
        others = [t for t in terms if t[1] != core]
        if all(6 * (6 * k - 1) < math.prod(t[1]) < 24 * (6 * k - 1) for t in others):
            return {"k": k, "copies": copies}
    return None


class InvariantTable:
    """Curated known-invariant table; immutable after loading."""

    def __init__(self, doc: dict, origin: str = "<memory>"):
        schema = json.loads(resources.files("csspectra.data").joinpath("invariants.schema.json").read_text())
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as exc:
            raise TableError(f"{origin}: {exc.message}") from exc
        self.doc = doc
        self.origin = origin
        self.version = doc["version"]
        self._entries = tuple(doc["entries"])

    @property
    def entry_ids(self) -> list:
        return [e["id"] for e in self._entries]

    def _instantiate(self, raw: dict, params: dict) -> KnownInvariantEntry:
        k = params.get("k")
        svals = lambda items: tuple(SValue(_s_bound(i["s"][0]), _s_bound(i["s"][1]), eval_value(i["value"], k))
                                    for i in items)
        kvals = lambda items: tuple(KValue(i["k"][0], i["k"][1], eval_value(i["value"], k)) for i in items)
        return KnownInvariantEntry(
            id=raw["id"],
            source=raw["source"],
            params=tuple(sorted(params.items())),
            r_s=svals(raw["r_s"]),
            l_s=tuple(SValue(_s_bound(i["s"][0]), _s_bound(i["s"][1]), i["value"]) for i in raw["l_s"]),
            gamma=kvals(raw["gamma"]),
            l_k=tuple(KValue(i["k"][0], i["k"][1], i["value"]) for i in raw["l_k"]),
            provisional=raw.get("provisional", False),
            r_s_lower_bound=svals(raw.get("r_s_lower_bound", [])),
            claims=raw.get("claims", ""),
        )

    def lookup(self, y: YDescriptor) -> KnownInvariantEntry:
        """First entry matching ``y``; raises NotFound."""
        terms = flatten(y)
        for raw in self._entries:
            params = _match_entry(raw["match"], terms)
            if params is not None:
                return self._instantiate(raw, params)
        raise NotFound(f"no table entry for {format_y(y)}")

    def find(self, y: YDescriptor) -> Optional[KnownInvariantEntry]:
        try:
            return self.lookup(y)
        except NotFound:
            return None

    def samples(self) -> list:
        """Representative descriptors for every entry, used by the consistency check."""
        out = []
        for raw in self._entries:
            match = raw["match"]
            kind = match["type"]
            for k in range(match.get("k_min", 1), match.get("k_min", 1) + 4):
                def build(t):
                    a = tuple(int(eval_value(m, k)) for m in t["multiplicities"])
                    return MirrorBrieskorn(a) if t["orientation"] == "mirror" else Brieskorn(a)
                if kind == "single":
                    out.append(build(match["term"]))
                elif kind == "pair":
                    out.append(ConnSumY(tuple(build(t) for t in match["terms"])))
                elif kind == "copies":
                    n_lo = match.get("n_min", 1)
                    n_hi = match.get("n_max") or n_lo + 2
                    out.extend(ConnSumY((build(match["term"]),) * n) if n > 1 else build(match["term"])
                               for n in range(n_lo, n_hi + 1))
                    break
                elif kind == "connsum_ex":
                    core = MirrorBrieskorn((2, 3, 6 * k - 1))
                    other = _intermediate_brieskorn(k)
                    out.append(ConnSumY((core, core)))
                    if other is not None:
                        out.append(ConnSumY((core, Brieskorn(other))))
                        out.append(ConnSumY((core, MirrorBrieskorn(other), core)))
                if not any("k" in m for t in _templates(match) for m in t["multiplicities"]) and kind != "connsum_ex":
                    break
        return out

    def check_consistency(self) -> list:
        """Every finite table value must lie in the computed spectrum of its Y.

        Returns a list of (descriptor text, entry id, value) problems.
        """
        problems = []
        for y in self.samples():
            entry = self.find(y)
            if entry is None:
                problems.append((format_y(y), None, "sample not matched"))
                continue
            spec = y_spectrum(y)
            for v in entry.finite_values():
                if Mod1Rational(v) not in spec:
                    problems.append((format_y(y), entry.id, str(v)))
        return problems


def _intermediate_brieskorn(k: int) -> Optional[tuple]:
    lo, hi = 6 * (6 * k - 1), 24 * (6 * k - 1)
    for c in range(7, hi):
        for a in ((2, 3, c), (2, 5, c), (3, 4, c)):
            if lo < math.prod(a) < hi and a[-1] > a[-2] and all(math.gcd(x, y) == 1 for x in a for y in a if x != y):
                if a != (2, 3, 6 * k - 1):
                    return a
    return None


def default_table_path():
    return resources.files("csspectra.data").joinpath("invariants.json")


def load_table(path: Optional[Union[str, Path]] = None) -> InvariantTable:
    """Load the invariant table from ``path``, $CS_SPECTRUM_TABLE, or the packaged copy."""
    if path is None:
        path = os.environ.get(TABLE_ENV)
    if path is None:
        src = default_table_path()
        return InvariantTable(json.loads(src.read_text()), "packaged")
    path = Path(path)
    return InvariantTable(json.loads(path.read_text()), str(path))


@lru_cache(maxsize=1)
def default_table() -> InvariantTable:
    return load_table(default_table_path())


# ---------------------------------------------------------------- verdicts

OBSTRUCTED = "Obstructed"
NO_OBSTRUCTION = "NoObstruction"
UNKNOWN = "Unknown"


@dataclass
class Verdict:
    status: str
    reasoning: list = field(default_factory=list)

    @property
    def citations(self) -> list:
        seen = []
        for step in self.reasoning:
            if step["rule"] not in seen:
                seen.append(step["rule"])
        return seen

    def to_json(self) -> dict:
        return {"status": self.status, "citations": self.citations, "reasoning": self.reasoning}


def _step(rule: str, outcome: str, detail: str) -> dict:
    return {"rule": rule, "outcome": outcome, "detail": detail}


def rs_connected_sum_lower_bound(r1, r2, s1=0, s2=0):
    """min{r1 + s2, r2 + s1}, an infinite r making its arm infinite."""
    arm1 = INF if r1 == INF else r1 + s2
    arm2 = INF if r2 == INF else r2 + s1
    return min(arm1, arm2)


def _summary(steps: list, gap: str) -> Verdict:
    outcomes = [s["outcome"] for s in steps]
    if "obstructs" in outcomes:
        return Verdict(OBSTRUCTED, [s for s in steps if s["outcome"] == "obstructs"] +
                       [s for s in steps if s["outcome"] != "obstructs"])
    if "inconclusive" in outcomes or not any(o == "passes" for o in outcomes):
        return Verdict(UNKNOWN, steps + ([_step("gap", "inconclusive", gap)] if gap else []))
    return Verdict(NO_OBSTRUCTION, steps)


def _hypersurface_one(y, k: TwoKnotExpr, orientation: str, table: InvariantTable) -> Verdict:
    res = knot_spectrum(k, 1, orientation)
    F = res.spectrum
    # every implemented constructor has Im cs_{K,j} independent of j,
    # so F is the union over 1 <= j <= l for any l
    steps = []
    entry = table.find(y)
    if entry is None:
        return _summary(steps, f"no table entry for {format_y(y)}")
    steps.append(_step(f"lookup:{entry.id}", "info", entry.source))
    if entry.provisional:
        return _summary(steps, f"entry {entry.id} is provisional: {entry.claims}")
    for cert in entry.certificates():
        rule = "rs-membership" if cert.kind == "r_s" else "gamma-membership"
        r = cert.fractional
        if r in F:
            steps.append(_step(rule, "passes", f"{cert.describe()}: {r} in Im cs_K"))
        elif F.exact:
            steps.append(_step(rule, "obstructs", f"{cert.describe()}: {r} not in Im cs_K = {{{', '.join(F.strings())}}}"))
        else:
            steps.append(_step(rule, "inconclusive",
                               f"{cert.describe()}: {r} not among the certified members of a partial Im cs_K"))
    rigid = rigid_spectrum(y, table)
    if rigid is not None and F.exact:
        if F.values == rigid.values:
            steps.append(_step("rigid-image", "passes", "Im cs_K equals the forced image"))
        else:
            steps.append(_step("rigid-image", "obstructs",
                               f"forced image {{{', '.join(rigid.strings())}}} differs from Im cs_K"))
    q = q_rigidity(y, table)
    if q is not None:
        m = F.minimum()
        if F.exact and m != q:
            steps.append(_step("q-rigidity", "obstructs", f"Q_K = {m} but the forced value is {q}"))
        elif not F.exact and m < q:
            steps.append(_step("q-rigidity", "obstructs", f"Q_K <= {m} < forced value {q}"))
        elif F.exact:
            steps.append(_step("q-rigidity", "passes", f"Q_K = {q}"))
    return _summary(steps, "no usable certificate for Y")


def check_seifert_hypersurface(y: YDescriptor, k: TwoKnotExpr, table: Optional[InvariantTable] = None,
                               orientation: str = "raw") -> dict:
    """Can ``y`` be a Seifert hypersurface of ``k``? Evaluated for both
    orientation conventions of the knot spectrum; ``verdict`` is the one for
    ``orientation``."""
    table = table or default_table()
    by = {o: _hypersurface_one(y, k, o, table) for o in ORIENTATIONS}
    return {"verdict": by[orientation], "by_orientation": by}


def check_ribbon_obstruction(y: YDescriptor, table: Optional[InvariantTable] = None) -> Verdict:
    """Obstructed means no ribbon 2-knot has ``y`` as a Seifert hypersurface."""
    table = table or default_table()
    entry = table.find(y)
    if entry is None:
        return Verdict(UNKNOWN, [_step("gap", "inconclusive", f"no table entry for {format_y(y)}")])
    steps = [_step(f"lookup:{entry.id}", "info", entry.source)]
    if entry.provisional:
        steps.append(_step("gap", "inconclusive", f"entry {entry.id} is provisional: {entry.claims}"))
        return Verdict(UNKNOWN, steps)
    for cert in entry.certificates():
        if cert.value != math.floor(cert.value):
            steps.insert(0, _step("ribbon-obstruction", "obstructs",
                                  f"{cert.describe()}: {cert.fractional} in (0,1) must lie in Im cs_K"))
            steps.append(_step("ribbon-trivial", "info", "a ribbon knot has Im cs_K = {1}"))
            return Verdict(OBSTRUCTED, steps)
    steps.append(_step("gap", "inconclusive", "no finite value with finite l-invariant"))
    return Verdict(UNKNOWN, steps)


def check_embedding_negative_definite(y: YDescriptor, rep_space_connected_for_some_j: bool) -> Verdict:
    """Can ``y`` embed in a negative definite X with R(X_{j,c}) connected for some j?"""
    if not rep_space_connected_for_some_j:
        return Verdict(UNKNOWN, [_step("gap", "inconclusive",
                                       "no j with connected representation space R(X_{j,c}) given")])
    if not isinstance(y, (Brieskorn, MirrorBrieskorn)):
        return Verdict(UNKNOWN, [_step("gap", "inconclusive", "only single Seifert homology spheres are handled")])
    r = r_invariant(y.a)
    if r > 0:
        return Verdict(OBSTRUCTED, [
            _step("R-positive", "info", f"R{tuple(y.a)} = {r} > 0, so h != 0"),
            _step("embedding-h-nonzero", "obstructs", f"{format_y(y)} has h != 0"),
        ])
    return Verdict(UNKNOWN, [_step("gap", "inconclusive", f"R{tuple(y.a)} = {r} does not certify h != 0")])


def rigid_spectrum(y: YDescriptor, table: Optional[InvariantTable] = None) -> Optional[Spectrum]:
    """The forced value of Im cs_{K,j} for every K with Seifert hypersurface ``y``, if certified."""
    table = table or default_table()
    entry = table.find(y)
    if entry is None or entry.provisional:
        return None
    certs = [c for c in entry.certificates() if c.l == 1 and c.value != math.floor(c.value)]
    lam = y_spectrum(y)
    if not certs or {c.fractional for c in certs} != set(lam.interior()):
        return None
    return lam


def q_rigidity(y: YDescriptor, table: Optional[InvariantTable] = None) -> Optional[Mod1Rational]:
    """Forced value of Q^j_K when r_0(Y) = nu(Y) and l^0_Y = 1."""
    table = table or default_table()
    entry = table.find(y)
    if entry is None or entry.provisional:
        return None
    r0, l0 = entry.r_at(0), entry.l_s_at(0)
    if r0 is None or r0 == INF or l0 != 1:
        return None
    if not 0 < r0 <= 1 or Mod1Rational(r0) != y_nu(y):
        return None
    return Mod1Rational(r0)


def mapping_torus_spectrum(p: int, q: int, r: int, monodromy: str = "tau", j: int = 1,
                           orientation: str = "raw") -> Spectrum:
    """Im cs of the j-th cyclic cover of the mapping torus of tau or iota on Sigma(p,q,r).

    Both monodromies act trivially on the flat connections, so the result is the
    Brieskorn spectrum for every j. ``raw`` returns the e^2/4a values, which is
    how the (2,3,5) case is usually quoted ({1/120, 49/120, 1})."""
    if monodromy not in ("tau", "iota"):
        raise ValueError("monodromy must be 'tau' or 'iota'")
    if j < 1:
        raise ValueError("j must be positive")
    return seifert_spectrum((p, q, r), orientation)


def lookup_invariants(y: YDescriptor, table: Optional[InvariantTable] = None) -> KnownInvariantEntry:
    return (table or default_table()).lookup(y)
