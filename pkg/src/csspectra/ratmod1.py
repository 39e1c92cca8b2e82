"""Exact rationals modulo 1, normalized into (0, 1], and finite spectra of them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable


@total_ordering
class Mod1Rational:
    """A class in Q/Z, stored by its representative in (0, 1].

    The zero class is represented by 1.
    """

    __slots__ = ("_value",)

    def __init__(self, x):
        x = Fraction(x)
        r = x - (x.numerator // x.denominator)
        object.__setattr__(self, "_value", r if r else Fraction(1))

    def __setattr__(self, name, value):
        raise AttributeError("Mod1Rational is immutable")

    @property
    def value(self) -> Fraction:
        return self._value

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    def is_one(self) -> bool:
        return self._value == 1

    @classmethod
    def parse(cls, text: str) -> "Mod1Rational":
        return cls(Fraction(text.strip()))

    def __add__(self, other):
        if isinstance(other, Mod1Rational):
            return Mod1Rational(self._value + other._value)
        return Mod1Rational(self._value + Fraction(other))

    __radd__ = __add__

    def __neg__(self):
        return Mod1Rational(-self._value)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Mod1Rational) else -Fraction(other))

    def __eq__(self, other):
        if isinstance(other, Mod1Rational):
            return self._value == other._value
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Mod1Rational):
            return self._value < other._value
        return NotImplemented

    def __hash__(self):
        return hash(("Mod1Rational", self._value))

    def __str__(self):
        v = self._value
        return "1" if v == 1 else f"{v.numerator}/{v.denominator}"

    def __repr__(self):
        return f"Mod1Rational({str(self)!r})"


ONE = Mod1Rational(1)


def normalize_mod1(x) -> Mod1Rational:
    """Return the representative of ``x`` mod 1 in (0, 1]."""
    return Mod1Rational(x)


def mirror_value(x: Mod1Rational) -> Mod1Rational:
    # 1 - x, with 1 fixed
    return Mod1Rational(1 - x.value) if not x.is_one() else ONE


class SpectrumKind(enum.Enum):
    EXACT = "Exact"
    LOWER_SET = "LowerSet"


@dataclass(frozen=True)
class Spectrum:
    """Finite set of Mod1Rational values, kept sorted and deduplicated.

    EXACT means the set is the full image; LOWER_SET means every member is
    certified but members may be missing.
    """

    values: tuple
    kind: SpectrumKind = SpectrumKind.EXACT

    def __post_init__(self):
        vals = tuple(sorted({v if isinstance(v, Mod1Rational) else Mod1Rational(v)
                             for v in self.values}))
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable, kind: SpectrumKind = SpectrumKind.EXACT) -> "Spectrum":
        return cls(tuple(values), kind)

    @property
    def exact(self) -> bool:
        return self.kind is SpectrumKind.EXACT

    def __contains__(self, x) -> bool:
        if not isinstance(x, Mod1Rational):
            x = Mod1Rational(x)
        return x in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def interior(self) -> tuple:
        """Members lying in the open interval (0, 1)."""
        return tuple(v for v in self.values if not v.is_one())

    def minimum(self) -> Mod1Rational:
        return self.values[0]

    def issubset(self, other: "Spectrum") -> bool:
        return set(self.values) <= set(other.values)

    def with_kind(self, kind: SpectrumKind) -> "Spectrum":
        return Spectrum(self.values, kind)

    def strings(self) -> list:
        return [str(v) for v in self.values]

    def to_json(self) -> dict:
        return {"values": self.strings(), "kind": self.kind.value}

    @classmethod
    def from_json(cls, obj: dict) -> "Spectrum":
        return cls(tuple(Mod1Rational.parse(s) for s in obj["values"]),
                   SpectrumKind(obj.get("kind", "Exact")))


def mirror_spectrum(s: Spectrum) -> Spectrum:
    """{1 - r : r in s, r != 1} together with {1}; kind is preserved."""
    return Spectrum(tuple(mirror_value(v) for v in s.interior()) + (ONE,), s.kind)


def spectrum_union(s1: Spectrum, s2: Spectrum, exact: bool = False) -> Spectrum:
    """Set union. The result is EXACT only when the caller asserts it."""
    kind = SpectrumKind.EXACT if exact else SpectrumKind.LOWER_SET
    return Spectrum(s1.values + s2.values, kind)
