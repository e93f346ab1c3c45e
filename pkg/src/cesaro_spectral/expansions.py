"""Asymptotic expansions as finite lists of ``coeff * x**exponent * log(x)**logpow`` terms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .series import fraction_str


@dataclass(frozen=True)
class Term:
    coeff: object
    exponent: object
    logpow: int = 0

    def value(self, x: float) -> float:
        v = float(self.coeff) * x ** float(self.exponent)
        if self.logpow:
            v *= math.log(x) ** self.logpow
        return v


def _num_record(x) -> dict:
    rec = {"value": float(x)}
    if isinstance(x, (Fraction, int)):
        rec["exact"] = fraction_str(Fraction(x))
    return rec


@dataclass(frozen=True)
class AsymptoticExpansion:
    """An expansion in ``lam -> inf`` or ``t -> 0+``.

    ``sense`` is ``"ordinary"`` or ``"cesaro"``; Cesaro-sense expansions of a
    specific order carry it in ``cesaro_order``.  Terms are kept merged and
    ordered from dominant to subdominant for the declared variable.
    """

    terms: Tuple[Term, ...] = ()
    variable: str = "lam"
    sense: str = "ordinary"
    cesaro_order: Optional[int] = None

    def __post_init__(self):
        merged: dict = {}
        for t in self.terms:
            key = (Fraction(t.exponent) if isinstance(t.exponent, (int, Fraction)) else t.exponent, t.logpow)
            merged[key] = merged.get(key, 0) + t.coeff
        keep = [Term(c, e, lp) for (e, lp), c in merged.items() if c != 0]
        if self.variable == "t":
            keep.sort(key=lambda t: (float(t.exponent), -t.logpow))
        else:
            keep.sort(key=lambda t: (-float(t.exponent), -t.logpow))
        object.__setattr__(self, "terms", tuple(keep))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __call__(self, x: float) -> float:
        return math.fsum(t.value(x) for t in self.terms)

    evaluate = __call__

    def __add__(self, other: "AsymptoticExpansion") -> "AsymptoticExpansion":
        if self.variable != other.variable:
            raise ValueError("cannot add expansions in different variables")
        return AsymptoticExpansion(self.terms + other.terms, self.variable, self.sense, self.cesaro_order)

    def scale(self, c) -> "AsymptoticExpansion":
        return AsymptoticExpansion(
            tuple(Term(t.coeff * c, t.exponent, t.logpow) for t in self.terms),
            self.variable, self.sense, self.cesaro_order,
        )

    def truncate(self, n_terms: int) -> "AsymptoticExpansion":
        return AsymptoticExpansion(self.terms[:n_terms], self.variable, self.sense, self.cesaro_order)

    def coefficient(self, exponent, logpow: int = 0):
        for t in self.terms:
            if float(t.exponent) == float(exponent) and t.logpow == logpow:
                return t.coeff
        return 0

    @property
    def has_log(self) -> bool:
        return any(t.logpow for t in self.terms)

    def to_record(self) -> dict:
        rec = {
            "variable": self.variable,
            "sense": self.sense if self.cesaro_order is None else f"{self.sense}:{self.cesaro_order}",
            "terms": [
                {"coeff": _num_record(t.coeff), "exponent": _num_record(t.exponent), "logpow": t.logpow}
                for t in self.terms
            ],
        }
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "AsymptoticExpansion":
        def num(r):
            return Fraction(r["exact"]) if "exact" in r else r["value"]

        sense = rec.get("sense", "ordinary")
        order = None
        if ":" in sense:
            sense, o = sense.split(":")
            order = int(o)
        return cls(
            tuple(Term(num(t["coeff"]), num(t["exponent"]), int(t.get("logpow", 0))) for t in rec["terms"]),
            rec.get("variable", "lam"),
            sense,
            order,
        )


def expansion(pairs: Iterable, variable: str = "lam", sense: str = "ordinary") -> AsymptoticExpansion:
    """Build from ``(coeff, exponent)`` or ``(coeff, exponent, logpow)`` tuples."""
    return AsymptoticExpansion(tuple(Term(*p) for p in pairs), variable, sense)


SmallTExpansion = AsymptoticExpansion

__all__ = ["AsymptoticExpansion", "SmallTExpansion", "Term", "expansion"]

