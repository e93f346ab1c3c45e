"""Spectra of the model operators: flat tori, round spheres, the oscillator.

A :class:`Spectrum` is a value-semantics description (name plus parameters);
eigenvalues are produced on demand up to a cutoff, so copies are cheap and
safe to share.  Each spectrum also carries a polynomial upper bound for its
counting function, ``N(lam) <= c (lam + a)**p``, which spectral sums use to
bound their truncated tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, TextIO, Tuple

import numpy as np
from scipy import special

from .errors import DomainError, EnumerationRangeError


@dataclass(frozen=True)
class CountBound:
    """``N(lam) <= coeff * (lam + offset)**power`` for ``lam >= 0``."""

    coeff: float
    offset: float
    power: float

    def __call__(self, lam):
        return self.coeff * (np.maximum(lam, 0.0) + self.offset) ** self.power

    def derivative(self, lam):
        return self.coeff * self.power * (np.maximum(lam, 0.0) + self.offset) ** (self.power - 1)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (non-decreasing) with multiplicities, produced lazily.

    ``horizon`` is the largest eigenvalue the generator may be asked for
    (``inf`` for closed-form families).  ``dimension``, ``order`` and
    ``volume`` describe the operator for the asymptotic predictors.
    """

    name: str
    dimension: int
    order: int
    volume: float
    generator: Callable[[float], Tuple[np.ndarray, np.ndarray]] = field(repr=False, compare=False)
    bound: Optional[CountBound] = field(default=None, repr=False, compare=False)
    horizon: float = math.inf
    shift: float = 0.0
    rank: int = 1
    params: tuple = ()

    def eigenpairs(self, upto: float) -> Tuple[np.ndarray, np.ndarray]:
        """All ``(eigenvalue, multiplicity)`` with eigenvalue ``<= upto``."""
        if upto > self.horizon:
            raise EnumerationRangeError(
                f"{self.name}: requested eigenvalues up to {upto:g}, horizon is {self.horizon:g}"
            )
        lam, mult = self.generator(upto)
        return lam, mult * self.rank if self.rank != 1 else mult

    def __iter__(self) -> Iterator[Tuple[float, int]]:
        """Iterate pairs in order; unbounded families iterate forever."""
        lo, cut = -math.inf, 64.0
        while True:
            top = min(cut, self.horizon)
            lam, mult = self.eigenpairs(top)
            sel = lam > lo
            for v, m in zip(lam[sel], mult[sel]):
                yield (v.item(), int(m))
            if top >= self.horizon:
                return
            lo, cut = top, cut * 4.0

    def with_horizon(self, horizon: float) -> "Spectrum":
        return Spectrum(
            self.name, self.dimension, self.order, self.volume, self.generator,
            self.bound, min(horizon, self.horizon), self.shift, self.rank, self.params,
        )


# --------------------------------------------------------------------------
# flat tori
# --------------------------------------------------------------------------


@lru_cache(maxsize=32)
def _sum_of_squares_counts(n: int, q_max: int) -> np.ndarray:
    # r_n(q) for q = 0..q_max by direct enumeration over each coordinate
    squares = np.arange(0, math.isqrt(q_max) + 1) ** 2
    r = np.zeros(q_max + 1, dtype=np.int64)
    r[0] = 1
    for _ in range(n):
        nxt = r.copy()
        for s in squares[1:]:
            nxt[s:] += 2 * r[: q_max + 1 - s]
        r = nxt
    r.setflags(write=False)
    return r


def sum_of_squares_counts(n: int, q_max: int) -> np.ndarray:
    """``r_n(q) = #{k in Z^n : |k|^2 = q}`` for ``q = 0..q_max``."""
    if n < 1:
        raise DomainError("dimension must be >= 1")
    return _sum_of_squares_counts(int(n), int(q_max))


def torus_spectrum(n: int, q_max: Optional[int] = None) -> Spectrum:
    """Flat torus ``R^n / (2 pi Z)^n``: eigenvalues ``|k|^2``, ``k in Z^n``.

    Only eigenvalues that occur (``r_n(q) > 0``) are emitted.  ``q_max``
    caps the enumeration; ``None`` leaves it unbounded.
    """
    if n < 1:
        raise DomainError("dimension must be >= 1")

    def generate(upto: float):
        q = int(math.floor(upto))
        if q < 0:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        # round the table size up so nearby queries share the cache
        size = max(64, 1 << (q.bit_length()))
        r = sum_of_squares_counts(n, size)[: q + 1]
        lam = np.nonzero(r)[0]
        return lam, r[lam]

    # #{|k|^2 <= lam} <= (2 sqrt(lam) + 1)^n <= 3^n (lam + 1)^(n/2)
    return Spectrum(
        name=f"torus{n}",
        dimension=n,
        order=2,
        volume=(2 * math.pi) ** n,
        generator=generate,
        bound=CountBound(3.0**n, 1.0, n / 2),
        horizon=math.inf if q_max is None else float(q_max),
        params=(("q_max", q_max),),
    )


# --------------------------------------------------------------------------
# spheres
# --------------------------------------------------------------------------


def sphere_multiplicity(n: int, l: int) -> int:
    """Dimension of degree-``l`` spherical harmonics on ``S^n``."""
    return math.comb(l + n, n) - (math.comb(l + n - 2, n) if l >= 2 else 0)


def sphere_volume(n: int) -> float:
    """Volume of the round unit ``S^n``."""
    return 2 * math.pi ** ((n + 1) / 2) / math.gamma((n + 1) / 2)


def sphere_spectrum(n: int, l_max: Optional[int] = None, shift: float = 0.0) -> Spectrum:
    """Laplacian on the round ``S^n`` (plus ``shift``): ``l(l+n-1) + shift``."""
    if n < 2:
        raise DomainError("sphere dimension must be >= 2")

    def generate(upto: float):
        top = upto - shift
        if top < 0:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        # largest l with l(l+n-1) <= top
        L = int((-(n - 1) + math.sqrt((n - 1) ** 2 + 4 * top)) / 2) + 1
        while L * (L + n - 1) > top:
            L -= 1
        if l_max is not None:
            L = min(L, l_max)
        l = np.arange(0, L + 1, dtype=np.int64)
        mult = np.array([sphere_multiplicity(n, int(i)) for i in l], dtype=np.int64)
        lam = l * (l + n - 1)
        if shift == int(shift):
            lam = lam + int(shift)
        else:
            lam = lam + shift
        return lam, mult

    horizon = math.inf if l_max is None else float(l_max * (l_max + n - 1) + shift)
    # N <= 2 (L + n)^n / n! with L <= sqrt(lam), and sqrt(lam) + n <= (n+1) sqrt(lam+1)
    bound = CountBound(2.0 * (n + 1) ** n / math.factorial(n), 1.0, n / 2)
    name = f"sphere{n}" if shift == 0 else f"sphere{n}+{shift:g}"
    return Spectrum(
        name=name,
        dimension=n,
        order=2,
        volume=sphere_volume(n),
        generator=generate,
        bound=bound,
        horizon=horizon,
        shift=shift,
        params=(("l_max", l_max), ("shift", shift)),
    )


# --------------------------------------------------------------------------
# harmonic oscillator and the real line
# --------------------------------------------------------------------------


def oscillator_spectrum(l_max: Optional[int] = None) -> Spectrum:
    """``H = (-d^2/dx^2 + x^2)/2`` on the line: eigenvalues ``n + 1/2``, simple."""

    def generate(upto: float):
        top = math.floor(upto - 0.5)
        if l_max is not None:
            top = min(top, l_max)
        idx = np.arange(0, max(top, -1) + 1)
        return idx + 0.5, np.ones_like(idx)

    return Spectrum(
        name="oscillator",
        dimension=1,
        order=2,
        volume=math.inf,
        generator=generate,
        bound=CountBound(1.0, 1.0, 1.0),
        horizon=math.inf if l_max is None else l_max + 0.5,
        params=(("l_max", l_max),),
    )


def line_density(lam: float) -> float:
    """Diagonal spectral density of ``-d^2/dx^2`` on the real line."""
    if lam <= 0:
        raise DomainError("line density is defined for lam > 0")
    return 1.0 / (2.0 * math.pi * math.sqrt(lam))


# --------------------------------------------------------------------------
# tabulated spectra and the text interchange format
# --------------------------------------------------------------------------


def tabulated_spectrum(eigenvalues, multiplicities, name: str = "tabulated",
                       dimension: int = 0, order: int = 2, volume: float = math.nan) -> Spectrum:
    """A finite spectrum; its horizon is its largest eigenvalue."""
    lam = np.asarray(eigenvalues, dtype=float)
    mult = np.asarray(multiplicities, dtype=np.int64)
    if lam.shape != mult.shape:
        raise DomainError("eigenvalue and multiplicity columns differ in length")
    if lam.size and np.any(np.diff(lam) < 0):
        raise DomainError("eigenvalues must be non-decreasing")
    if np.any(mult < 1):
        raise DomainError("multiplicities must be positive")

    def generate(upto: float):
        k = int(np.searchsorted(lam, upto, side="right"))
        return lam[:k], mult[:k]

    return Spectrum(
        name=name,
        dimension=dimension,
        order=order,
        volume=volume,
        generator=generate,
        horizon=float(lam[-1]) if lam.size else 0.0,
    )


def write_spectrum(s: Spectrum, upto: float, fh: TextIO) -> int:
    """Write ``eigenvalue<TAB>multiplicity`` lines; returns the line count."""
    lam, mult = s.eigenpairs(upto)
    for v, m in zip(lam, mult):
        v = v.item()
        text = str(int(v)) if float(v).is_integer() else repr(float(v))
        fh.write(f"{text}\t{int(m)}\n")
    return int(lam.size)


def read_spectrum(fh: TextIO, name: str = "file", dimension: int = 0, volume: float = math.nan) -> Spectrum:
    """Parse the ``eigenvalue<TAB>multiplicity`` format (``#`` comments allowed)."""
    lam, mult = [], []
    for lineno, line in enumerate(fh, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected 'eigenvalue<TAB>multiplicity'")
        lam.append(float(parts[0]))
        mult.append(int(parts[1]))
    return tabulated_spectrum(lam, mult, name=name, dimension=dimension, volume=volume)


def model_spectrum(name: str, dim: Optional[int] = None) -> Spectrum:
    """Look up a model by CLI name: torus, sphere, sphere2, sphere3, sphere3-shifted, oscillator."""
    key = name.lower()
    if key == "torus":
        return torus_spectrum(dim or 2)
    if key == "sphere":
        return sphere_spectrum(dim or 2)
    if key in ("sphere2", "s2"):
        return sphere_spectrum(2)
    if key in ("sphere3", "s3"):
        return sphere_spectrum(3)
    if key in ("sphere3-shifted", "s3-shifted", "su2"):
        return sphere_spectrum(3, shift=1)
    if key == "oscillator":
        return oscillator_spectrum()
    raise DomainError(f"unknown model {name!r}")


__all__ = [
    "CountBound",
    "Spectrum",
    "line_density",
    "model_spectrum",
    "oscillator_spectrum",
    "read_spectrum",
    "sphere_multiplicity",
    "sphere_spectrum",
    "sphere_volume",
    "sum_of_squares_counts",
    "tabulated_spectrum",
    "torus_spectrum",
    "write_spectrum",
]
