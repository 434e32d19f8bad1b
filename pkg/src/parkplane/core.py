"""Shared value types: hyperplanes, arrangements, multigraphs, sign vectors.

Scalars are :class:`fractions.Fraction`; nothing in the package rounds.
Vertices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Rational = Fraction

# A sign vector is a tuple of booleans, one per hyperplane in list order.
# PLUS (True) means x_p - x_q > a, i.e. the hyperplane separates the region
# from the fundamental region.
MINUS = False
PLUS = True

SignVector = Tuple[bool, ...]
ParkVec = Tuple[int, ...]
Point = Tuple[Fraction, ...]


class ParkplaneError(Exception):
    """Base class for all errors raised by this package."""


class ZeroConstant(ParkplaneError):
    pass


class EqualIndices(ParkplaneError):
    pass


class DuplicateHyperplane(ParkplaneError):
    pass


class IndexOutOfRange(ParkplaneError):
    pass


class NonPositiveConstant(ParkplaneError):
    pass


class LengthMismatch(ParkplaneError):
    pass


class InfeasibleSigns(ParkplaneError):
    pass


class TooLarge(ParkplaneError):
    pass


class SelfLoop(ParkplaneError):
    pass


def as_rational(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


def format_rational(x: Fraction) -> str:
    """Render as ``num`` for integers and ``num/den`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Hyperplane:
    """The hyperplane ``x_p - x_q = a`` stored with ``a > 0``."""

    p: int
    q: int
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if self.p == self.q:
            raise EqualIndices(f"hyperplane needs two distinct indices, got {self.p}")
        if self.p < 1 or self.q < 1:
            raise IndexOutOfRange(f"indices are 1-based, got ({self.p}, {self.q})")
        if self.a <= 0:
            raise NonPositiveConstant(f"constant must be positive, got {self.a}")

    def value(self, point: Sequence[Fraction]) -> Fraction:
        """``x_p - x_q - a`` at ``point``; negative on the origin side."""
        return point[self.p - 1] - point[self.q - 1] - self.a

    def __str__(self):
        return f"x{self.p} - x{self.q} = {format_rational(self.a)}"


def canonicalize(p: int, q: int, a) -> Hyperplane:
    """Return the hyperplane ``x_p - x_q = a`` in positive-constant form.

    >>> canonicalize(2, 1, Fraction(-1, 2))
    Hyperplane(p=1, q=2, a=Fraction(1, 2))
    """
    a = as_rational(a)
    if p == q:
        raise EqualIndices(f"hyperplane needs two distinct indices, got {p}")
    if a == 0:
        raise ZeroConstant(f"x{p} - x{q} = 0 passes through the origin")
    if a < 0:
        return Hyperplane(q, p, -a)
    return Hyperplane(p, q, a)


@dataclass(frozen=True)
class Arrangement:
    n: int
    hyperplanes: Tuple[Hyperplane, ...] = ()

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        if self.n < 1:
            raise IndexOutOfRange(f"need at least one coordinate, got n={self.n}")
        seen = set()
        for h in hs:
            if not isinstance(h, Hyperplane):
                raise TypeError(f"expected Hyperplane, got {h!r}")
            if h.p > self.n or h.q > self.n:
                raise IndexOutOfRange(f"{h} uses an index above n={self.n}")
            if h in seen:
                raise DuplicateHyperplane(f"{h} appears twice")
            seen.add(h)

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, i):
        return self.hyperplanes[i]

    def check_signs_length(self, sv: Sequence[bool]) -> None:
        if len(sv) != len(self.hyperplanes):
            raise LengthMismatch(
                f"sign vector has length {len(sv)}, arrangement has {len(self.hyperplanes)} hyperplanes"
            )


@dataclass(frozen=True)
class Multigraph:
    """Oriented multigraph on vertices 1..n; ``mult[i-1][j-1]`` counts edges i -> j."""

    n: int
    mult: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(m) for m in row) for row in self.mult)
        object.__setattr__(self, "mult", rows)
        if self.n < 1:
            raise IndexOutOfRange(f"need at least one vertex, got n={self.n}")
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise LengthMismatch(f"multiplicity matrix must be {self.n}x{self.n}")
        for i, row in enumerate(rows):
            if row[i] != 0:
                raise SelfLoop(f"vertex {i + 1} has a self-loop")
            if any(m < 0 for m in row):
                raise ValueError("multiplicities must be non-negative")

    @classmethod
    def zero(cls, n: int) -> "Multigraph":
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int, int]]) -> "Multigraph":
        """Build from ``(i, j, m)`` triples; repeated pairs accumulate."""
        m = [[0] * n for _ in range(n)]
        for i, j, k in edges:
            if i == j:
                raise SelfLoop(f"vertex {i} has a self-loop")
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"edge {i}->{j} outside 1..{n}")
            m[i - 1][j - 1] += k
        return cls(n, tuple(tuple(r) for r in m))

    @classmethod
    def complete(cls, n: int, k: int) -> "Multigraph":
        return cls(n, tuple(tuple(0 if i == j else k for j in range(n)) for i in range(n)))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.mult[i - 1][j - 1]

    def edges(self):
        """Yield ``(i, j, m)`` for every pair with positive multiplicity, row-major."""
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                m = self.mult[i - 1][j - 1]
                if m:
                    yield i, j, m

    def out_degree(self, i: int) -> int:
        return sum(self.mult[i - 1])


def signs_to_str(sv: Sequence[bool]) -> str:
    return "".join("+" if s else "-" for s in sv)


def signs_from_str(text: str) -> SignVector:
    out = []
    for ch in text:
        if ch == "+":
            out.append(PLUS)
        elif ch in "-−":
            out.append(MINUS)
        else:
            raise ValueError(f"bad sign character {ch!r}")
    return tuple(out)


def label_to_str(f: Sequence[int]) -> str:
    """Compact label text (``210``); comma-separated once a value exceeds 9."""
    if all(0 <= v <= 9 for v in f):
        return "".join(str(v) for v in f)
    return ",".join(str(v) for v in f)


def gauge(point: Sequence[Fraction]) -> Point:
    """Translate along (1,...,1) so the last coordinate is zero."""
    last = point[-1]
    return tuple(Fraction(x) - last for x in point)
