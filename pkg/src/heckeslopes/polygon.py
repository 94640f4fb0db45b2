"""Multisets of rational slopes and their Newton polygons.

A finite multiset of rationals is identified with the convex polygon
obtained by sorting the entries weakly increasingly and using them as
successive segment slopes starting from the origin.  Multisets carry a
commutative semiring structure:

* ``oplus`` is multiset union (polygons: concatenation of slope lists,
  re-sorted),
* ``otimes`` is the multiset of all pairwise sums (polygons: every slope
  of one polygon shifted by every slope of the other),

with the empty multiset neutral for ``oplus`` and the singleton ``{0}``
neutral for ``otimes``.  ``dual`` negates every slope.  The partial
order ``leq`` compares polygons of equal rank pointwise: ``S.leq(T)``
holds when the polygon of ``T`` lies on or above the polygon of ``S``
at every integer abscissa, i.e. every partial sum of the sorted slopes
of ``T`` dominates the corresponding partial sum for ``S``.

``frobenius_polygon`` builds the standard two-block families used for
crystalline Frobenius slopes of eigenforms, and ``hodge_polygon`` their
fully ordinary member.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction, str]

__all__ = [
    "SlopeMultiset",
    "EMPTY",
    "TENSOR_IDENTITY",
    "frobenius_polygon",
    "hodge_polygon",
]


class SlopeMultiset:
    """Immutable multiset of rational slopes, kept in sorted order.

    >>> s = SlopeMultiset([0, 1]).otimes(SlopeMultiset([0, 1]))
    >>> str(s)
    '0,1,1,2'
    >>> s.vertices()
    ((Fraction(0, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(0, 1)), (Fraction(3, 1), Fraction(2, 1)), (Fraction(4, 1), Fraction(4, 1)))
    """

    __slots__ = ("_slopes",)

    def __init__(self, slopes: Iterable[Rational] = ()):
        converted = []
        for s in slopes:
            if isinstance(s, float):
                # binary floats are almost never the rational the caller
                # meant; insist on Fraction/int/str to keep slopes exact
                raise TypeError(
                    f"slope {s!r} is a float; pass a Fraction, int, or string"
                )
            converted.append(Fraction(s))
        self._slopes = tuple(sorted(converted))

    @classmethod
    def from_string(cls, text: str) -> "SlopeMultiset":
        """Parse the comma syntax ``"0,1/2,1/2,1"``; empty string is the
        empty multiset."""
        text = text.strip()
        if not text:
            return cls()
        return cls(Fraction(part.strip()) for part in text.split(","))

    # -- basic container protocol ------------------------------------

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return self._slopes

    @property
    def rank(self) -> int:
        """Number of slopes, counted with multiplicity."""
        return len(self._slopes)

    @property
    def integral(self) -> Fraction:
        """Sum of all slopes = height of the polygon's right endpoint."""
        return sum(self._slopes, Fraction(0))

    def __len__(self) -> int:
        return len(self._slopes)

    def __iter__(self):
        return iter(self._slopes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SlopeMultiset):
            return NotImplemented
        return self._slopes == other._slopes

    def __hash__(self) -> int:
        return hash(self._slopes)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self._slopes)

    def __repr__(self) -> str:
        return f"SlopeMultiset('{self}')"

    # -- semiring operations -----------------------------------------

    def oplus(self, other: "SlopeMultiset") -> "SlopeMultiset":
        """Multiset union (concatenation of slope lists)."""
        return SlopeMultiset(self._slopes + other._slopes)

    def otimes(self, other: "SlopeMultiset") -> "SlopeMultiset":
        """Multiset of all pairwise sums.

        The result has rank ``self.rank * other.rank``; the empty
        multiset annihilates, ``{0}`` is the identity.
        """
        return SlopeMultiset(a + b for a in self._slopes for b in other._slopes)

    __add__ = oplus
    __mul__ = otimes

    def dual(self) -> "SlopeMultiset":
        """Entrywise negation."""
        return SlopeMultiset(-s for s in self._slopes)

    def scale(self, c: Rational) -> "SlopeMultiset":
        """Multiply every slope by the rational ``c``."""
        c = Fraction(c)
        return SlopeMultiset(c * s for s in self._slopes)

    def pow_oplus(self, k: int) -> "SlopeMultiset":
        """``k``-fold multiset union with itself; ``k = 0`` gives the
        empty multiset."""
        if k < 0:
            raise ValueError("pow_oplus needs k >= 0")
        return SlopeMultiset(self._slopes * k)

    def pow_otimes(self, k: int) -> "SlopeMultiset":
        """``k``-fold pairwise-sum power; ``k = 0`` gives ``{0}``, the
        otimes identity.  Rank grows like ``rank ** k``."""
        if k < 0:
            raise ValueError("pow_otimes needs k >= 0")
        out = TENSOR_IDENTITY
        for _ in range(k):
            out = out.otimes(self)
        return out

    # -- polygon geometry ----------------------------------------------

    def cumulative_points(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """All lattice points ``(i, s_1 + ... + s_i)`` of the polygon,
        one per slope plus the origin (no merging of equal slopes)."""
        pts = [(Fraction(0), Fraction(0))]
        y = Fraction(0)
        for i, s in enumerate(self._slopes, start=1):
            y += s
            pts.append((Fraction(i), y))
        return tuple(pts)

    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Polygon vertices with runs of equal slopes merged into single
        segments.  Starts at ``(0, 0)``; x-coordinates strictly increase
        and segment slopes strictly increase."""
        pts = [(Fraction(0), Fraction(0))]
        x = Fraction(0)
        y = Fraction(0)
        slopes = self._slopes
        i = 0
        while i < len(slopes):
            j = i
            while j < len(slopes) and slopes[j] == slopes[i]:
                j += 1
            run = j - i
            x += run
            y += slopes[i] * run
            pts.append((x, y))
            i = j
        return tuple(pts)

    def has_integral_breakpoints(self) -> bool:
        """True when every vertex of the polygon has integer
        coordinates (x-coordinates are integers by construction, so
        only the heights matter)."""
        return all(y.denominator == 1 for _, y in self.vertices())

    # -- partial order -------------------------------------------------

    def leq(self, other: "SlopeMultiset") -> bool:
        """Polygon comparison: ranks agree and the polygon of ``other``
        lies on or above this one, i.e. every partial sum of the sorted
        slopes of ``other`` is >= the corresponding partial sum here.
        Endpoints need not match; see ``leq_strict`` for that."""
        if len(self._slopes) != len(other._slopes):
            return False
        a = Fraction(0)
        b = Fraction(0)
        for s, t in zip(self._slopes, other._slopes):
            a += s
            b += t
            if b < a:
                return False
        return True

    def leq_strict(self, other: "SlopeMultiset") -> bool:
        """``leq`` plus equality of the right endpoints (equal
        integrals)."""
        return self.integral == other.integral and self.leq(other)


EMPTY = SlopeMultiset()
TENSOR_IDENTITY = SlopeMultiset([0])


def frobenius_polygon(d: int, k: int, i: int, weight: int = 2) -> SlopeMultiset:
    """Slope multiset of a Frobenius polygon with ``i`` non-ordinary
    blocks out of ``k``, tensor-powered over a degree-``d`` base.

    For ``weight == 2`` this is the union of ``k - i`` copies of
    ``{0,1}**(otimes d)`` and ``i`` copies of ``{1/2,1/2}**(otimes d)``;
    rank ``k * 2**d``, integral ``k * d * 2**(d-1)``.  ``weight == 3``
    scales every slope by 2 (blocks ``{0,2}`` and ``{1,1}``).  The
    family is monotone in ``i``: more non-ordinary blocks lift the
    polygon.
    """
    if d < 1:
        raise ValueError("frobenius_polygon needs d >= 1")
    if k < 1:
        raise ValueError("frobenius_polygon needs k >= 1")
    if not 0 <= i <= k:
        raise ValueError("frobenius_polygon needs 0 <= i <= k")
    if weight not in (2, 3):
        raise ValueError("weight must be 2 or 3")
    step = 1 if weight == 2 else 2
    ordinary = SlopeMultiset([0, step]).pow_otimes(d)
    middle = SlopeMultiset([Fraction(step, 2), Fraction(step, 2)]).pow_otimes(d)
    return ordinary.pow_oplus(k - i).oplus(middle.pow_oplus(i))


def hodge_polygon(d: int, k: int, weight: int = 2) -> SlopeMultiset:
    """Fully ordinary member of the family: ``frobenius_polygon`` with
    ``i = 0``.  Lies on or below every other member of the same
    ``(d, k)`` family."""
    return frobenius_polygon(d, k, 0, weight)
