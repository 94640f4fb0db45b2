"""Permutation actions and the orbit invariants they induce.

A finite group acting on ``n`` points is given by generator
permutations; the full element set is produced by breadth-first closure
under composition (finite order makes inverses automatic).  The
invariants exposed here are the ones controlling slope bounds for
eigenvalue fields:

* ``max_orbit_length``  -- largest orbit length any single element
  achieves (over the group: the supremum of per-element maxima),
* ``max_min_orbit_length`` -- supremum over elements of the *shortest*
  orbit length of that element,
* ``slope`` = 1 - max_orbit_length/n  and
  ``min_orbit_slope`` = 1 - max_min_orbit_length/n, both exact
  rationals in [0, 1],
* bisecting elements (exactly two orbits, of equal size) and their
  exact density in the group (a Chebotarev-style fraction).

``interact_rules`` turns coarse invariants of a pair of number fields
(degrees, Galois group shape, discriminants) into facts about how the
action over the base field constrains slopes and bisections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

from ._arith import is_prime

__all__ = [
    "Permutation",
    "PermutationGroup",
    "ClosureCapExceeded",
    "FieldInteraction",
    "interact_rules",
    "FACT_SLOPE_ZERO_OVER_F",
    "FACT_SLOPE_ZERO_OVER_F_TILDE",
    "FACT_SLOPE_EQUALS_RATIONAL_BASE",
    "FACT_BISECTION_TRANSFERS",
]

DEFAULT_CLOSURE_CAP = 10**6


class ClosureCapExceeded(RuntimeError):
    """Raised when the BFS closure would enumerate more elements than
    the configured cap."""


class Permutation:
    """Permutation of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse either cycle notation ``"(0 1)(2 3)"`` (points absent
        from every cycle are fixed) or an image list ``"1,0,3,2"``."""
        text = text.strip()
        if not text or text == "()":
            return cls.identity(n)
        if text.startswith("("):
            images = list(range(n))
            body = text
            cycles = re.findall(r"\(([^()]*)\)", body)
            if "".join(f"({c})" for c in cycles).replace(" ", "") != body.replace(" ", ""):
                raise ValueError(f"malformed cycle notation: {text!r}")
            for cyc in cycles:
                pts = [int(tok) for tok in cyc.replace(",", " ").split()]
                if len(pts) != len(set(pts)):
                    raise ValueError(f"repeated point in cycle: ({cyc})")
                for p in pts:
                    if not 0 <= p < n:
                        raise ValueError(f"point {p} out of range for degree {n}")
                for a, b in zip(pts, pts[1:] + pts[:1]):
                    images[a] = b
            perm = cls(images)
        else:
            images = [int(tok) for tok in text.split(",")]
            if len(images) != n:
                raise ValueError(
                    f"image list has length {len(images)}, expected degree {n}"
                )
            perm = cls(images)
        return perm

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(x) = self(other(x))``."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(self._images[j] for j in other._images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Orbits in cycle form, each rotated to start at its minimum,
        sorted by that minimum.  Fixed points appear as 1-cycles."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self._images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self._images[j]
            out.append(tuple(cyc))
        return tuple(out)

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in nontrivial)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of orbit lengths, sorted increasingly."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def max_orbit_length(self) -> int:
        return max(len(c) for c in self.cycles())

    def min_orbit_length(self) -> int:
        return min(len(c) for c in self.cycles())

    def bisects(self) -> bool:
        """True when the permutation has exactly two orbits and they
        have equal size.  By this literal count the identity on two
        points bisects (two fixed points)."""
        ct = self.cycle_type()
        return len(ct) == 2 and ct[0] == ct[1]


class PermutationGroup:
    """Group of permutations of ``{0, ..., n-1}`` given by generators.

    Elements are enumerated once, lazily, by BFS closure under
    composition; the closure aborts with ``ClosureCapExceeded`` beyond
    ``cap`` elements.  With no generators the group is trivial (the
    identity alone), so e.g. the trivial action on 3 points has slope
    1 - 1/3 = 2/3.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        cap: int = DEFAULT_CLOSURE_CAP,
    ):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            gens.append(g)
        self.generators = tuple(gens)
        self._cap = cap
        self._elements: Optional[tuple[Permutation, ...]] = None

    @classmethod
    def parse(
        cls, text: str, degree: int, cap: int = DEFAULT_CLOSURE_CAP
    ) -> "PermutationGroup":
        """Build a group from semicolon-separated permutation strings."""
        gens = [
            Permutation.parse(part, degree)
            for part in text.split(";")
            if part.strip()
        ]
        return cls(degree, gens, cap=cap)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        """All group elements, deterministically ordered by image tuple."""
        if self._elements is None:
            ident = Permutation.identity(self.degree)
            found = {ident}
            frontier = [ident]
            while frontier:
                fresh = []
                for a in frontier:
                    for g in self.generators:
                        b = g * a
                        if b not in found:
                            found.add(b)
                            if len(found) > self._cap:
                                raise ClosureCapExceeded(
                                    f"closure exceeds cap of {self._cap} elements"
                                )
                            fresh.append(b)
                frontier = fresh
            self._elements = tuple(sorted(found, key=lambda p: p._images))
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in set(self.elements)

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={self.order})"

    # -- orbit invariants ----------------------------------------------

    def max_orbit_length(self) -> int:
        """Largest orbit length achieved by any element."""
        return max(g.max_orbit_length() for g in self.elements)

    def max_min_orbit_length(self) -> int:
        """Supremum over elements of that element's *shortest* orbit
        length (equals n exactly when some element is an n-cycle)."""
        return max(g.min_orbit_length() for g in self.elements)

    def slope(self) -> Fraction:
        """``1 - max_orbit_length()/degree``; in [0, 1), and 0 exactly
        when some element is a full cycle."""
        return 1 - Fraction(self.max_orbit_length(), self.degree)

    def min_orbit_slope(self) -> Fraction:
        """``1 - max_min_orbit_length()/degree``; in [0, 1], never
        smaller than ``slope()``."""
        return 1 - Fraction(self.max_min_orbit_length(), self.degree)

    def has_bisecting(self) -> bool:
        return any(g.bisects() for g in self.elements)

    def element_fraction(self, predicate: Callable[[Permutation], bool]) -> Fraction:
        """Exact fraction of elements satisfying ``predicate`` — the
        group-theoretic stand-in for a Chebotarev density."""
        hits = sum(1 for g in self.elements if predicate(g))
        return Fraction(hits, self.order)

    def bisecting_fraction(self) -> Fraction:
        return self.element_fraction(Permutation.bisects)

    # -- induced actions -------------------------------------------------

    def block_action(self, blocks: Sequence[Sequence[int]]) -> "PermutationGroup":
        """Action induced on a stable partition into equal-size blocks.

        ``blocks`` must partition ``{0, ..., degree-1}`` into blocks of
        one common size, each mapped onto a block by every generator
        (hence by every element).  Returns the degree-``len(blocks)``
        group generated by the induced block permutations.  Raises
        ``ValueError`` if the partition is uneven, incomplete, or not
        stable.
        """
        blocks = [tuple(b) for b in blocks]
        if not blocks:
            raise ValueError("empty partition")
        size = len(blocks[0])
        if any(len(b) != size for b in blocks):
            raise ValueError("blocks must have equal sizes")
        owner = {}
        for idx, b in enumerate(blocks):
            for p in b:
                if p in owner:
                    raise ValueError(f"point {p} appears in two blocks")
                owner[p] = idx
        if len(owner) != self.degree or set(owner) != set(range(self.degree)):
            raise ValueError("blocks must partition all points")
        induced = []
        for g in self.generators:
            images = []
            for idx, b in enumerate(blocks):
                targets = {owner[g(p)] for p in b}
                if len(targets) != 1:
                    raise ValueError(
                        f"partition not stable: generator {g} splits block {b}"
                    )
                images.append(targets.pop())
            induced.append(Permutation(images))
        return PermutationGroup(len(blocks), induced, cap=self._cap)


# -- field interaction facts -------------------------------------------

FACT_SLOPE_ZERO_OVER_F = "slope_zero_over_F"
FACT_SLOPE_ZERO_OVER_F_TILDE = "slope_zero_over_F_tilde"
FACT_SLOPE_EQUALS_RATIONAL_BASE = "slope_equals_rational_base"
FACT_BISECTION_TRANSFERS = "bisection_transfers"

GROUP_KINDS = ("symmetric", "alternating", "cyclic", "klein", "dihedral", "other")


@dataclass(frozen=True)
class FieldInteraction:
    """Coarse invariants of a coefficient field K over a base field F.

    ``deg_K``/``deg_F`` are the absolute degrees, ``deg_F_tilde`` the
    degree of the Galois closure of F, ``galois_group_kind`` the shape
    of Gal of the closure of K, and the discriminants are of K and F.
    Unknown entries stay ``None`` and simply disable the rules that
    need them.
    """

    deg_K: Optional[int] = None
    deg_F: Optional[int] = None
    deg_F_tilde: Optional[int] = None
    galois_group_kind: Optional[str] = None
    disc_K: Optional[int] = None
    disc_F: Optional[int] = None

    def __post_init__(self):
        if self.galois_group_kind is not None and self.galois_group_kind not in GROUP_KINDS:
            raise ValueError(f"unknown galois_group_kind: {self.galois_group_kind!r}")
        for name in ("deg_K", "deg_F", "deg_F_tilde"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive, got {value}")


def interact_rules(meta: FieldInteraction) -> frozenset[str]:
    """Derive slope/bisection facts from field invariants.

    Three independent rules fire:

    1. ``deg_K`` a prime not dividing ``deg_F``: the full cycle survives
       restriction, so the slope over F is zero.
    2. Galois group of K symmetric and ``deg_F_tilde`` odd: the slope
       over the Galois closure of F is zero.
    3. ``|disc_K|`` and ``|disc_F|`` coprime: the fields are linearly
       disjoint, so the slope over F equals the slope over the
       rationals and bisecting elements transfer.
    """
    facts = set()
    if (
        meta.deg_K is not None
        and meta.deg_F is not None
        and is_prime(meta.deg_K)
        and meta.deg_F % meta.deg_K != 0
    ):
        facts.add(FACT_SLOPE_ZERO_OVER_F)
    if (
        meta.galois_group_kind == "symmetric"
        and meta.deg_F_tilde is not None
        and meta.deg_F_tilde % 2 == 1
    ):
        facts.add(FACT_SLOPE_ZERO_OVER_F_TILDE)
    if (
        meta.disc_K is not None
        and meta.disc_F is not None
        and gcd(abs(meta.disc_K), abs(meta.disc_F)) == 1
    ):
        facts.add(FACT_SLOPE_EQUALS_RATIONAL_BASE)
        facts.add(FACT_BISECTION_TRANSFERS)
    return frozenset(facts)
