"""Prime splitting and eigenvalue congruences in a number field.

The field K = Q[x]/(f) is always presented by a monic irreducible
integer polynomial ``f``; polynomials are coefficient sequences in
*ascending* degree order, and field elements are coordinate vectors in
the power basis 1, x, ..., x^(deg f - 1).

For an unramified rational prime ``p`` the primes of K above ``p``
correspond to the monic irreducible factors of ``f`` mod ``p``
(residue degree = factor degree), so questions about an algebraic
integer ``a`` lying in a prime above ``p`` reduce to polynomial
remainders mod ``(p, g_i)``.  The central quantity is::

    defect k(p) = sum of residue degrees of the primes above p
                  that contain a

(0 exactly when ``a`` is a unit at every prime above ``p``, i.e. the
ordinary case; ``a = 0`` lies in every prime and the full degree is
returned with a flag).

Factorization mod p is squarefree decomposition, then distinct-degree
splitting, then randomized equal-degree splitting; the randomness is a
seeded stream so results are reproducible bit for bit, and the factor
multiset is independent of the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from ._arith import is_prime

__all__ = [
    "RamifiedPrimeError",
    "IndexWarningError",
    "factor_mod_p",
    "PrimeSplitting",
    "splitting_type",
    "element_in_prime",
    "Defect",
    "k_of_p",
    "is_ordinary",
    "weil_bound_check",
    "half_bound_check",
    "discriminant",
    "embeddings",
    "is_prime",
]

IntPoly = Sequence[int]
Coord = Union[int, Fraction]


class RamifiedPrimeError(ArithmeticError):
    """The prime ramifies in the field; residue computations are refused."""


class IndexWarningError(ArithmeticError):
    """p divides disc(f): the order Z[x]/(f) may not be maximal at p,
    so factor degrees need not match residue degrees."""


# ---------------------------------------------------------------------
# dense polynomial arithmetic over GF(p) (ascending coefficient lists)

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _reduce(f: IntPoly, p: int) -> list[int]:
    return _trim([c % p for c in f])


def _deg(f) -> int:
    return len(f) - 1


def _is_one(f) -> bool:
    return len(f) == 1 and f[0] == 1


def _add(f, g, p):
    n = max(len(f), len(g))
    return _trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
                  for i in range(n)])


def _sub(f, g, p):
    n = max(len(f), len(g))
    return _trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
                  for i in range(n)])


def _mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = _deg(g)
    inv = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(f) - dg)
    while _deg(f) >= dg and f:
        coef = f[-1] * inv % p
        shift = _deg(f) - dg
        q[shift] = coef
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - coef * b) % p
        _trim(f)
    return _trim(q), f


def _mod(f, g, p):
    return _divmod(f, g, p)[1]


def _gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _mod(f, g, p)
    return _monic(f, p)


def _pow_mod(base, e, mod, p):
    result = [1]
    base = _mod(base, mod, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), mod, p)
        base = _mod(_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _deriv(f, p):
    return _trim([i * c % p for i, c in enumerate(f)][1:])


def _pth_root(f, p):
    # over GF(p) every coefficient is its own p-th root, so the root of
    # sum a_j x^{pj} is sum a_j x^j
    root = [0] * (_deg(f) // p + 1)
    for i, c in enumerate(f):
        if c:
            if i % p:
                raise ValueError("polynomial is not a p-th power")
            root[i // p] = c
    return _trim(root)


# ---------------------------------------------------------------------
# factorization mod p

def _squarefree_parts(f, p):
    """Decompose monic ``f`` into pairwise-coprime squarefree monic
    parts with multiplicities: returns [(g, m), ...] with
    f = prod g^m."""
    out = []
    c = _gcd(f, _deriv(f, p), p)
    w = _divmod(f, c, p)[0]
    m = 1
    while not _is_one(w):
        y = _gcd(w, c, p)
        part = _divmod(w, y, p)[0]
        if _deg(part) > 0:
            out.append((part, m))
        w = y
        c = _divmod(c, y, p)[0]
        m += 1
    if not _is_one(c):
        # c is a p-th power: recurse on its root, multiplicities scale by p
        for g, m in _squarefree_parts(_pth_root(c, p), p):
            out.append((g, m * p))
    return out


def _distinct_degree(f, p):
    """Split squarefree monic ``f`` into products of irreducibles of a
    common degree: returns [(product, degree), ...]."""
    out = []
    x = [0, 1]
    h = x[:]
    rest = f[:]
    d = 0
    while _deg(rest) >= 2 * (d + 1):
        d += 1
        h = _pow_mod(h, p, rest, p)
        g = _gcd(rest, _sub(h, x, p), p)
        if _deg(g) > 0:
            out.append((g, d))
            rest = _divmod(rest, g, p)[0]
            h = _mod(h, rest, p)
    if _deg(rest) > 0:
        out.append((rest, _deg(rest)))
    return out


def _equal_degree(f, d, p, rng):
    """Split squarefree monic ``f``, a product of irreducibles all of
    degree ``d``, into those irreducibles (Cantor-Zassenhaus)."""
    n = _deg(f)
    if n == d:
        return [f]
    while True:
        u = [rng.randrange(p) for _ in range(n)]
        u = _trim(u)
        if _deg(u) < 1:
            continue
        if p == 2:
            # trace map u + u^2 + u^4 + ... splits over GF(2)
            t = u[:]
            acc = u[:]
            for _ in range(d - 1):
                acc = _pow_mod(acc, 2, f, p)
                t = _add(t, acc, p)
            g = _gcd(f, t, p)
        else:
            v = _pow_mod(u, (p**d - 1) // 2, f, p)
            g = _gcd(f, _sub(v, [1], p), p)
        if 0 < _deg(g) < n:
            return _equal_degree(g, d, p, rng) + _equal_degree(
                _divmod(f, g, p)[0], d, p, rng
            )


def factor_mod_p(f: IntPoly, p: int, seed: int = 0) -> list[tuple[tuple[int, ...], int]]:
    """Complete factorization of ``f`` mod ``p`` into monic irreducibles.

    Returns ``[(g, multiplicity), ...]`` with each ``g`` a tuple of
    ascending coefficients, sorted by (degree, coefficients) so output
    is canonical.  The randomized equal-degree stage draws from
    ``random.Random(seed)``; any seed yields the same factor multiset.
    A unit leading coefficient is normalized away, so the product of
    the factors is the monic normalization of ``f`` mod ``p``.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    fb = _reduce(f, p)
    if not fb:
        raise ValueError("polynomial vanishes mod p")
    fb = _monic(fb, p)
    if _deg(fb) == 0:
        return []
    rng = random.Random(seed)
    factors = []
    for part, mult in _squarefree_parts(fb, p):
        for prod, d in _distinct_degree(part, p):
            for g in _equal_degree(prod, d, p, rng):
                factors.append((tuple(g), mult))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return factors


# ---------------------------------------------------------------------
# splitting data and congruences

@dataclass(frozen=True)
class PrimeSplitting:
    """Shape of ``p`` in K: factors of f mod p with multiplicities
    (= ramification indices for unramified-order primes), residue
    degrees, and the two degeneracy flags.  For monic f the flags
    coincide: p | disc(f) exactly when f mod p has a repeated factor."""

    p: int
    factors: tuple[tuple[tuple[int, ...], int], ...]
    residue_degrees: tuple[int, ...]
    ramified: bool
    index_warning: bool


def splitting_type(f: IntPoly, p: int, seed: int = 0) -> PrimeSplitting:
    """Factor the defining polynomial mod ``p`` and package the shape.

    ``f`` must be monic (the caller asserts irreducibility over Q).
    The degree identity sum(e_i * f_i) = deg f always holds.
    """
    if not f or f[-1] != 1:
        raise ValueError("defining polynomial must be monic")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = tuple(factor_mod_p(f, p, seed=seed))
    ramified = any(e > 1 for _, e in factors)
    # p | disc(f) iff gcd(f, f') mod p is nonconstant, which for monic f
    # is exactly the repeated-factor condition above
    index_warning = ramified
    return PrimeSplitting(
        p=p,
        factors=factors,
        residue_degrees=tuple(len(g) - 1 for g, _ in factors),
        ramified=ramified,
        index_warning=index_warning,
    )


def _coords(a: Sequence[Coord], n: int) -> list[Fraction]:
    coords = [Fraction(c) for c in a]
    if len(coords) != n:
        raise ValueError(f"element has {len(coords)} coordinates, field degree is {n}")
    return coords


def element_in_prime(a: Sequence[Coord], g: IntPoly, p: int) -> bool:
    """Whether the integral element with power-basis coordinates ``a``
    lies in the prime (p, g(x)) — i.e. its reduction mod p is divisible
    by the residue factor ``g``."""
    coords = [Fraction(c) for c in a]
    if any(c.denominator != 1 for c in coords):
        raise ValueError("element is not integral: coordinates must be integers")
    apoly = _reduce([int(c) for c in coords], p)
    if not apoly:
        return True
    return not _mod(apoly, list(g), p)


class Defect(NamedTuple):
    """Total residue degree of the primes above p containing the
    element; ``all_primes`` marks the degenerate zero element."""

    k: int
    all_primes: bool


def k_of_p(a: Sequence[Coord], f: IntPoly, p: int, seed: int = 0) -> Defect:
    """Ordinariness defect of ``a`` at ``p``: sum of residue degrees f_i
    over the primes (p, g_i) that contain ``a``.

    Refuses ramified primes and index-warning primes (the residue
    correspondence is unreliable there).  The zero element lies in
    every prime: the full field degree is returned with
    ``all_primes=True`` rather than silently.
    """
    split = splitting_type(f, p, seed=seed)
    if split.ramified:
        raise RamifiedPrimeError(f"p={p} ramifies in the field")
    if split.index_warning:
        raise IndexWarningError(f"p={p} divides disc of the defining polynomial")
    n = _deg(list(f))
    coords = _coords(a, n)
    if any(c.denominator != 1 for c in coords):
        raise ValueError("element is not integral: coordinates must be integers")
    if all(c == 0 for c in coords):
        return Defect(n, True)
    k = 0
    for g, _ in split.factors:
        if element_in_prime(coords, g, p):
            k += len(g) - 1
    return Defect(k, False)


def is_ordinary(a: Sequence[Coord], f: IntPoly, p: int, seed: int = 0) -> bool:
    """True when ``a`` is nonzero and avoids every prime above ``p``
    (defect zero)."""
    defect = k_of_p(a, f, p, seed=seed)
    return (not defect.all_primes) and defect.k == 0


# ---------------------------------------------------------------------
# archimedean bounds

def discriminant(f: IntPoly) -> int:
    """Exact discriminant of an integer polynomial via the Sylvester
    resultant of (f, f'), computed fraction-free (Bareiss)."""
    f = list(f)
    if len(f) < 2:
        raise ValueError("discriminant needs degree >= 1")
    n = _deg(f)
    df = [i * c for i, c in enumerate(f)][1:]
    m = n + (n - 1)
    rows = []
    frev = f[::-1]
    dfrev = df[::-1]
    for i in range(n - 1):
        rows.append([0] * i + frev + [0] * (m - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + dfrev + [0] * (m - n + 1 - 1 - i))
    res = _bareiss_det(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    lead = f[-1]
    assert res % lead == 0
    return sign * (res // lead)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for swap in range(k + 1, n):
                if m[swap][k] != 0:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _eval_sign_exact(f: Sequence[int], x: Fraction) -> int:
    acc = Fraction(0)
    for c in reversed(list(f)):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def embeddings(f: IntPoly, tol: float = 1e-9) -> tuple[complex, ...]:
    """All complex roots of ``f`` (the archimedean embeddings of the
    field element x).  Roots are located with the companion matrix and
    real roots are then refined by exact-sign bisection to within
    ``tol``, so real embeddings carry guaranteed accuracy."""
    f = list(f)
    coeffs = f[::-1]
    roots = np.roots(coeffs)
    out = []
    for r in roots:
        scale = max(1.0, abs(r))
        if abs(r.imag) < 1e-7 * scale:
            refined = _refine_real_root(f, float(r.real), tol)
            if refined is not None:
                out.append(complex(refined, 0.0))
                continue
        out.append(complex(r))
    return tuple(out)


def _refine_real_root(f, approx: float, tol: float) -> Optional[float]:
    # keep the bracket local: a near-real complex pair must not be
    # "refined" onto some distant genuine real root
    width = max(1e-6, abs(approx) * 1e-6)
    lo, hi = approx - width, approx + width
    for _ in range(8):
        slo = _eval_sign_exact(f, Fraction(lo))
        shi = _eval_sign_exact(f, Fraction(hi))
        if slo == 0:
            return lo
        if shi == 0:
            return hi
        if slo != shi:
            break
        width *= 2
        lo, hi = approx - width, approx + width
    else:
        return None
    while hi - lo > tol:
        mid = (lo + hi) / 2
        smid = _eval_sign_exact(f, Fraction(mid))
        if smid == 0:
            return mid
        if smid == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def weil_bound_check(
    a: Sequence[Coord],
    f: IntPoly,
    p: int,
    weight: int = 2,
    roots: Optional[Sequence[complex]] = None,
) -> bool:
    """Check |sigma(a)| <= 2*sqrt(p) (weight 2) or <= 2*p (weight 3)
    for every archimedean embedding sigma, with a 1e-9 relative slack
    for the floating-point root finding.  ``roots`` may carry the
    precomputed ``embeddings(f)`` when checking many elements of one
    field."""
    if weight not in (2, 3):
        raise ValueError("weight must be 2 or 3")
    n = _deg(list(f))
    coords = _coords(a, n)
    bound = 2 * (p**0.5) if weight == 2 else 2.0 * p
    bound *= 1 + 1e-9
    for root in embeddings(f) if roots is None else roots:
        val = 0j
        for c in reversed(coords):
            val = val * root + complex(float(c))
        if abs(val) > bound:
            return False
    return True


def half_bound_check(k_p: int, k_f: int, p: int) -> str:
    """Defect vs half the field degree, valid only once p > 2^(2*k_f)
    (below that the archimedean box is too small for the argument):

    returns ``"not_applicable"`` for small p, else ``"pass"`` when
    2*k_p <= k_f and ``"fail"`` otherwise.
    """
    if k_p < 0 or k_f < 1:
        raise ValueError("need k_p >= 0 and k_f >= 1")
    if p <= 2 ** (2 * k_f):
        return "not_applicable"
    return "pass" if 2 * k_p <= k_f else "fail"
