"""Exact arithmetic on subgroups of Z^2.

A subgroup of Z^2 has rank 0, 1 or 2 and is kept in a unique canonical
basis, so equality of subgroups is plain equality of objects:

* rank 0: no generators,
* rank 1: a single generator (u, v) with u > 0, or u == 0 and v > 0,
* rank 2: generators (a, 0) and (c, b) with a >= 1, b >= 1 and 0 <= c < a.

For a rank-2 subgroup the index in Z^2 is a * b and membership of (x, y)
amounts to b | y and a | (x - (y // b) * c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

Vec2 = tuple[int, int]

#: Marker returned by :func:`index` for subgroups of rank < 2.
INDEX_INFINITE = math.inf


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Solve x = r1 (mod m1), x = r2 (mod m2); return (x, lcm).

    The system must be compatible; callers only build compatible systems.
    """
    g, s, _ = _xgcd(m1, m2)
    diff = r2 - r1
    if diff % g:
        raise ArithmeticError("incompatible congruences")
    l = m1 // g * m2
    x = (r1 + (diff // g) * s % (m2 // g) * m1) % l
    return x, l


@dataclass(frozen=True, slots=True)
class Subgroup:
    """A subgroup of Z^2 in canonical basis form.  Immutable and hashable.

    Do not call the constructor with a non-canonical basis; use
    :func:`canonicalize` instead.
    """

    gens: tuple[Vec2, ...]

    @property
    def rank(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"Subgroup{self.gens!r}"


ZERO = Subgroup(())
FULL = Subgroup(((1, 0), (0, 1)))


def canonicalize(gens) -> Subgroup:
    """Canonical basis of the subgroup generated by ``gens``.

    Accepts any finite iterable of integer pairs, possibly empty or
    linearly dependent.  Idempotent: re-canonicalizing a canonical basis
    returns an equal subgroup.
    """
    vecs = [(int(x), int(y)) for x, y in gens if (x, y) != (0, 0)]
    if not vecs:
        return ZERO

    u0 = vecs[0]
    rank2 = any(u0[0] * v[1] - u0[1] * v[0] != 0 for v in vecs)
    if not rank2:
        # All generators lie on one line through the origin.
        ux, uy = vecs[0]
        d = math.gcd(ux, uy)
        px, py = ux // d, uy // d
        if px < 0 or (px == 0 and py < 0):
            px, py = -px, -py
        ks = [(x // px) if px else (y // py) for x, y in vecs]
        k = abs(reduce(math.gcd, ks))
        return Subgroup(((k * px, k * py),))

    # Rank 2: find w = (wx, b) with b = gcd of the y-components, then
    # clear the y-components and take the gcd of what is left on the axis.
    wx, wy = vecs[0]
    for vx, vy in vecs[1:]:
        g, s, t = _xgcd(wy, vy)
        wx, wy = s * wx + t * vx, g
    b = wy
    xs = []
    for vx, vy in vecs:
        xs.append(vx - (vy // b) * wx)
    a = abs(reduce(math.gcd, xs))
    c = wx % a
    return Subgroup(((a, 0), (c, b)))


def index(s: Subgroup):
    """Index [Z^2 : s]; ``INDEX_INFINITE`` when the rank is below 2."""
    if s.rank != 2:
        return INDEX_INFINITE
    (a, _), (_, b) = s.gens
    return a * b


def contains(s: Subgroup, v: Vec2) -> bool:
    """Exact membership test of the point ``v`` in the subgroup ``s``."""
    x, y = v
    if s.rank == 0:
        return x == 0 and y == 0
    if s.rank == 1:
        (u, w), = s.gens
        if u:
            return x % u == 0 and (x // u) * w == y
        return x == 0 and y % w == 0
    (a, _), (c, b) = s.gens
    return y % b == 0 and (x - (y // b) * c) % a == 0


def is_subgroup_of(a: Subgroup, b: Subgroup) -> bool:
    """True iff every generator of ``a`` lies in ``b``."""
    return all(contains(b, g) for g in a.gens)


def _intersect_rank2(p: Subgroup, q: Subgroup) -> Subgroup:
    """Intersection of two rank-2 subgroups, via their congruence forms.

    A point (x, y) lies in the subgroup with basis (a, 0), (c, b) iff
    y = 0 (mod b) and x = (y / b) c (mod a).
    """
    (aA, _), (cA, bA) = p.gens
    (aB, _), (cB, bB) = q.gens
    # Smallest positive y admitting some x in both subgroups.
    l = bA // math.gcd(bA, bB) * bB
    g = math.gcd(aA, aB)
    delta = ((l // bA) * cA - (l // bB) * cB) % g if g > 1 else 0
    k0 = g // math.gcd(g, delta) if delta else 1
    b = k0 * l
    # On the x-axis both congruences force x = 0 modulo each a.
    a = aA // math.gcd(aA, aB) * aB
    x0, _ = _crt((b // bA) * cA % aA, aA, (b // bB) * cB % aB, aB)
    return Subgroup(((a, 0), (x0 % a, b)))


def intersect(p: Subgroup, q: Subgroup) -> Subgroup:
    """Intersection of two subgroups, in canonical form."""
    if p.rank == 0 or q.rank == 0:
        return ZERO
    if p.rank == 2 and q.rank == 2:
        return _intersect_rank2(p, q)
    if p.rank == 1 and q.rank == 1:
        (ux, uy), = p.gens
        (vx, vy), = q.gens
        if ux * vy - uy * vx != 0:
            return ZERO
        d1 = math.gcd(ux, uy)
        d2 = math.gcd(vx, vy)
        k = d1 // math.gcd(d1, d2) * d2
        return Subgroup(((ux // d1 * k, uy // d1 * k),))
    if p.rank == 2:
        p, q = q, p
    # p has rank 1, q has rank 2: find the least k >= 1 with k * gen in q.
    (gx, gy), = p.gens
    (a, _), (c, b) = q.gens
    k1 = b // math.gcd(b, gy)
    t = k1 * gx - (k1 * gy // b) * c
    m0 = a // math.gcd(a, t)
    k0 = k1 * m0
    return Subgroup(((k0 * gx, k0 * gy),))


def adjoin(s: Subgroup, v: Vec2) -> Subgroup:
    """Canonical form of the subgroup generated by ``s`` and the point ``v``."""
    return canonicalize(s.gens + (tuple(v),))


def fundamental_domain(w: Subgroup) -> list[Vec2]:
    """Coset representatives of Z^2 / w for a rank-2 subgroup ``w``.

    With canonical basis (a, 0), (c, b) the representatives are the grid
    {(i, j) : 0 <= i < a, 0 <= j < b}.
    """
    if w.rank != 2:
        raise ValueError("quotient by a rank-deficient subgroup is infinite")
    (a, _), (_, b) = w.gens
    return [(i, j) for i in range(a) for j in range(b)]


_cover_cache: dict[tuple, bool] = {}


def is_cover(subgroups) -> bool:
    """True iff the union of the given subgroups is all of Z^2.

    Only rank-2 members can contribute; the test intersects them and
    checks every point of a fundamental domain of the intersection.
    """
    members = [s for s in subgroups if s.rank == 2]
    if not members:
        return False
    if any(s == FULL for s in members):
        return True
    key = tuple(sorted(s.gens for s in members))
    cached = _cover_cache.get(key)
    if cached is not None:
        return cached
    w = reduce(_intersect_rank2, members)
    (wa, _), (_, wb) = w.gens
    params = [s.gens for s in members]
    result = True
    for i in range(wa):
        for j in range(wb):
            for (a, _), (c, b) in params:
                if j % b == 0 and (i - (j // b) * c) % a == 0:
                    break
            else:
                result = False
                break
        if not result:
            break
    _cover_cache[key] = result
    return result


def lattice_of(gamma) -> Subgroup:
    """The subgroup of integer points that ``gamma`` maps into Z^2.

    ``gamma`` is a 2x2 rational matrix with nonzero determinant.  The
    result only depends on gamma up to sign, and equals Z^2 exactly when
    gamma is integral.
    """
    if gamma.det() == 0:
        raise ZeroDivisionError("matrix is singular")
    entries = (gamma.a, gamma.b, gamma.c, gamma.d)
    m = 1
    for e in entries:
        m = m // math.gcd(m, Fraction(e).denominator) * Fraction(e).denominator
    na, nb, nc, nd = (int(e * m) for e in entries)
    gens = [(m, 0), (0, m)]
    for x in range(m):
        for y in range(m):
            if (na * x + nb * y) % m == 0 and (nc * x + nd * y) % m == 0:
                gens.append((x, y))
    return canonicalize(gens)


def density_sum(subgroups) -> Fraction:
    """Sum of the reciprocal indices, exactly."""
    total = Fraction(0)
    for s in subgroups:
        if s.rank != 2:
            raise ValueError("density is zero for rank-deficient subgroups")
        total += Fraction(1, index(s))
    return total
