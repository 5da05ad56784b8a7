"""Binary forms over Q with the GL2 action, the dihedral automorphism
machinery, the half-integrality criterion for extraordinariness and a
desk-scale value-set comparison.

A form of degree d is stored as the coefficient vector (c0, ..., cd) of
sum c_i X^(d-i) Y^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mat2 import RatMat2

Rat = Fraction


@dataclass(frozen=True)
class BinaryForm:
    """A nonzero homogeneous polynomial in X, Y of degree >= 1."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "BinaryForm":
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) < 2 or not any(cs):
            raise ValueError("need a nonzero form of degree >= 1")
        return BinaryForm(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                filter(None, (
                    f"X^{d - i}" if d - i > 1 else ("X" if d - i else ""),
                    f"Y^{i}" if i > 1 else ("Y" if i else ""),
                ))
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


F0 = BinaryForm.of(0, 1, 1, 0)  # X*Y*(X + Y)


def evaluate(f: BinaryForm, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    d = f.degree
    return sum(
        (c * x ** (d - i) * y**i for i, c in enumerate(f.coeffs)),
        start=Fraction(0),
    )


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def compose(f: BinaryForm, gamma: RatMat2) -> BinaryForm:
    """(F o gamma)(X, Y) = F(a X + b Y, c X + d Y), exactly."""
    d = f.degree
    # Powers of the two linear substitutes, as coefficient lists in Y.
    row1 = [Fraction(gamma.a), Fraction(gamma.b)]
    row2 = [Fraction(gamma.c), Fraction(gamma.d)]
    pow1 = [[Fraction(1)]]
    pow2 = [[Fraction(1)]]
    for _ in range(d):
        pow1.append(_poly_mul(pow1[-1], row1))
        pow2.append(_poly_mul(pow2[-1], row2))
    out = [Fraction(0)] * (d + 1)
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        term = _poly_mul(pow1[d - i], pow2[i])
        for j, v in enumerate(term):
            out[j] += c * v
    return BinaryForm(tuple(out))


def is_automorphism(f: BinaryForm, gamma: RatMat2) -> bool:
    if gamma.det() == 0:
        raise ValueError("automorphisms must be invertible")
    return compose(f, gamma) == f


@dataclass(frozen=True)
class GroupElement:
    name: str
    matrix: RatMat2
    order: int


S_MAT = RatMat2.of(0, 1, 1, 0)
R_MAT = RatMat2.of(0, 1, -1, -1)


def _element(name: str, m: RatMat2) -> GroupElement:
    return GroupElement(name, m, m.order())


def dihedral_groups() -> tuple[list[GroupElement], list[GroupElement]]:
    """The groups generated by S, R and by S, -R as explicit 6- and
    12-element lists."""
    d3 = [
        _element("id", RatMat2.identity()),
        _element("R", R_MAT),
        _element("R2", R_MAT @ R_MAT),
        _element("S", S_MAT),
        _element("SR", S_MAT @ R_MAT),
        _element("SR2", S_MAT @ R_MAT @ R_MAT),
    ]
    d6 = d3 + [_element("-" + g.name, -g.matrix) for g in d3]
    return d3, d6


def conjugate(t: RatMat2, g: GroupElement) -> GroupElement:
    """T^-1 g T; the order is invariant under conjugation."""
    return GroupElement(g.name, t.inverse() @ g.matrix @ t, g.order)


def _is_half_odd(x: Fraction) -> bool:
    return x.denominator == 2


def corollary_case(sigma: RatMat2) -> str | None:
    """Classify the entries (a, b; c, d) into the four admissible
    integrality shapes, or None.

    (a) all integers; (b) a, d, b integers and c a half-odd-integer;
    (c) a, d, c integers and b a half-odd-integer; (d) all four
    half-odd-integers.
    """
    a, b, c, d = sigma.entries()
    ints = [x.denominator == 1 for x in (a, b, c, d)]
    halves = [_is_half_odd(x) for x in (a, b, c, d)]
    if all(ints):
        return "a"
    if ints[0] and ints[3]:
        if ints[1] and halves[2]:
            return "b"
        if halves[1] and ints[2]:
            return "c"
    if all(halves):
        return "d"
    return None


def extraordinary_by_C3(f: BinaryForm, t: RatMat2, variant: str = "d3") -> bool:
    """Decide extraordinariness of a form whose automorphism group is
    the conjugate by ``t`` of the dihedral group named by ``variant``.

    The supplied conjugation is verified elementwise; the form is
    extraordinary iff some conjugated element of order 3 lands in one of
    the four integrality shapes.
    """
    d3, d6 = dihedral_groups()
    group = {"d3": d3, "d6": d6}.get(variant.lower())
    if group is None:
        raise ValueError("variant must be 'd3' or 'd6'")
    conjugated = [conjugate(t, g) for g in group]
    for g in conjugated:
        if not is_automorphism(f, g.matrix):
            raise ValueError(
                f"conjugate of {g.name} is not an automorphism of the form"
            )
    return any(
        g.order == 3 and corollary_case(g.matrix) is not None
        for g in conjugated
    )


def dagger(f: BinaryForm) -> BinaryForm:
    """The companion form F(2X, Y): coefficient c_i picks up 2^(d-i)."""
    d = f.degree
    return BinaryForm(
        tuple(c * 2 ** (d - i) for i, c in enumerate(f.coeffs))
    )


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction Gaussian elimination with pivoting."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for cc in range(col, n):
                    m[r][cc] -= factor * m[col][cc]
    return det


def _resultant(p: list[Fraction], q: list[Fraction]) -> Fraction:
    """Resultant of two binary forms given by full coefficient vectors
    (formal degrees len-1), via the Sylvester determinant."""
    dp, dq = len(p) - 1, len(q) - 1
    n = dp + dq
    rows = []
    for shift in range(dq):
        rows.append(
            [Fraction(0)] * shift + list(p) + [Fraction(0)] * (n - dp - 1 - shift)
        )
    for shift in range(dp):
        rows.append(
            [Fraction(0)] * shift + list(q) + [Fraction(0)] * (n - dq - 1 - shift)
        )
    return _det(rows)


def discriminant(f: BinaryForm) -> Fraction:
    """disc F = (-1)^(d(d-1)/2) Res(F_X, F_Y) / d^(d-2); zero exactly
    when F has a repeated projective root."""
    d = f.degree
    if d < 3:
        raise ValueError("discriminant normalization requires degree >= 3")
    fx = [(d - i) * c for i, c in enumerate(f.coeffs[:-1])]
    fy = [(i + 1) * c for i, c in enumerate(f.coeffs[1:])]
    res = _resultant(fx, fy)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / Fraction(d) ** (d - 2)


#: The displayed sextic family is stabilized not by the dihedral group
#: itself but by its conjugate under this reflection: pass it as the
#: conjugating matrix when checking extraordinariness.
SEXTIC_CONJUGATOR = RatMat2.of(1, 0, 0, -1)


def sextic(a: int, c: int) -> BinaryForm:
    """The degree-6 family with parameters (a, c), stable under the
    conjugate of the 12-element dihedral group by ``SEXTIC_CONJUGATOR``;
    rejects parameter pairs with vanishing discriminant."""
    f = BinaryForm.of(a, -3 * a, c, 5 * a - 2 * c, c, -3 * a, a)
    if discriminant(f) == 0:
        raise ValueError(f"degenerate parameters (a, c) = ({a}, {c})")
    return f


@dataclass
class ValueWitness:
    value: int
    point: tuple[int, int]


@dataclass
class CompareReport:
    """Outcome of the two-directional boxed value-set comparison.

    ``unmatched_f`` holds values of the first form on the small box with
    no preimage of the second form on the big box; ``unmatched_g`` the
    converse.  Empty lists are necessary, never sufficient, for value-set
    equality.
    """

    n: int
    m: int
    unmatched_f: list[ValueWitness]
    unmatched_g: list[ValueWitness]

    @property
    def ok(self) -> bool:
        return not self.unmatched_f and not self.unmatched_g

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "ok": self.ok,
            "unmatched_f": [
                {"value": w.value, "point": list(w.point)}
                for w in self.unmatched_f
            ],
            "unmatched_g": [
                {"value": w.value, "point": list(w.point)}
                for w in self.unmatched_g
            ],
        }


def _box_values(f: BinaryForm, radius: int) -> dict[Fraction, tuple[int, int]]:
    values: dict[Fraction, tuple[int, int]] = {}
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            values.setdefault(evaluate(f, x, y), (x, y))
    return values


def cross_value_check(
    f: BinaryForm, g: BinaryForm, n: int = 10, m: int | None = None
) -> CompareReport:
    """Search, in both directions, for values of one form on the box
    |x|, |y| <= n missed by the other form on the box |x|, |y| <= m."""
    if not (f.is_integral() and g.is_integral()):
        raise ValueError("value-set comparison requires integral forms")
    if m is None:
        m = 6 * n
    f_small, g_small = _box_values(f, n), _box_values(g, n)
    f_big, g_big = _box_values(f, m), _box_values(g, m)
    unmatched_f = [
        ValueWitness(int(v), pt) for v, pt in sorted(f_small.items())
        if v not in g_big
    ]
    unmatched_g = [
        ValueWitness(int(v), pt) for v, pt in sorted(g_small.items())
        if v not in f_big
    ]
    return CompareReport(n, m, unmatched_f, unmatched_g)
