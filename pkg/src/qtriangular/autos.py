"""Automorphism groups of the n = 2 algebras.

The linear automorphisms of the plain algebra are parametrized by a unit
scale on a[1,2] together with an invertible 2x2 matrix mixing the diagonal
generators.  Index-preserving automorphisms of the localized algebra form
the sextuple group: (l12, l11, l22, j, k, l) acts by

    a[1,2] |-> l12 * a[1,1]^k a[2,2]^l a[1,2]
    a[i,i] |-> l_ii * z^j a[i,i]          with z = a[1,1] a[2,2]^-1.

The product law composes with the FIRST factor outermost; this convention
is pinned by the endomorphism-composition oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import ScalarQ
from .qalgebra import MorphismSpec
from .triangular import build, coproduct, counit


def _unit(x) -> ScalarQ:
    s = ScalarQ.coerce(x)
    if not s.is_unit:
        raise ValueError(f"{s} is not a unit of the scalar ring")
    return s


@dataclass(frozen=True)
class Sextuple:
    """An element (l12, l11, l22, j, k, l) of the sextuple group."""

    l12: ScalarQ
    l11: ScalarQ
    l22: ScalarQ
    j: int
    k: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "l12", _unit(self.l12))
        object.__setattr__(self, "l11", _unit(self.l11))
        object.__setattr__(self, "l22", _unit(self.l22))
        for f in ("j", "k", "l"):
            if not isinstance(getattr(self, f), int):
                raise TypeError(f"{f} must be an integer")

    @staticmethod
    def identity() -> "Sextuple":
        one = ScalarQ.constant(1)
        return Sextuple(one, one, one, 0, 0, 0)

    def __str__(self):
        return f"[{self.l12},{self.l11},{self.l22},{self.j},{self.k},{self.l}]"


def g_to_endo(s: Sextuple) -> MorphismSpec:
    """The endomorphism of the localized size-2 algebra encoded by a
    sextuple; always passes the point check."""
    ut = build(2, True)
    a11, a12, a22 = ut.a(1, 1), ut.a(1, 2), ut.a(2, 2)
    z = a11 * a22.inverse()
    images = [
        (z**s.j * a11).scale(s.l11),
        (a11**s.k * a22**s.l * a12).scale(s.l12),
        (z**s.j * a22).scale(s.l22),
    ]
    return MorphismSpec(ut, images)


def g_compose(s1: Sextuple, s2: Sextuple) -> Sextuple:
    """Group law: the sextuple of g_to_endo(s1) o g_to_endo(s2)."""
    ratio = s1.l11 * s1.l22.inverse()
    kl2 = s2.k + s2.l
    return Sextuple(
        s1.l12 * s2.l12 * s1.l11**s2.k * s1.l22**s2.l,
        s1.l11 * s2.l11 * ratio**s2.j,
        s1.l22 * s2.l22 * ratio**s2.j,
        s1.j + s2.j,
        s1.k + s2.k + s1.j * kl2,
        s1.l + s2.l - s1.j * kl2,
    )


def g_inverse(s: Sextuple) -> Sextuple:
    ratio = s.l11 * s.l22.inverse()
    kl = s.k + s.l
    return Sextuple(
        s.l12.inverse() * s.l11 ** (s.k - s.j * kl) * s.l22 ** (s.l + s.j * kl),
        s.l11.inverse() * ratio**s.j,
        s.l22.inverse() * ratio**s.j,
        -s.j,
        s.j * kl - s.k,
        -s.j * kl - s.l,
    )


def rho_conjugate(s: Sextuple) -> Sextuple:
    """Conjugation by the antidiagonal reflection: swaps the diagonal
    scales, negates j, and swaps k with l.  An order-2 group automorphism."""
    return Sextuple(s.l12, s.l22, s.l11, -s.j, s.l, s.k)


def g_decompose(s: Sextuple):
    """The unique factorization g = (j part) * (k,l part) * (scale part),
    with the middle entries corrected to (k - j(k+l), l + j(k+l))."""
    one = ScalarQ.constant(1)
    kl = s.k + s.l
    g1 = Sextuple(one, one, one, s.j, 0, 0)
    g2 = Sextuple(one, one, one, 0, s.k - s.j * kl, s.l + s.j * kl)
    g3 = Sextuple(s.l12, s.l11, s.l22, 0, 0, 0)
    return g1, g2, g3


def is_hopf_auto(s: Sextuple) -> bool:
    """Membership in the Hopf-automorphism subgroup: both diagonal scales
    are 1 and (k, l) = (j, -j), so the a[1,2] factor is a power of the
    central z."""
    one = ScalarQ.constant(1)
    return s.l11 == one and s.l22 == one and s.k == s.j and s.l == -s.j


def delta_compatible(s: Sextuple) -> bool:
    """Direct oracle for Hopf membership: the endomorphism commutes with
    the comultiplication and preserves the counit on all generators."""
    ut = build(2, True)
    phi = g_to_endo(s)
    for g in range(ut.ngens):
        e = ut.gen(g)
        if coproduct(phi.apply(e)) != coproduct(e).map_factors(phi.apply, phi.apply):
            return False
        if counit(phi.apply(e)) != counit(e):
            return False
    return True


@dataclass(frozen=True)
class LinearAuto2:
    """A linear automorphism of the plain size-2 algebra: a unit scale on
    a[1,2] and an invertible matrix whose columns give the images of the
    diagonal generators."""

    lam: ScalarQ
    mat: tuple  # ((m11, m12), (m21, m22)), columns = images of a11, a22

    def __post_init__(self):
        object.__setattr__(self, "lam", _unit(self.lam))
        rows = tuple(tuple(ScalarQ.coerce(x) for x in row) for row in self.mat)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("the mixing matrix must be 2x2")
        object.__setattr__(self, "mat", rows)

    @property
    def det(self) -> ScalarQ:
        (m11, m12), (m21, m22) = self.mat
        return m11 * m22 - m21 * m12

    def compose(self, other: "LinearAuto2") -> "LinearAuto2":
        """self after other; matrices multiply in the same order."""
        a, b = self.mat, other.mat
        prod = tuple(
            tuple(sum((a[r][t] * b[t][c] for t in range(2)), ScalarQ({})) for c in range(2))
            for r in range(2)
        )
        return LinearAuto2(self.lam * other.lam, prod)


def linear_auto_spec(phi: LinearAuto2) -> MorphismSpec:
    """The endomorphism a[1,1] |-> m11 a11 + m21 a22, a[2,2] |-> m12 a11 +
    m22 a22, a[1,2] |-> lam a12; requires an invertible mixing matrix."""
    if not phi.det.is_unit:
        raise ValueError("the mixing matrix must have unit determinant scalar")
    t2 = build(2, False)
    a11, a12, a22 = t2.a(1, 1), t2.a(1, 2), t2.a(2, 2)
    (m11, m12), (m21, m22) = phi.mat
    images = [
        a11.scale(m11) + a22.scale(m21),
        a12.scale(phi.lam),
        a11.scale(m12) + a22.scale(m22),
    ]
    return MorphismSpec(t2, images)
