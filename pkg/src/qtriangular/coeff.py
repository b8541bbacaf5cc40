"""Exact scalar arithmetic: Laurent polynomials in a formal parameter q
over the Gaussian rationals.

The coefficient field is Q(i) with complex conjugation; its fixed subfield Q
plays the role of the real ground field.  A scalar is a finite sum

    sum_k  c_k * q^k

with integer exponents k and c_k in Q(i), stored sparsely with no zero
coefficients.  Canonical form makes equality exact: two scalars are equal
iff their term maps are identical.  q is formally invertible, so working
with a formal q automatically avoids roots of unity.

All values are immutable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class GaussianRational:
    """An element re + im*i of Q(i).  Fractions stay reduced; values are immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_as_fraction(x))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        base = self if n >= 0 else self.inverse()
        out = GaussianRational(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        if self.im == 1:
            imtxt = "+i"
        elif self.im == -1:
            imtxt = "-i"
        elif self.im > 0:
            imtxt = f"+{self.im}*i"
        else:
            imtxt = f"-{-self.im}*i"
        return f"({self.re}{imtxt})"

    __repr__ = __str__


#: the imaginary unit of the coefficient field
I = GaussianRational(0, 1)


def _term_text(c: GaussianRational, k: int):
    """Render c*q^k as (negative, body) with the sign factored out when c is
    purely real or purely imaginary."""
    neg = False
    if c.im == 0 and c.re < 0:
        neg, c = True, -c
    elif c.re == 0 and c.im < 0:
        neg, c = True, -c
    if k == 0:
        qtxt = ""
    elif k == 1:
        qtxt = "q"
    else:
        qtxt = f"q^{k}"
    if not qtxt:
        return neg, str(c)
    if c == GaussianRational(1):
        return neg, qtxt
    return neg, f"{c}*{qtxt}"


def _join_signed(parts) -> str:
    """Join (negative, body) pairs into a signed sum."""
    out = []
    for neg, body in parts:
        if not out:
            out.append(("- " if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class ScalarQ:
    """A sparse Laurent polynomial in q.

    ``terms`` maps integer exponents to nonzero Gaussian-rational
    coefficients.  Instances are immutable; every operation returns a new
    canonical value.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        canon = {}
        if terms:
            for k, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    canon[int(k)] = c
        self.terms = canon

    @staticmethod
    def constant(c) -> "ScalarQ":
        return ScalarQ({0: GaussianRational.coerce(c)})

    @staticmethod
    def coerce(x) -> "ScalarQ":
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return ScalarQ.constant(x)
        raise TypeError(f"cannot interpret {x!r} as a scalar")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ScalarQ):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == ScalarQ.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = ScalarQ.coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                del out[k]
        res = ScalarQ.__new__(ScalarQ)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = ScalarQ.__new__(ScalarQ)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-ScalarQ.coerce(other))

    def __rsub__(self, other):
        return ScalarQ.coerce(other) + (-self)

    def __mul__(self, other):
        other = ScalarQ.coerce(other)
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = ka + kb
                c = ca * cb
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        res = ScalarQ.__new__(ScalarQ)
        res.terms = out
        return res

    __rmul__ = __mul__

    def q_shift(self, w: int) -> "ScalarQ":
        """Multiply by q^w (exponent shift)."""
        if w == 0:
            return self
        res = ScalarQ.__new__(ScalarQ)
        res.terms = {k + w: c for k, c in self.terms.items()}
        return res

    @property
    def is_unit(self) -> bool:
        """Units of the Laurent ring are single terms c*q^k with c != 0."""
        return len(self.terms) == 1

    def inverse(self) -> "ScalarQ":
        if not self.is_unit:
            raise ValueError(f"{self} is not a unit of the scalar ring")
        ((k, c),) = self.terms.items()
        return ScalarQ({-k: c.inverse()})

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        base = self if n >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self) -> "ScalarQ":
        """Coefficient-wise Gaussian conjugation; q is fixed."""
        res = ScalarQ.__new__(ScalarQ)
        res.terms = {k: c.conjugate() for k, c in self.terms.items()}
        return res

    def eval_at(self, q0) -> GaussianRational:
        """Exact evaluation at q = q0; q0 must be a unit (nonzero)."""
        q0 = GaussianRational.coerce(q0)
        if not q0:
            raise ValueError("q must be evaluated at a nonzero value")
        total = GaussianRational(0)
        for k, c in self.terms.items():
            total = total + c * q0**k
        return total

    def divexact(self, other: "ScalarQ") -> "ScalarQ":
        """Exact division in the Laurent ring; raises if not divisible."""
        other = ScalarQ.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return ZERO
        if other.is_unit:
            return self * other.inverse()
        num = dict(self.terms)
        quo = {}
        b_top = max(other.terms)
        b_lead = other.terms[b_top]
        floor = min(self.terms) - min(other.terms)
        while num:
            e = max(num)
            t_exp = e - b_top
            if t_exp < floor:
                raise ValueError(f"{other} does not divide {self} exactly")
            t = num[e] / b_lead
            quo[t_exp] = t
            for k, c in other.terms.items():
                kk = t_exp + k
                s = num.get(kk, GaussianRational(0)) - t * c
                if s:
                    num[kk] = s
                elif kk in num:
                    del num[kk]
        return ScalarQ(quo)

    def to_json(self):
        """List of [exponent, re_num, re_den, im_num, im_den], sorted by exponent."""
        return [
            [k, c.re.numerator, c.re.denominator, c.im.numerator, c.im.denominator]
            for k, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(data) -> "ScalarQ":
        terms = {}
        for k, rn, rd, imn, imd in data:
            terms[int(k)] = GaussianRational(Fraction(rn, rd), Fraction(imn, imd))
        return ScalarQ(terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return _join_signed(_term_text(c, k) for k, c in sorted(self.terms.items()))

    __repr__ = __str__


ZERO = ScalarQ({})
ONE = ScalarQ.constant(1)
Q = ScalarQ({1: GaussianRational(1)})


def qpow(k: int, coeff=1) -> ScalarQ:
    """The scalar coeff * q^k."""
    return ScalarQ({k: GaussianRational.coerce(coeff)})
