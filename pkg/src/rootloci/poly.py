"""Binary forms in the Chern roots u, v and symmetric forms in c1 = u+v, c2 = uv.

A ``BiForm`` of degree m stores m+1 coefficients; entry k multiplies
u^k v^(m-k).  Internally the coefficients are kept as an integer numerator
tuple over one positive common denominator, which keeps the hot loops in
plain integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _normalize(num, den: int):
    g = den
    for x in num:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g != 1:
        num = tuple(x // g for x in num)
        den //= g
    return num, den


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render(terms) -> str:
    """Render (coefficient, monomial-string) pairs; empty monomial means constant."""
    out = []
    for c, mono in terms:
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _monomial(*parts) -> str:
    return "*".join(p for p in parts if p)


class InexactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class NotSymmetric(ValueError):
    pass


class BiForm:
    """Homogeneous polynomial in u, v with rational coefficients."""

    __slots__ = ("degree", "_num", "_den")

    def __init__(self, coeffs: Sequence[Scalar] = (0,)):
        coeffs = list(coeffs) or [0]
        den = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                den = _lcm(den, c.denominator)
            elif not isinstance(c, int):
                raise TypeError(f"unsupported coefficient {c!r}")
        num = tuple(int(c * den) for c in coeffs)
        self._set(num, den)

    def _set(self, num, den):
        if not any(num):
            num, den = (0,), 1
        else:
            num, den = _normalize(num, den)
        self.degree = len(num) - 1
        self._num = num
        self._den = den

    @classmethod
    def _raw(cls, num, den: int = 1) -> "BiForm":
        obj = cls.__new__(cls)
        obj._set(tuple(num), den)
        return obj

    @classmethod
    def zero(cls) -> "BiForm":
        return cls._raw((0,))

    @classmethod
    def const(cls, c: Scalar) -> "BiForm":
        return cls([c])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar) -> "BiForm":
        """The linear form a*u + b*v."""
        return cls([b, a])

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiForm":
        """c * u^i v^j."""
        coeffs = [0] * (i + j + 1)
        coeffs[i] = c
        return cls(coeffs)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def numerators(self) -> tuple:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def coeff(self, k: int) -> Fraction:
        return Fraction(self._num[k], self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self._den == 1

    def is_symmetric(self) -> bool:
        return self._num == self._num[::-1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiForm.const(other)
        if not isinstance(other, BiForm):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __repr__(self):
        return f"BiForm({self})"

    def __str__(self):
        m = self.degree
        return _render(
            (self.coeff(k), _monomial(_power("u", k), _power("v", m - k)))
            for k in range(m, -1, -1))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "BiForm":
        if isinstance(other, BiForm):
            return other
        if isinstance(other, (int, Fraction)):
            return BiForm.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add forms of degree {self.degree} and {other.degree}")
        d1, d2 = self._den, other._den
        if d1 == d2:
            return BiForm._raw([a + b for a, b in zip(self._num, other._num)], d1)
        l = _lcm(d1, d2)
        f1, f2 = l // d1, l // d2
        return BiForm._raw([a * f1 + b * f2 for a, b in zip(self._num, other._num)], l)

    __radd__ = __add__

    def __neg__(self):
        return BiForm._raw([-a for a in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "BiForm":
        c = Fraction(c)
        return BiForm._raw([a * c.numerator for a in self._num], self._den * c.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiForm):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiForm.zero()
        return BiForm._raw(_convolve(self._num, other._num), self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = BiForm.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def swap(self) -> "BiForm":
        """A*(u, v) = A(v, u)."""
        return BiForm._raw(self._num[::-1], self._den)

    def evaluate(self, u0: Scalar, v0: Scalar) -> Fraction:
        u0, v0 = Fraction(u0), Fraction(v0)
        m = self.degree
        total = Fraction(0)
        for k, a in enumerate(self._num):
            if a:
                total += a * u0 ** k * v0 ** (m - k)
        return total / self._den

    def exact_div(self, other: "BiForm") -> "BiForm":
        return exact_div(self, other)

    def divided_difference(self) -> "BiForm":
        return divided_difference(self)


U = BiForm.linear(1, 0)
V = BiForm.linear(0, 1)
ONE = BiForm.const(1)


def add(a: BiForm, b: BiForm) -> BiForm:
    return a + b


def mul(a: BiForm, b: BiForm) -> BiForm:
    return a * b


def power(a: BiForm, n: int) -> BiForm:
    return a ** n


def swap(a: BiForm) -> BiForm:
    return a.swap()


def product(forms) -> BiForm:
    out = ONE
    for f in forms:
        out = out * f
    return out


def exact_div(a: BiForm, b: BiForm) -> BiForm:
    """The quotient q with b*q == a; raises InexactDivision otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if a.is_zero():
        return BiForm.zero()
    m, k = a.degree, b.degree
    if k > m:
        raise InexactDivision(f"degree {k} does not divide degree {m}")
    bn = b._num
    top = max(i for i, x in enumerate(bn) if x)
    lead = bn[top]
    rem = list(a._num)
    n = m - k
    q = [0] * (n + 1)
    # work with Fractions only if the leading coefficient forces it
    for j in range(n, -1, -1):
        c = rem[j + top]
        if not c:
            continue
        if isinstance(c, int) and c % lead == 0:
            c = c // lead
        else:
            c = Fraction(c, lead) if isinstance(c, int) else c / lead
        q[j] = c
        for i, y in enumerate(bn):
            if y:
                rem[j + i] -= c * y
    if any(rem):
        raise InexactDivision(f"({a}) / ({b}) leaves a remainder")
    den = a._den
    if any(isinstance(c, Fraction) for c in q):
        l = 1
        for c in q:
            if isinstance(c, Fraction):
                l = _lcm(l, c.denominator)
        q = [int(c * l) for c in q]
        den *= l
    if b._den != 1:
        q = [c * b._den for c in q]
    return BiForm._raw(q, den)


_U_MINUS_V = BiForm.linear(1, -1)


def divided_difference(a: BiForm) -> BiForm:
    """(A(u,v) - A(v,u)) / (u - v); zero for constants."""
    if a.degree == 0 or a.is_zero():
        return BiForm.zero()
    return exact_div(a - a.swap(), _U_MINUS_V)


def evaluate(a: BiForm, u0: Scalar, v0: Scalar) -> Fraction:
    return a.evaluate(u0, v0)


# -- univariate helpers for gcd ---------------------------------------------

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_rem(a: list, b: list) -> list:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lb
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        _trim(a)
        if len(a) == 1 and a[0] == 0:
            break
    return _trim(a) if a else [Fraction(0)]


def _poly_gcd(a: list, b: list) -> list:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while any(b):
        a, b = b, _poly_rem(a, b)
    lead = a[-1]
    return [x / lead for x in a]


def gcd_homogeneous(a: BiForm, b: BiForm) -> BiForm:
    """Homogeneous gcd, normalized so the highest-u coefficient is 1."""
    if a.is_zero() or b.is_zero():
        raise ValueError("gcd requires nonzero forms")

    def split(f: BiForm):
        nz = [i for i, x in enumerate(f._num) if x]
        lo, hi = nz[0], nz[-1]
        return lo, f.degree - hi, list(f._num[lo:hi + 1])

    ua, va, pa = split(a)
    ub, vb, pb = split(b)
    g = _poly_gcd(pa, pb)
    up, vp = min(ua, ub), min(va, vb)
    coeffs = [Fraction(0)] * up + g + [Fraction(0)] * vp
    # coefficient list is indexed by u-power; total degree fixes the v-powers
    return BiForm(coeffs)


# -- symmetric forms ----------------------------------------------------------

class SymForm:
    """Homogeneous element of Q[c1, c2]; entry k multiplies c1^(m-2k) c2^k."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence[Scalar]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != degree // 2 + 1:
            raise ValueError(
                f"degree {degree} needs {degree // 2 + 1} coefficients, got {len(coeffs)}")
        if not any(coeffs):
            degree, coeffs = 0, (Fraction(0),)
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "SymForm":
        return cls(0, (0,))

    @classmethod
    def c1(cls) -> "SymForm":
        return cls(1, (1,))

    @classmethod
    def c2(cls) -> "SymForm":
        return cls(2, (0, 1))

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1) -> "SymForm":
        """c * c1^a c2^b."""
        m = a + 2 * b
        coeffs = [0] * (m // 2 + 1)
        coeffs[b] = c
        return cls(m, coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def terms(self):
        """Nonzero (coefficient, c1-exponent, c2-exponent) triples in canonical order."""
        m = self.degree
        return [(c, m - 2 * k, k) for k, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, SymForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __str__(self):
        return _render((c, _monomial(_power("c1", a), _power("c2", b)))
                       for c, a, b in self.terms())

    def __repr__(self):
        return f"SymForm({self})"

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return SymForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SymForm(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymForm(self.degree, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return SymForm.zero()
        m = self.degree + other.degree
        out = [Fraction(0)] * (m // 2 + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return SymForm(m, out)

    __rmul__ = __mul__

    def to_biform(self) -> BiForm:
        return from_sym(self)


def from_sym(s: SymForm) -> BiForm:
    m = s.degree
    out = [Fraction(0)] * (m + 1)
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        p = m - 2 * k
        # c1^p c2^k = sum_i C(p, i) u^(i+k) v^(p-i+k)
        for i in range(p + 1):
            out[i + k] += c * comb(p, i)
    return BiForm(out)


def to_sym(a: BiForm) -> SymForm:
    """Express a symmetric form in c1, c2 by peeling off c1^m and dividing by c2."""
    if not a.is_symmetric():
        raise NotSymmetric(f"{a} is not symmetric")
    if a.is_zero():
        return SymForm.zero()
    m = a.degree
    out = []
    cur = list(a.coeffs)
    deg = m
    while True:
        top = cur[deg]
        out.append(top)
        if top:
            for i in range(deg + 1):
                cur[i] -= top * comb(deg, i)
        if deg < 2:
            if any(cur):
                raise NotSymmetric("nonzero remainder while peeling")
            break
        if cur[0] or cur[deg]:
            raise NotSymmetric("remainder not divisible by uv")
        cur = cur[1:deg]
        deg -= 2
    return SymForm(m, out)
