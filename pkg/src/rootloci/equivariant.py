"""Equivariant cohomology of projectivized symmetric powers.

H_G(P V_k) = R[y]/(Q_k(y)) where Q_k(y) = prod_j (y + j*u + (k-j)*v) runs over
the weights of S^k C^2, and the product of several such spaces is
R[x_1..x_r]/(Q_{e_1}(x_1), ..., Q_{e_r}(x_r)).  Integration along the fibre
reads off the coefficient of the top monomial of the reduced representative.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Dict, Iterable, Sequence, Tuple

from .poly import BiForm, InexactDivision, ONE, exact_div

Exponents = Tuple[int, ...]


class FormPoly:
    """Polynomial in one formal variable y (degree 1) with BiForm coefficients.

    ``coeffs[j]`` multiplies y^j.  The element is graded: if it has total
    degree D then ``coeffs[j]`` is homogeneous of degree D - j.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[BiForm]):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs) if coeffs else (BiForm.zero(),)

    @classmethod
    def y_power(cls, j: int, c: BiForm = ONE) -> "FormPoly":
        return cls([BiForm.zero()] * j + [c])

    @classmethod
    def constant(cls, c: BiForm) -> "FormPoly":
        return cls([c])

    @property
    def var_degree(self) -> int:
        return len(self.coeffs) - 1

    def terms(self):
        """Nonzero (exponent, coefficient) pairs."""
        return [(j, c) for j, c in enumerate(self.coeffs) if not c.is_zero()]

    def __eq__(self, other):
        if not isinstance(other, FormPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        parts = [f"({c})*y^{j}" for j, c in reversed(self.terms())]
        return "FormPoly(" + (" + ".join(parts) or "0") + ")"

    def __add__(self, other: "FormPoly") -> "FormPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        z = BiForm.zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return FormPoly([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return FormPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiForm):
            return FormPoly([c * other for c in self.coeffs])
        out = [BiForm.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return FormPoly(out)

    def evaluate(self, point: BiForm) -> BiForm:
        """Substitute a linear form for y (Horner)."""
        acc = BiForm.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc


def weights(d: int) -> list:
    """The weights j*u + (d-j)*v of S^d C^2, j = 0..d.

    d = 0 gives the single zero weight, so Q_0(y) = y (P V_0 is a point).
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    return [BiForm.linear(j, d - j) for j in range(d + 1)]


@lru_cache(maxsize=None)
def build_Q(k: int) -> FormPoly:
    """Q_k(y) = prod over weights w of S^k of (y + w); monic of y-degree k+1."""
    result = FormPoly.constant(ONE)
    for w in weights(k):
        result = result * FormPoly([w, ONE])
    return result


def chern(d: int, j: int) -> BiForm:
    """C_j(S^d C^2): the coefficient of y^(d+1-j) in Q_d."""
    if not 0 <= j <= d + 1:
        raise IndexError(f"Chern class index {j} out of range for d={d}")
    return build_Q(d).coeffs[d + 1 - j]


@lru_cache(maxsize=None)
def build_q(d: int) -> FormPoly:
    """q = (Q_d(y) - C_{d+1}) / y."""
    return FormPoly(build_Q(d).coeffs[1:])


def evaluation_points(e: int) -> list:
    """The roots -(e-s)u - s*v of Q_e, s = 0..e."""
    return [BiForm.linear(-(e - s), -s) for s in range(e + 1)]


# -- multivariate elements ---------------------------------------------------

class MultiElement:
    """Polynomial in x_1..x_r with BiForm coefficients, keyed by exponent tuples."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponents, BiForm] = None):
        self.nvars = nvars
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}
        for k in self.terms:
            if len(k) != nvars:
                raise ValueError(f"exponent {k} has wrong length for {nvars} variables")

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiElement":
        """x_i, 1-based."""
        key = tuple(int(j == i - 1) for j in range(nvars))
        return cls(nvars, {key: ONE})

    @classmethod
    def constant(cls, nvars: int, c: BiForm) -> "MultiElement":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def from_univariate(cls, f: FormPoly, nvars: int, i: int) -> "MultiElement":
        """f(x_i)."""
        terms = {}
        for j, c in f.terms():
            key = [0] * nvars
            key[i - 1] = j
            terms[tuple(key)] = c
        return cls(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiElement):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"{type(self).__name__}({len(self.terms)} terms)"

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return MultiElement(self.nvars, out)

    def __neg__(self):
        return MultiElement(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiForm):
            return MultiElement(self.nvars, {k: c * other for k, c in self.terms.items()})
        out: Dict[Exponents, BiForm] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                out[k] = out[k] + c if k in out else c
        return MultiElement(self.nvars, out)


class ReducedElement(MultiElement):
    """Reduced representative: every exponent k_i is at most e_i."""

    __slots__ = ("evec",)

    def __init__(self, evec: Sequence[int], terms: Dict[Exponents, BiForm] = None):
        self.evec = tuple(evec)
        super().__init__(len(self.evec), terms)
        for k in self.terms:
            if any(a > e for a, e in zip(k, self.evec)):
                raise ValueError(f"monomial {k} is not reduced for {self.evec}")

    def __eq__(self, other):
        if isinstance(other, ReducedElement):
            return self.evec == other.evec and self.terms == other.terms
        return super().__eq__(other)

    @property
    def top(self) -> Exponents:
        return self.evec


def _linear_power_table(coeffs: Sequence[int], jmax: int) -> list:
    """Integer expansions of (sum_i coeffs[i] x_i)^j for j = 0..jmax."""
    n = len(coeffs)
    table = [{(0,) * n: 1}]
    for _ in range(jmax):
        prev = table[-1]
        cur: Dict[Exponents, int] = {}
        for k, c in prev.items():
            for i, a in enumerate(coeffs):
                if a:
                    kk = k[:i] + (k[i] + 1,) + k[i + 1:]
                    cur[kk] = cur.get(kk, 0) + c * a
        table.append(cur)
    return table


def _check_evec(d: int, evec: Sequence[int]):
    if sum((i + 1) * e for i, e in enumerate(evec)) != d:
        raise ValueError(f"exponent vector {tuple(evec)} is not a partition of {d}")


def pullback_q(d: int, evec: Sequence[int]) -> MultiElement:
    """q(x) with x replaced by sum_i i*x_i, fully expanded.

    Blocks with e_i = 0 are omitted: there x_i lives on a point and Q_0(x_i) = x_i.
    """
    _check_evec(d, evec)
    r = len(evec)
    q = build_q(d)
    powers = _linear_power_table([i if e else 0 for i, e in enumerate(evec, start=1)],
                                 q.var_degree)
    out: Dict[Exponents, BiForm] = {}
    for j, c in q.terms():
        for k, m in powers[j].items():
            out[k] = c * m
    return MultiElement(r, out)


@lru_cache(maxsize=None)
def _reduction_row(e: int, k: int) -> tuple:
    """Reduced form of y^k modulo Q_e(y), as coefficients of y^0..y^e."""
    if k <= e:
        return tuple(ONE if t == k else BiForm.zero() for t in range(e + 1))
    prev = _reduction_row(e, k - 1)
    Q = build_Q(e).coeffs
    top = prev[e]
    shifted = (BiForm.zero(),) + prev[:e]
    if top.is_zero():
        return shifted
    # y^(e+1) = -(Q_e(y) - y^(e+1))
    return tuple(shifted[t] - top * Q[t] for t in range(e + 1))


def reduce_univariate(f: FormPoly, e: int) -> FormPoly:
    out = [BiForm.zero()] * (e + 1)
    for k, c in f.terms():
        row = _reduction_row(e, k)
        for t, b in enumerate(row):
            if not b.is_zero():
                out[t] = out[t] + c * b
    return FormPoly(out)


def reduce(p: MultiElement, evec: Sequence[int]) -> ReducedElement:
    """Unique representative with exponents bounded by evec.

    Variables are reduced one at a time, highest index first; the relations
    are univariate so the order does not matter.
    """
    return reduce_in_order(p, evec, range(len(evec) - 1, -1, -1))


def reduce_in_order(p: MultiElement, evec: Sequence[int], order: Iterable[int]) -> ReducedElement:
    evec = tuple(evec)
    if p.nvars != len(evec):
        raise ValueError("variable count does not match exponent vector")
    terms = dict(p.terms)
    for i in order:
        e = evec[i]
        if not any(k[i] > e for k in terms):
            continue
        out: Dict[Exponents, BiForm] = {}
        for k, c in terms.items():
            if k[i] <= e:
                out[k] = out[k] + c if k in out else c
                continue
            row = _reduction_row(e, k[i])
            for t, b in enumerate(row):
                if b.is_zero():
                    continue
                kk = k[:i] + (t,) + k[i + 1:]
                val = c * b
                out[kk] = out[kk] + val if kk in out else val
        terms = out
    return ReducedElement(evec, terms)


def reduced_pullback_q(d: int, evec: Sequence[int]) -> ReducedElement:
    """reduce(pullback_q(d, evec)) computed by Horner's rule inside the quotient ring.

    Avoids the full expansion, whose size grows with the number of variables
    even when most of them vanish (e_i = 0 forces x_i = 0).
    """
    _check_evec(d, evec)
    evec = tuple(evec)
    r = len(evec)
    active = [i for i in range(r) if evec[i] > 0]
    Qs = {i: build_Q(evec[i]).coeffs for i in active}
    q = build_q(d).coeffs
    zero_key = (0,) * r
    acc: Dict[Exponents, BiForm] = {zero_key: q[-1]}
    for c in reversed(q[:-1]):
        out: Dict[Exponents, BiForm] = {}
        for k, a in acc.items():
            for i in active:
                ai = a * (i + 1)
                e = evec[i]
                if k[i] < e:
                    kk = k[:i] + (k[i] + 1,) + k[i + 1:]
                    out[kk] = out[kk] + ai if kk in out else ai
                else:
                    Q = Qs[i]
                    for t in range(e + 1):
                        kk = k[:i] + (t,) + k[i + 1:]
                        val = -(ai * Q[t])
                        out[kk] = out[kk] + val if kk in out else val
        out[zero_key] = out[zero_key] + c if zero_key in out else c
        acc = out
    return ReducedElement(evec, acc)


def integrate(elem: ReducedElement) -> BiForm:
    """Coefficient of the top monomial prod x_i^{e_i}."""
    return elem.terms.get(elem.evec, BiForm.zero())


def _weights_factorial(e: int) -> list:
    return [Fraction((-1) ** s, factorial(s) * factorial(e - s)) for s in range(e + 1)]


def integrate_closed(f: FormPoly, e: int) -> BiForm:
    """Top coefficient of f mod Q_e via evaluation at the roots of Q_e."""
    if e < 0:
        raise ValueError("e must be nonnegative")
    total = BiForm.zero()
    for w, p in zip(_weights_factorial(e), evaluation_points(e)):
        total = total + f.evaluate(p) * w
    return exact_div(total, BiForm.linear(-1, 1) ** e)


class NonexistentClass(ArithmeticError):
    """[C/g] has no reduced representative."""


def integrate_rational(C: BiForm, g: FormPoly, e: int) -> BiForm:
    """Integral of the class [C/g] over P V_e for g linear in y.

    All terms are brought over the common denominator prod_s g(p_s) so the
    computation never leaves polynomials.
    """
    if g.var_degree != 1:
        raise ValueError("g must be linear in the formal variable")
    vals = [g.evaluate(p) for p in evaluation_points(e)]
    if any(v.is_zero() for v in vals):
        raise NonexistentClass("g vanishes at a root of Q_e")
    numer = BiForm.zero()
    for s, w in enumerate(_weights_factorial(e)):
        term = C * w
        for t, v in enumerate(vals):
            if t != s:
                term = term * v
        numer = numer + term
    denom = BiForm.linear(-1, 1) ** e
    for v in vals:
        denom = denom * v
    try:
        return exact_div(numer, denom)
    except InexactDivision as exc:
        raise NonexistentClass(str(exc)) from None


def tensor_basis(evec: Sequence[int]):
    """All reduced exponent tuples."""
    return iproduct(*(range(e + 1) for e in evec))
