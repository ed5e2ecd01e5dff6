"""Thom polynomials of coincident root loci X_lambda in S^d C^2.

Three general algorithms (reduction in the equivariant cohomology of a
product of projective spaces, the expanded "naive" sum, and the
compact sum over s-tuples) plus closed forms for special partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Dict, List, Tuple

from .equivariant import build_Q, chern, integrate, reduced_pullback_q, weights
from .partition import Partition, hilbert_degree
from .poly import (ONE, BiForm, InexactDivision, SymForm, divided_difference,
                   exact_div, product, to_sym)

V_MINUS_U = BiForm.linear(-1, 1)
U_MINUS_V = BiForm.linear(1, -1)


@dataclass(frozen=True)
class ThomPoly:
    partition: Partition
    value: SymForm
    method: str

    @property
    def codim(self) -> int:
        return self.partition.codim

    @property
    def biform(self) -> BiForm:
        return self.value.to_biform()

    def __str__(self):
        return str(self.value)


def _finish(lam: Partition, form: BiForm, method: str) -> ThomPoly:
    if not form.is_zero() and form.degree != lam.codim:
        raise InexactDivision(
            f"{method}: got degree {form.degree} for {lam}, expected {lam.codim}")
    return ThomPoly(lam, to_sym(form), method)


def tp_reduce(lam: Partition) -> ThomPoly:
    """Top coefficient of the reduced pullback of q."""
    return _finish(lam, integrate(reduced_pullback_q(lam.d, lam.evec)), "reduce")


def _compositions(j: int, r: int):
    if r == 1:
        yield (j,)
        return
    for a in range(j + 1):
        for rest in _compositions(j - a, r - 1):
            yield (a,) + rest


def _multinomial(ks) -> int:
    out = factorial(sum(ks))
    for k in ks:
        out //= factorial(k)
    return out


def tp_naive(lam: Partition) -> ThomPoly:
    d, n, evec = lam.d, lam.n, lam.evec
    # blocks with e_i = 0 contribute (0u + 0v)^j_i, so only j_i = 0 survives there
    active = [i for i, e in enumerate(evec, start=1) if e]
    cache: Dict[Tuple[int, int], BiForm] = {}

    def inner(i: int, ji: int) -> BiForm:
        # sum over s_i of (-1)^s_i (-i)^j_i ((e_i-s_i)u + s_i v)^j_i / (s_i!(e_i-s_i)!)
        key = (i, ji)
        if key not in cache:
            e = evec[i - 1]
            acc = BiForm.zero()
            for s in range(e + 1):
                w = Fraction((-1) ** s * (-i) ** ji, factorial(s) * factorial(e - s))
                acc = acc + BiForm.linear(e - s, s) ** ji * w
            cache[key] = acc
        return cache[key]

    total = BiForm.zero()
    for j in range(n, d + 1):
        Cdj = chern(d, d - j)
        for js in _compositions(j, len(active)):
            term = Cdj * _multinomial(js)
            for i, ji in zip(active, js):
                term = term * inner(i, ji)
                if term.is_zero():
                    break
            total = total + term
    return _finish(lam, exact_div(total, V_MINUS_U ** n), "naive")


def _top_chern_without(d: int) -> List[BiForm]:
    """C_{d+1}(S^d) / (ku + (d-k)v) for k = 0..d, via prefix/suffix products."""
    ws = weights(d)
    prefix = [ONE]
    for w in ws:
        prefix.append(prefix[-1] * w)
    suffix = [ONE]
    for w in reversed(ws):
        suffix.append(suffix[-1] * w)
    suffix.reverse()
    return [prefix[k] * suffix[k + 1] for k in range(d + 1)]


def tp_sum(lam: Partition) -> ThomPoly:
    """C_{d+1}/(v-u)^n * sum_s (-1)^|s| / prod s_i!(e_i-s_i)! / (du - k(u-v)).

    Terms are grouped by k = sum_i i*s_i; the denominator (d-k)u + kv is a
    weight of S^d, so each quotient is a product of the other weights.
    """
    d, n, evec = lam.d, lam.n, lam.evec
    grouped: Dict[int, Fraction] = {}
    for ss in iproduct(*(range(e + 1) for e in evec)):
        k = sum(i * s for i, s in enumerate(ss, start=1))
        w = Fraction((-1) ** sum(ss))
        for s, e in zip(ss, evec):
            w /= factorial(s) * factorial(e - s)
        grouped[k] = grouped.get(k, Fraction(0)) + w
    others = _top_chern_without(d)
    total = BiForm.zero()
    for k, w in grouped.items():
        if w:
            total = total + others[d - k] * w
    return _finish(lam, exact_div(total, V_MINUS_U ** n), "sum")


METHODS = {"reduce": tp_reduce, "naive": tp_naive, "sum": tp_sum}


def thom_polynomial(lam: Partition, method: str = "reduce") -> ThomPoly:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(lam)


# -- closed forms -------------------------------------------------------------

def tp_power_block(i: int, e: int) -> ThomPoly:
    """lambda = i^e: i^e * prod over j not divisible by i of (ju + (d-j)v)."""
    d = i * e
    form = product(w for j, w in enumerate(weights(d)) if j % i) * (i ** e)
    return _finish(Partition((i,) * e), form, "power_block")


def tp_two_block(i: int, e_i: int, j: int, e_j: int) -> ThomPoly:
    """lambda = i^e_i j^e_j with the x_i integral done in closed form."""
    if i == j:
        raise ValueError("the two blocks must have different part sizes")
    d = i * e_i + j * e_j
    lam = Partition((i,) * e_i + (j,) * e_j)
    top = product(weights(d))
    Qi = build_Q(e_i)
    total = BiForm.zero()
    for s in range(e_j + 1):
        a = BiForm.linear(j * e_j - j * s, j * s)
        # C_{d+1} / (i*Q_{e_i}(a/i)); the denominator is a product of weights of S^d
        denom = Qi.evaluate(a.scale(Fraction(1, i))) * i
        quotient = exact_div(top, denom)
        total = total + quotient * Fraction((-1) ** s, factorial(s) * factorial(e_j - s))
    return _finish(lam, exact_div(total, V_MINUS_U ** e_j), "two_block")


def kirwan_product(e1: int, j: int) -> BiForm:
    return product(BiForm.linear(e1 + j - l, l) for l in range(j))


def tp_kirwan(e1: int, j: int) -> ThomPoly:
    """lambda = (1^e1, j): divided difference of prod_{l<j} (lv + (e1+j-l)u)."""
    if j < 2 or e1 < 1:
        raise ValueError("need j >= 2 and e1 >= 1")
    lam = Partition((1,) * e1 + (j,))
    return _finish(lam, divided_difference(kirwan_product(e1, j)), "kirwan")


def pi_form(d: int) -> BiForm:
    """Pi = prod_{l=0}^{h-1} (lv + (d-l)u) for even d, upper index h for odd d."""
    h = d // 2
    top = h if d % 2 else h - 1
    return product(BiForm.linear(d - l, l) for l in range(top + 1))


def pi_j(d: int, j: int) -> BiForm:
    """Pi_j = prod_{l=0}^{j-1} (lv + (d-l)u); Pi_0 = 1."""
    return product(BiForm.linear(d - l, l) for l in range(j))


def e3_D(h: int, j: int) -> BiForm:
    """The correction factor D_j for lambda = (1^{h-j}, j, h), d = 2h.

    D_j = [prod_{l=h-j+1}^{h} (lu + (d-l)v) - prod_{l=0}^{j-1} (lu + (d-l)v)] / (u-v)
    """
    d = 2 * h
    upper = product(BiForm.linear(l, d - l) for l in range(h - j + 1, h + 1))
    lower = product(BiForm.linear(l, d - l) for l in range(j))
    return exact_div(upper - lower, U_MINUS_V)


def tp_e3(h: int, j: int) -> ThomPoly:
    if not (h > 2 and 1 < j < h):
        raise ValueError("need h > 2 and 1 < j < h")
    d = 2 * h
    lam = Partition((1,) * (h - j) + (j, h))
    return _finish(lam, divided_difference(e3_D(h, j) * pi_j(d, h)), "e3")


def tp_e3_j2(h: int) -> ThomPoly:
    """j = 2 specialization: h(h-1) * d[(u+3v) Pi]."""
    d = 2 * h
    lam = Partition((1,) * (h - 2) + (2, h))
    form = divided_difference(BiForm.linear(1, 3) * pi_j(d, h)) * (h * (h - 1))
    return _finish(lam, form, "e3_j2")


# -- degrees and relations ------------------------------------------------------

def projective_degree(tp: ThomPoly) -> Fraction:
    d = tp.partition.d
    val = tp.biform.evaluate(Fraction(1, d), Fraction(1, d))
    if val.denominator != 1 or val <= 0:
        raise ArithmeticError(f"degree of {tp.partition} came out as {val}")
    return val


@dataclass
class RelationReport:
    h: int
    ok: bool
    failures: List[str]

    def __bool__(self):
        return self.ok


def check_relations_even(h: int, method: str = "reduce") -> RelationReport:
    """tp(l1) = h c1 tp(l0) and (h-1) tp(l2) = (h-1)(h-2) c1 tp(l1) + c1 tp(l0')."""
    if h <= 2:
        raise ValueError("need h > 2")
    tp = lambda parts: thom_polynomial(Partition(parts), method).value  # noqa: E731
    l0 = tp((1,) * h + (h,))
    l0p = tp((1,) * (h - 2) + (2, h))
    l1 = tp((1,) * (h - 1) + (h + 1,))
    l2 = tp((1,) * (h - 2) + (h + 2,))
    c1 = SymForm.c1()
    failures = []
    if not (l1 - c1 * l0 * h).is_zero():
        failures.append("tp(l1) = h*c1*tp(l0)")
    if not (l2 * (h - 1) - (c1 * l1 * ((h - 1) * (h - 2)) + c1 * l0p)).is_zero():
        failures.append("(h-1)tp(l2) = (h-1)(h-2)c1*tp(l1) + c1*tp(l0')")
    return RelationReport(h, not failures, failures)


__all__ = [
    "ThomPoly", "tp_reduce", "tp_naive", "tp_sum", "thom_polynomial", "METHODS",
    "tp_power_block", "tp_two_block", "tp_kirwan", "tp_e3", "tp_e3_j2", "e3_D",
    "pi_form", "pi_j", "kirwan_product", "projective_degree", "hilbert_degree",
    "check_relations_even", "RelationReport",
]
