"""Graded ideals of Q[c1, c2] and cohomology rings of the GIT quotients of S^d C^2.

Series are indexed by u,v-degree (so c1 has degree 1 and c2 degree 2; the
variable t has cohomological degree 2).  Only the link presentation reports
true cohomological degrees, since it contains an odd class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from .arith import RatMatrix, nullspace, rank_of_vectors, solve_in_span
from .partition import Partition
from .poly import BiForm, SymForm, divided_difference, gcd_homogeneous, from_sym, to_sym
from .thom import pi_form, pi_j, tp_reduce

Generator = Union[BiForm, SymForm]

SPACES = ("ss-equivariant", "ss-quotient", "stable-quotient")
SPACE_ALIASES = {"ss": "ss-equivariant", "ss-equivariant": "ss-equivariant",
                 "ss-quotient": "ss-quotient", "stable": "stable-quotient",
                 "stable-quotient": "stable-quotient", "link": "link"}


class UnsupportedPresentation(ValueError):
    pass


# -- graded ideals --------------------------------------------------------------

class GradedIdeal:
    """Ideal generated by homogeneous forms.

    Symmetric generators generate an ideal of Q[c1, c2].  Non-symmetric ones
    (such as Pi) are read as generators of an ideal of Q[u, v], and the ring
    meant is Q[c1, c2] modulo its symmetric part.
    """

    def __init__(self, generators: Sequence[Generator]):
        gens = []
        for g in generators:
            b = from_sym(g) if isinstance(g, SymForm) else g
            if b.is_zero():
                raise ValueError("zero generator")
            gens.append(b)
        self.generators: Tuple[BiForm, ...] = tuple(gens)

    @property
    def degrees(self) -> List[int]:
        return [g.degree for g in self.generators]

    @property
    def symmetric(self) -> bool:
        return all(g.is_symmetric() for g in self.generators)

    def __repr__(self):
        return "GradedIdeal(" + ", ".join(str(g) for g in self.generators) + ")"


def sym_dim(m: int) -> int:
    return m // 2 + 1


def _sym_vector(s: SymForm, m: int) -> List[Fraction]:
    if s.is_zero():
        return [Fraction(0)] * sym_dim(m)
    if s.degree != m:
        raise ValueError("degree mismatch")
    return list(s.coeffs)


def _uv_vector(b: BiForm, m: int) -> List[Fraction]:
    if b.is_zero():
        return [Fraction(0)] * (m + 1)
    if b.degree != m:
        raise ValueError("degree mismatch")
    return list(b.coeffs)


def _sym_multiples(I: GradedIdeal, m: int) -> List[Tuple[int, int, int, List[Fraction]]]:
    """(generator index, a, b, vector of c1^a c2^b * g) in the c1,c2 basis of degree m."""
    out = []
    for gi, g in enumerate(I.generators):
        k = m - g.degree
        if k < 0:
            continue
        s = to_sym(g)
        for b in range(k // 2 + 1):
            a = k - 2 * b
            out.append((gi, a, b, _sym_vector(s * SymForm.monomial(a, b), m)))
    return out


def _uv_multiples(I: GradedIdeal, m: int) -> List[Tuple[int, int, List[Fraction]]]:
    """(generator index, a, vector of u^a v^(k-a) g) in the u,v basis of degree m."""
    out = []
    for gi, g in enumerate(I.generators):
        k = m - g.degree
        if k < 0:
            continue
        for a in range(k + 1):
            out.append((gi, a, _uv_vector(BiForm.monomial(a, k - a) * g, m)))
    return out


def _sym_basis_uv(m: int) -> List[List[Fraction]]:
    return [_uv_vector(from_sym(SymForm.monomial(m - 2 * k, k)), m) for k in range(sym_dim(m))]


def symmetric_piece(I: GradedIdeal, m: int, route: str = "auto") -> List[List[Fraction]]:
    """Spanning vectors (c1,c2 coordinates) of the degree-m symmetric part of I.

    route "sym" multiplies symmetric generators by c1,c2-monomials; route
    "uv" intersects the Q[u,v]-ideal piece with the symmetric forms.  Both
    give the same space when the generators are symmetric.
    """
    if route == "auto":
        route = "sym" if I.symmetric else "uv"
    if route == "sym":
        if not I.symmetric:
            raise ValueError("the c1,c2 route needs symmetric generators")
        return [v for *_, v in _sym_multiples(I, m)]
    mult = [v for *_, v in _uv_multiples(I, m)]
    if not mult:
        return []
    basis = _sym_basis_uv(m)
    # solve sum x_i mult_i - sum y_k basis_k = 0; the y parts span the intersection
    cols = mult + [[-x for x in b] for b in basis]
    ns = nullspace(RatMatrix.from_columns(cols, nrows=m + 1))
    return [list(x[len(mult):]) for x in ns]


def piece_dimension(I: GradedIdeal, m: int, route: str = "auto") -> int:
    """Dimension of the degree-m piece of Q[c1,c2]/I."""
    if m < 0:
        raise ValueError("negative degree")
    vecs = symmetric_piece(I, m, route)
    return sym_dim(m) - (rank_of_vectors(vecs, sym_dim(m)) if vecs else 0)


@dataclass(frozen=True)
class PoincareSeries:
    coeffs: Tuple[int, ...]
    closed_form: Optional[str] = None

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, bound: int) -> "PoincareSeries":
        c = self.coeffs[:bound + 1]
        return PoincareSeries(c + (0,) * (bound + 1 - len(c)), self.closed_form)

    def same_coeffs(self, other: "PoincareSeries") -> bool:
        n = max(len(self), len(other))
        a = self.coeffs + (0,) * (n - len(self))
        b = other.coeffs + (0,) * (n - len(other))
        return a == b

    def __str__(self):
        return ",".join(map(str, self.coeffs))


def quotient_series(I: GradedIdeal, bound: int, route: str = "auto") -> PoincareSeries:
    return PoincareSeries(tuple(piece_dimension(I, m, route) for m in range(bound + 1)))


# -- closed-form series -----------------------------------------------------------

def _expand(numerator: Sequence[int], bound: int) -> List[int]:
    """Power series of numerator(t) / ((1-t)(1-t^2)) up to t^bound."""
    a = [numerator[k] if k < len(numerator) else 0 for k in range(bound + 1)]
    for k in range(1, bound + 1):
        a[k] += a[k - 1]
    for k in range(2, bound + 1):
        a[k] += a[k - 2]
    return a


def _poly(terms) -> List[int]:
    """Dense integer polynomial from (exponent, coefficient) pairs; repeats add up."""
    n = max(e for e, _ in terms) + 1
    out = [0] * n
    for e, c in terms:
        out[e] += c
    return out


def _mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def kirwan_series(d: int, bound: int) -> PoincareSeries:
    """(1 - t^h - t^(h+1) + t^d) / ((1-t)(1-t^2)) with h = floor(d/2)."""
    if d < 2:
        raise ValueError("need d >= 2")
    h = d // 2
    num = _poly([(0, 1), (h, -1), (h + 1, -1), (d, 1)])
    return PoincareSeries(tuple(_expand(num, bound)),
                          f"(1 - t^{h} - t^{h + 1} + t^{d})/((1 - t)(1 - t^2))")


def complete_intersection_series(a: int, b: int) -> PoincareSeries:
    """(1-t^a)(1-t^b)/((1-t)(1-t^2)) for a regular sequence; requires a polynomial result."""
    num = _mul(_poly([(0, 1), (a, -1)]), _poly([(0, 1), (b, -1)]))
    top = a + b - 3
    coeffs = _expand(num, top + 3)
    if any(coeffs[top + 1:]):
        raise ValueError(f"degrees {a}, {b} do not give a polynomial")
    return PoincareSeries(tuple(coeffs[:top + 1]),
                          f"(1 - t^{a})(1 - t^{b})/((1 - t)(1 - t^2))")


def stable_series_even(d: int) -> PoincareSeries:
    """P(t) = (1-t^(h-1))(1-t^h)/((1-t)(1-t^2)), d = 2h."""
    if d % 2 or d < 4:
        raise ValueError("need even d >= 4")
    h = d // 2
    if h == 2:
        return PoincareSeries((1,), "(1 - t)(1 - t^2)/((1 - t)(1 - t^2))")
    return complete_intersection_series(h - 1, h)


def ss_series_even(d: int, bound: int) -> PoincareSeries:
    """1/(1-t^2) + t*P(t)."""
    if d % 2:
        raise ValueError("need even d")
    P = stable_series_even(d).coeffs
    out = [1 if k % 2 == 0 else 0 for k in range(bound + 1)]
    for k, c in enumerate(P):
        if k + 1 <= bound:
            out[k + 1] += c
    return PoincareSeries(tuple(out), "1/(1 - t^2) + t*P(t)")


def ss_quotient_series_even(d: int, bound: int) -> PoincareSeries:
    """1 + t*P(t)."""
    P = stable_series_even(d).coeffs
    out = [0] * (bound + 1)
    out[0] = 1
    for k, c in enumerate(P):
        if k + 1 <= bound:
            out[k + 1] += c
    return PoincareSeries(tuple(out), "1 + t*P(t)")


def augmented_series(I: GradedIdeal, bound: int) -> PoincareSeries:
    """Series of Q<1> + c1*Q[c1,c2]/I: 1, then dim of (c1*R_{m-1} + I_m)/I_m."""
    out = [1]
    c1 = SymForm.c1()
    for m in range(1, bound + 1):
        ideal = symmetric_piece(I, m)
        c1mult = [_sym_vector(c1 * SymForm.monomial(m - 1 - 2 * b, b), m)
                  for b in range((m - 1) // 2 + 1)]
        n = sym_dim(m)
        r_ideal = rank_of_vectors(ideal, n) if ideal else 0
        out.append(rank_of_vectors(ideal + c1mult, n) - r_ideal)
    return PoincareSeries(tuple(out))


# -- membership and ideal comparison ---------------------------------------------------

@dataclass
class Membership:
    member: bool
    cofactors: Optional[List[Generator]] = None
    ideal_rank: int = 0
    augmented_rank: int = 0

    def __bool__(self):
        return self.member


def membership(f: Generator, I: GradedIdeal) -> Membership:
    """Decide f in I in degree deg f; members come with cofactors, non-members with ranks.

    For symmetric ideals the cofactors are SymForms; otherwise BiForm cofactors
    over Q[u,v] are returned.
    """
    fb = from_sym(f) if isinstance(f, SymForm) else f
    if fb.is_zero():
        return Membership(True, [SymForm.zero() for _ in I.generators])
    m = fb.degree
    if I.symmetric and fb.is_symmetric():
        mults = _sym_multiples(I, m)
        target = _sym_vector(to_sym(fb), m)
        length = sym_dim(m)
    else:
        mults = [(gi, a, None, v) for gi, a, v in _uv_multiples(I, m)]
        target = _uv_vector(fb, m)
        length = m + 1
    vecs = [v for *_, v in mults]
    r = rank_of_vectors(vecs, length) if vecs else 0
    if not vecs:
        return Membership(False, None, 0, 1)
    sol = solve_in_span(target, RatMatrix.from_columns(vecs, nrows=length))
    if sol is None:
        return Membership(False, None, r, r + 1)
    cof: List[Generator]
    if I.symmetric and fb.is_symmetric():
        cof = [SymForm.zero() for _ in I.generators]
        for (gi, a, b, _), x in zip(mults, sol):
            if x:
                cof[gi] = cof[gi] + SymForm.monomial(a, b, x)
    else:
        cof = [BiForm.zero() for _ in I.generators]
        for (gi, a, _, _), x in zip(mults, sol):
            if x:
                k = m - I.generators[gi].degree
                cof[gi] = cof[gi] + BiForm.monomial(a, k - a, x)
    return Membership(True, cof, r, r)


def pieces_equal(I: GradedIdeal, J: GradedIdeal, m: int) -> bool:
    a = symmetric_piece(I, m)
    b = symmetric_piece(J, m)
    n = sym_dim(m)
    ra = rank_of_vectors(a, n) if a else 0
    rb = rank_of_vectors(b, n) if b else 0
    if ra != rb:
        return False
    return ra == (rank_of_vectors(a + b, n) if a + b else 0)


def first_difference(I: GradedIdeal, J: GradedIdeal, bound: int) -> Optional[int]:
    for m in range(bound + 1):
        if not pieces_equal(I, J, m):
            return m
    return None


def ideal_equal_up_to(I: GradedIdeal, J: GradedIdeal, bound: int) -> bool:
    return first_difference(I, J, bound) is None


# -- the ideals of the moduli problem -----------------------------------------------

def kirwan_partitions(d: int) -> Tuple[Partition, Partition]:
    """lambda_1 = (1^(d-h-1), h+1), lambda_2 = (1^(d-h-2), h+2)."""
    h = d // 2
    return (Partition((1,) * (d - h - 1) + (h + 1,)),
            Partition((1,) * (d - h - 2) + (h + 2,)))


def stable_partitions(d: int) -> Tuple[Partition, Partition]:
    """lambda_0 = (1^h, h), lambda_0' = (1^(h-2), 2, h) for d = 2h."""
    h = d // 2
    return Partition((1,) * h + (h,)), Partition((1,) * (h - 2) + (2, h))


def kirwan_ideal(d: int) -> GradedIdeal:
    return GradedIdeal([tp_reduce(lam).value for lam in kirwan_partitions(d)])


def pi_ideal(d: int) -> GradedIdeal:
    """(Pi, dPi)."""
    P = pi_form(d)
    return GradedIdeal([P, divided_difference(P)])


def c1_pi_ideal(d: int) -> GradedIdeal:
    """(c1 Pi, c1 dPi)."""
    P = pi_form(d)
    c1 = BiForm.linear(1, 1)
    return GradedIdeal([c1 * P, c1 * divided_difference(P)])


def stable_ideal(d: int) -> GradedIdeal:
    return GradedIdeal([tp_reduce(lam).value for lam in stable_partitions(d)])


def lambda2_identity_holds(d: int) -> bool:
    """tp(lambda_2) = h L* c1 dPi - 2h c1 Pi with L = (h+1)v + (h-1)u, d = 2h."""
    h = d // 2
    P = pi_form(d)
    Lstar = BiForm.linear(h + 1, h - 1)
    c1 = BiForm.linear(1, 1)
    rhs = Lstar * c1 * divided_difference(P) * h - c1 * P * (2 * h)
    return tp_reduce(kirwan_partitions(d)[1]).biform == rhs


# -- presentations ---------------------------------------------------------------

@dataclass
class RingPresentation:
    space: str
    d: int
    generators: List[Tuple[str, int]]
    relations: List[Generator]
    relation_labels: List[str]
    series: PoincareSeries
    expected: Optional[PoincareSeries] = None
    verified: Optional[bool] = None
    grading: str = "u,v-degree (deg t = 2)"
    notes: List[str] = field(default_factory=list)
    betti: Optional[Tuple[int, ...]] = None


def presentation(d: int, space: str, bound: Optional[int] = None) -> RingPresentation:
    space = SPACE_ALIASES.get(space, space)
    if space == "link":
        return presentation_link(d)
    if space not in SPACES:
        raise UnsupportedPresentation(f"unknown space {space!r}")
    if d < 3:
        raise UnsupportedPresentation("need d >= 3")
    if bound is None:
        bound = 2 * d
    gens = [("c1", 1), ("c2", 2)]
    l1, l2 = kirwan_partitions(d)
    if space == "stable-quotient":
        if d % 2:
            raise UnsupportedPresentation(
                "for odd d the stable and semistable quotients coincide; use ss-quotient")
        if d < 4:
            raise UnsupportedPresentation("need even d >= 4")
        l0, l0p = stable_partitions(d)
        I = stable_ideal(d)
        series = quotient_series(I, bound)
        expected = stable_series_even(d).truncate(bound)
        P = pi_form(d)
        return RingPresentation(
            space, d, gens, [tp_reduce(l0).value, tp_reduce(l0p).value],
            [f"Tp{l0}", f"Tp{l0p}"], series, expected, series.same_coeffs(expected),
            notes=[f"same ideal as (Pi, dPi) with Pi = {P}",
                   f"dPi = {to_sym(divided_difference(P))}"])
    I = kirwan_ideal(d)
    rels = [tp_reduce(l1).value, tp_reduce(l2).value]
    labels = [f"Tp{l1}", f"Tp{l2}"]
    if space == "ss-equivariant" or d % 2:
        series = quotient_series(I, bound)
        expected = kirwan_series(d, bound)
        notes = []
        if space == "ss-quotient":
            notes.append("d odd: X^ss = X^s and the quotient ring equals the equivariant one")
        return RingPresentation(space, d, gens, rels, labels, series, expected,
                                series.same_coeffs(expected), notes=notes)
    series = augmented_series(I, bound)
    expected = ss_quotient_series_even(d, bound)
    return RingPresentation(
        space, d, gens, rels, labels, series, expected, series.same_coeffs(expected),
        notes=["augmented ring Q<1> + c1*Q[c1,c2]/I: positive-degree classes are c1-multiples"])


def presentation_link(d: int) -> RingPresentation:
    """Cohomology of the link of the strictly semistable point, d = 2h, h >= 3."""
    if d % 2 or d < 6:
        raise UnsupportedPresentation("the link needs even d >= 6")
    h = d // 2
    k = h // 2
    gdeg = 4 * h - 4 * k - 3
    top = 4 * h - 7
    betti = [0] * (top + 1)
    for a in range(k):
        betti[4 * a] += 1
        betti[gdeg + 4 * a] += 1
    betti = tuple(betti)
    ok = link_betti_check(betti, h) and betti == link_betti_gysin(d)
    return RingPresentation(
        "link", d, [("c2", 4), ("g", gdeg)], [_c2_power(k)],
        ["c2" if k == 1 else f"c2^{k}", "g^2"], PoincareSeries(betti), None, ok,
        grading="cohomological degree", betti=betti,
        notes=[f"real dimension {top}",
               "g is the fundamental class" if k == 1 else f"g is dual to c2^{k - 1}"])


def _c2_power(k: int) -> SymForm:
    out = SymForm.monomial(0, 0)
    for _ in range(k):
        out = out * SymForm.c2()
    return out


def link_betti_check(betti: Sequence[int], h: int) -> bool:
    top = 4 * h - 7
    return (len(betti) == top + 1
            and all(betti[i] == betti[top - i] for i in range(top + 1))
            and sum(betti) == 2 * (h // 2)
            and all(b in (0, 1) for b in betti))


def link_betti_gysin(d: int) -> Tuple[int, ...]:
    """Betti numbers of the link from the Gysin sequence of the circle bundle.

    With M = Q[c1,c2]/(Pi, dPi) the stable quotient ring, the link has
    H^{2m} = coker(c1: M_{m-1} -> M_m) and H^{2m+1} = ker(c1: M_m -> M_{m+1}).
    """
    if d % 2 or d < 6:
        raise UnsupportedPresentation("the link needs even d >= 6")
    h = d // 2
    top = 4 * h - 7
    P = pi_form(d)
    bound = 2 * h
    M = quotient_series(pi_ideal(d), bound).coeffs
    coker = quotient_series(
        GradedIdeal([P, divided_difference(P), BiForm.linear(1, 1)]), bound).coeffs
    betti = [0] * (top + 1)
    for m in range(bound):
        if 2 * m <= top:
            betti[2 * m] += coker[m]
        nxt = M[m + 1] - coker[m + 1] if m + 1 <= bound else 0
        ker = M[m] - nxt
        if ker and 2 * m + 1 > top:
            raise ArithmeticError(f"class beyond the top degree at m={m}")
        if 2 * m + 1 <= top:
            betti[2 * m + 1] += ker
    return tuple(betti)


# -- generating function and gcd certificates --------------------------------------

@dataclass
class GenFunctionReport:
    d: int
    jmax: int
    coefficients_ok: bool
    first_failing_j: Optional[int]
    ideal_checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.coefficients_ok and all(self.ideal_checks.values())


def gen_function_coefficients(d: int, jmax: int) -> List[BiForm]:
    """j!*G_j for G(q) = [1 + (u-v)q]^(du/(u-v)).

    Uses the recurrence from (1 + (u-v)q) G'(q) = du G(q):
    (j+1) G_{j+1} = (du - j(u-v)) G_j, so j! G_j picks up one factor per step.
    """
    out = [BiForm.const(1)]
    for j in range(jmax):
        out.append(out[-1] * (BiForm.linear(d, 0) - BiForm.linear(1, -1) * j))
    return out


def binomial_series_coefficient(d: int, j: int) -> BiForm:
    """j! * binom(alpha, j) (u-v)^j with alpha = du/(u-v), cleared of denominators."""
    out = BiForm.const(1)
    for l in range(j):
        out = out * (BiForm.linear(d, 0) - BiForm.linear(l, -l))
    return out


def gen_function_check(d: int, jmax: int, bound: Optional[int] = None) -> GenFunctionReport:
    if d < 3:
        raise ValueError("need d >= 3")
    if bound is None:
        bound = 2 * d
    rec = gen_function_coefficients(d, jmax)
    first = None
    for j in range(jmax + 1):
        if not (rec[j] == pi_j(d, j) == binomial_series_coefficient(d, j)):
            first = j
            break
    h = d // 2
    # dPi_j vanishes once Pi_j = C_{d+1} is symmetric (j = d+1); such terms add nothing
    dG = [divided_difference(pi_j(d, j)) * Fraction(1, factorial(j)) for j in range(h + 1, h + 4)]
    G = GradedIdeal([g for g in dG if not g.is_zero()])
    checks = {}
    if d % 2 == 0:
        checks["(dG_j, h<j<=h+3) = (Pi, dPi)"] = ideal_equal_up_to(G, pi_ideal(d), bound)
        checks["(dG_j, h<j<=h+3) = (c1 Pi, c1 dPi)"] = ideal_equal_up_to(G, c1_pi_ideal(d), bound)
    else:
        checks["(dG_j, h<j<=h+3) = (Tp l1, Tp l2)"] = ideal_equal_up_to(G, kirwan_ideal(d), bound)
    return GenFunctionReport(d, jmax, first is None, first, checks)


@dataclass
class GcdReport:
    d: int
    pi: BiForm
    gcd_pi_swap: BiForm
    gcd_pi_dpi: BiForm

    @property
    def ok(self) -> bool:
        return self.gcd_pi_swap == 1 and self.gcd_pi_dpi == 1


def gcd_certificates(d: int) -> GcdReport:
    if d < 3:
        raise ValueError("need d >= 3")
    P = pi_form(d)
    return GcdReport(d, P, gcd_homogeneous(P, P.swap()),
                     gcd_homogeneous(P, divided_difference(P)))


__all__ = [
    "GradedIdeal", "PoincareSeries", "RingPresentation", "Membership",
    "piece_dimension", "quotient_series", "symmetric_piece", "kirwan_series",
    "stable_series_even", "ss_series_even", "ss_quotient_series_even",
    "complete_intersection_series", "augmented_series", "membership",
    "ideal_equal_up_to", "first_difference", "presentation", "presentation_link",
    "gen_function_check", "gen_function_coefficients", "gcd_certificates",
    "kirwan_ideal", "pi_ideal", "c1_pi_ideal", "stable_ideal", "kirwan_partitions",
    "stable_partitions", "lambda2_identity_holds", "link_betti_check",
    "link_betti_gysin",
]
