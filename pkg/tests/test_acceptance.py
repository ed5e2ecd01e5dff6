"""Acceptance criteria; each test prints one PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
which repeats the lines in its terminal summary.
"""

import random
import time
from fractions import Fraction

from rootloci import moduli as M
from rootloci.partition import Partition, hilbert_degree, partitions
from rootloci.poly import BiForm, divided_difference, swap
from rootloci.thom import (check_relations_even, pi_j, projective_degree, tp_e3, tp_e3_j2,
                           tp_kirwan, tp_naive, tp_power_block, tp_reduce, tp_sum,
                           tp_two_block)

RESULTS = {}


def report(num, title, ok, detail=""):
    line = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[num] = line
    print(line)
    assert ok, line


def _all_partitions(lo, hi):
    return [lam for d in range(lo, hi + 1) for lam in partitions(d)]


def test_criterion_01_three_way_agreement():
    lams = _all_partitions(2, 10)
    start = time.perf_counter()
    bad = []
    for lam in lams:
        a, b, c = tp_reduce(lam), tp_naive(lam), tp_sum(lam)
        if not (a.value == b.value == c.value):
            bad.append(str(lam))
    elapsed = time.perf_counter() - start
    # p(2) + ... + p(10)
    count_ok = len(lams) == 137
    report(1, "reduce = naive = sum for every partition with 2 <= d <= 10",
           not bad and count_ok and elapsed < 60,
           f"{len(lams)} partitions, {len(bad)} disagreements, {elapsed:.2f}s")


def test_criterion_02_hilbert_degree():
    bad = [str(lam) for lam in _all_partitions(2, 10)
           if projective_degree(tp_reduce(lam)) != hilbert_degree(lam)]
    report(2, "projective degree equals the Hilbert degree", not bad,
           f"{len(bad)} mismatches" + (f": {', '.join(bad[:5])}" if bad else ""))


SPOT = [((2,), "2*c1"), ((2, 1), "6*c1"), ((3,), "6*c1^2 + 3*c2"),
        ((2, 2), "12*c1^2 + 16*c2"), ((3, 1, 1, 1), "120*c1^2 - 48*c2")]


def test_criterion_03_spot_values():
    bad = []
    for parts, want in SPOT:
        lam = Partition(parts)
        for fn in (tp_reduce, tp_naive, tp_sum):
            got = str(fn(lam))
            if got != want:
                bad.append(f"{fn.__name__}{lam} = {got}")
    report(3, "spot values by all three algorithms", not bad,
           "; ".join(bad) if bad else f"{len(SPOT)} values x 3 methods")


def test_criterion_04_closed_forms():
    bad = []
    n = 0
    ref = lambda parts: tp_reduce(Partition(parts)).value  # noqa: E731
    for d in range(1, 13):
        for i in range(1, d + 1):
            if d % i == 0:
                n += 1
                if tp_power_block(i, d // i).value != ref((i,) * (d // i)):
                    bad.append(f"power block {i}^{d // i}")
    for d in range(3, 11):
        for j in range(2, d):
            n += 1
            if tp_kirwan(d - j, j).value != ref((1,) * (d - j) + (j,)):
                bad.append(f"kirwan 1^{d - j} {j}")
        for lam in partitions(d):
            blocks = lam.blocks()
            if len(blocks) == 2:
                (i, ei), (j, ej) = blocks
                n += 1
                if tp_two_block(i, ei, j, ej).value != ref(lam.parts):
                    bad.append(f"two block {lam}")
    for h in range(3, 7):
        for j in range(2, h):
            n += 1
            if tp_e3(h, j).value != ref((1,) * (h - j) + (j, h)):
                bad.append(f"e3 h={h} j={j}")
        n += 1
        if tp_e3_j2(h).value != ref((1,) * (h - 2) + (2, h)):
            bad.append(f"e3 j=2 form h={h}")
    report(4, "closed forms agree with the reduction algorithm", not bad,
           f"{n} comparisons" + (f", failing: {', '.join(bad)}" if bad else ""))


def _random_biform(rng, max_degree=8):
    m = rng.randint(0, max_degree)
    return BiForm([Fraction(rng.randint(-30, 30), rng.randint(1, 5)) for _ in range(m + 1)])


def test_criterion_05_relations_and_leibniz():
    rel_bad = [h for h in (3, 4, 5, 6) if not check_relations_even(h).ok]
    rng = random.Random(20240601)
    pairs = 200
    leib_bad = 0
    for _ in range(pairs):
        a, b = _random_biform(rng), _random_biform(rng)
        lhs = divided_difference(a * b)
        rhs = swap(b) * divided_difference(a) + a * divided_difference(b)
        leib_bad += lhs != rhs
    report(5, "even-d relations for d in {6,8,10,12} and the Leibniz rule",
           not rel_bad and not leib_bad,
           f"relation failures at h={rel_bad}, Leibniz {pairs - leib_bad}/{pairs} pairs")


def test_criterion_06_moduli_series():
    bad = []
    for d in range(3, 13):
        b = 2 * d
        if not M.quotient_series(M.kirwan_ideal(d), b).same_coeffs(M.kirwan_series(d, b)):
            bad.append(f"kirwan d={d}")
        if d % 2 == 0:
            if not M.quotient_series(M.pi_ideal(d), b).same_coeffs(
                    M.stable_series_even(d).truncate(b)):
                bad.append(f"(Pi, dPi) d={d}")
            if not M.augmented_series(M.kirwan_ideal(d), b).same_coeffs(
                    M.ss_quotient_series_even(d, b)):
                bad.append(f"1 + tP d={d}")
    report(6, "Poincare series of the three quotient rings for 3 <= d <= 12", not bad,
           ", ".join(bad) if bad else "all termwise equal up to 2d")


def test_criterion_07_non_membership():
    bad = []
    n = 0
    for d in (6, 8, 10, 12):
        h = d // 2
        I = M.kirwan_ideal(d)
        for j in range(2, h):
            lam = Partition((1,) * (h - j) + (j, h))
            n += 1
            if M.membership(tp_reduce(lam).value, I).member:
                bad.append(str(lam))
    report(7, "Tp(1^(h-j), j, h) lies outside (Tp l1, Tp l2)", not bad,
           f"{n} certificates" + (f", members: {', '.join(bad)}" if bad else ""))


def test_criterion_08_ideal_identities_and_gcd():
    bad = []
    for d in (6, 8, 10, 12):
        if not M.ideal_equal_up_to(M.kirwan_ideal(d), M.c1_pi_ideal(d), 2 * d):
            bad.append(f"(Tp l1, Tp l2) d={d}")
        if not M.ideal_equal_up_to(M.stable_ideal(d), M.pi_ideal(d), 2 * d):
            bad.append(f"(Tp l0, Tp l0') d={d}")
    for d in range(5, 17):
        if not M.gcd_certificates(d).ok:
            bad.append(f"gcd d={d}")
    report(8, "ideal identities and gcd(Pi, Pi*) = gcd(Pi, dPi) = 1", not bad,
           ", ".join(bad) if bad else "d in {6,8,10,12}; gcds for 5 <= d <= 16")


def test_criterion_09_link():
    bad = []
    for d in (6, 8, 10, 12):
        p = M.presentation_link(d)
        if not (M.link_betti_check(p.betti, d // 2) and p.betti == M.link_betti_gysin(d)):
            bad.append(str(d))
    report(9, "link Betti numbers: duality, total rank 2[h/2], values in {0,1}", not bad,
           f"failing d: {', '.join(bad)}" if bad else "also matches the Gysin sequence")


def test_criterion_10_generating_function():
    coeff_bad = []
    for d in range(1, 13):
        coeffs = M.gen_function_coefficients(d, 12)
        for j in range(13):
            if not (coeffs[j] == pi_j(d, j) == M.binomial_series_coefficient(d, j)):
                coeff_bad.append(f"d={d} j={j}")
    ideal_bad = []
    for d in (6, 8):
        h = d // 2
        gens = [divided_difference(pi_j(d, j)) for j in range(h + 1, h + 4)]
        G = M.GradedIdeal([g for g in gens if not g.is_zero()])
        m = M.first_difference(G, M.pi_ideal(d), 2 * d)
        if m is not None:
            ideal_bad.append(f"d={d} differs first in degree {m}")
    report(10, "j! G_j = Pi_j, and (dPi_j, h < j <= h+3) = (Pi, dPi) for d in {6,8}",
           not coeff_bad and not ideal_bad,
           f"coefficients: {'ok' if not coeff_bad else ', '.join(coeff_bad)}; "
           f"ideal: {'ok' if not ideal_bad else '; '.join(ideal_bad)}")


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
