"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import random
import time

from blockdepth.block import bbracket, p_gen, pi_even
from blockdepth.components import clear_caches, evaluate, graded_component, nested_value
from blockdepth.depth import dbracket, phi
from blockdepth.lie import left_normed_words, witt_count
from blockdepth.linalg import bareiss_rank, nullspace, rank
from blockdepth.pairing import block_functional, depth_functional, depth_pattern, evaluate as pair
from blockdepth.poly import Poly, Q
from blockdepth.relations import regression_suite, totally_odd_indices, verify_dictionary
from blockdepth.series import cusp_series, uneven_bk_table
from blockdepth.words import BlockTuple, ZetaIndex, zeta_to_word

from conftest import ACCEPTANCE_LINES


def record(n, name, ok, detail=""):
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_criterion_1_cusp_relation():
    clear_caches()
    t = time.perf_counter()
    cusp = dbracket(phi(1), phi(4)) - dbracket(phi(2), phi(3)) * 3
    ker = nullspace(graded_component("even", 12, 2).matrix())
    elapsed = time.perf_counter() - t
    ok = cusp.is_zero() and ker == [[1, -3]] and elapsed < 1
    record(1, "cusp-form relation", ok, f"kernel {[[str(x) for x in v] for v in ker]}, {elapsed:.2f}s")


def test_criterion_2_homomorphism():
    bad = []
    for a in range(3, 28, 2):
        for b in range(3, 31 - a, 2):
            pa, pb = p_gen((a - 1) // 2), p_gen((b - 1) // 2)
            if pi_even(bbracket(pa, pb)) != bbracket(pi_even(pa), pi_even(pb)):
                bad.append((a, b))
    record(2, "projection commutes with the block bracket", not bad, f"violations {bad}" if bad else "all pairs a+b<=30")


def test_criterion_3_commuting_triangle():
    bad, count = [], 0
    for r in (1, 2, 3):
        for W in range(3, 34):
            for w in left_normed_words(W, r):
                count += 1
                blk, even, dep = (evaluate(w, alg) for alg in ("block", "even", "depth"))
                if not (pi_even(blk) == even == pi_even(dep).scale(2 ** r)):
                    bad.append(str(w))
    record(3, "commuting triangle", not bad, f"{count} words" + (f", violations {bad[:5]}" if bad else ""))


def test_criterion_4_even_vs_depth_ranks():
    bad = []
    for W in range(3, 34):
        e = rank(graded_component("even", W, 3).matrix())
        d = rank(graded_component("depth", W, 3).matrix())
        if e != d:
            bad.append((W, e, d))
    record(4, "rank(even, W, 3) = rank(depth, W, 3) for W <= 33", not bad, f"mismatches {bad}" if bad else "")


def test_criterion_5_kernel_dimensions():
    S = cusp_series(24)
    got = {W: len(nullspace(graded_component("even", W, 2).matrix())) for W in (12, 14, 16, 18, 20, 22, 24)}
    ok = all(got[W] == S[W] for W in got) and [got[W] for W in sorted(got)] == [1, 0, 1, 1, 1, 1, 2]
    record(5, "kernel dimensions match cusp forms", ok, f"{got}")


def test_criterion_6_freeness():
    bad = []
    for W in range(3, 26):
        for r in (1, 2, 3):
            M = graded_component("block", W, r).matrix()
            rk = rank(M)
            if rk != witt_count(W, r) or (M.nrows and bareiss_rank(M) != rk):
                bad.append((W, r, rk, witt_count(W, r)))
    record(6, "block ranks equal Witt counts for W <= 25, r <= 3", not bad, f"mismatches {bad}" if bad else "")


def test_criterion_7_regression_relations():
    results = regression_suite()
    failed = [r.name for r in results if not r.passed]
    record(7, "regression relations", not failed, f"failed {failed}" if failed else f"{len(results)} relations")


def test_criterion_8_dictionary():
    bad, count = [], 0
    for W in range(1, 22):
        for r in (1, 2, 3):
            for z in totally_odd_indices(W, r):
                count += 1
                if not verify_dictionary(z).verified:
                    bad.append(str(z))
    record(8, "dictionary relations verify", not bad, f"{count} indices" + (f", failed {bad[:5]}" if bad else ""))


def test_criterion_9_uneven_bk_table():
    T = uneven_bk_table(20, 3)
    got = {(12, 2): T[12][2], (3, 1): T[3][1], (15, 3): T[15][3]}
    expected = {(12, 2): 3, (3, 1): 1, (15, 3): 2}
    record(9, "uneven BK table coefficients", got == expected, f"got {got}, expected {expected}")


def _prefactor(n):
    pre = Poly.const(n, 1)
    for i in range(n):
        pre = pre * Poly.var(n, i)
    return pre * (Poly.var(n, 0) - Poly.var(n, n - 1))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for a in range(1, total):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def test_criterion_10_property_suites():
    rnd = random.Random(20240611)
    violations = []
    labels = [3, 5, 7, 9]
    for _ in range(220):
        a, b, c = (rnd.choice(labels) for _ in range(3))
        for alg in ("depth", "block", "even"):
            if nested_value((a, b), alg) != -nested_value((b, a), alg):
                violations.append(("antisymmetry", alg, a, b))
            jac = nested_value((a, b, c), alg) + nested_value((b, c, a), alg) + nested_value((c, a, b), alg)
            if not jac.is_zero():
                violations.append(("jacobi", alg, a, b, c))
        f = dbracket(phi((a - 1) // 2), phi((b - 1) // 2))
        g, h = phi((c - 1) // 2), phi((rnd.choice(labels) - 1) // 2)
        if not (dbracket(f, dbracket(g, h)) + dbracket(g, dbracket(h, f)) + dbracket(h, dbracket(f, g))).is_zero():
            violations.append(("jacobi-general", a, b, c))

    for _ in range(200):
        n = rnd.randint(1, 4)
        p = Poly(n, {tuple(rnd.randint(0, 3) for _ in range(n)): Q(rnd.randint(-9, 9), rnd.randint(1, 5)) for _ in range(5)})
        q = Poly(n, {tuple(rnd.randint(0, 3) for _ in range(n)): rnd.randint(-9, 9) for _ in range(5)})
        k = Q(rnd.randint(-5, 5), rnd.randint(1, 3))
        if pi_even(pi_even(p)) != pi_even(p) or pi_even(p + q.scale(k)) != pi_even(p) + pi_even(q).scale(k):
            violations.append(("projection", p, q))

    checks = 0
    for W in range(3, 21):
        for r in (1, 2, 3):
            for w in left_normed_words(W, r):
                q = evaluate(w, "block")
                full = _prefactor(r + 1) * q
                for ell in _compositions(W + 2, r + 1):
                    checks += 1
                    if full.coeff(ell) != pair(block_functional({BlockTuple(ell): 1}), q):
                        violations.append(("block-extraction", str(w), ell))
                f = evaluate(w, "depth")
                for ks in _compositions(W, r):
                    z = ZetaIndex(ks)
                    word, sign = zeta_to_word(z)
                    checks += 1
                    if pair(depth_functional({z: 1}), f) != sign * f.coeff(depth_pattern(word)):
                        violations.append(("depth-extraction", str(w), ks))
    record(10, "property suites", not violations, f"{checks} extraction checks, violations {violations[:3]}")
