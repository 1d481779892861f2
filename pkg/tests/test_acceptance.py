"""Acceptance criteria, one test each, with exact integer comparisons throughout.

Run ``pytest tests/test_acceptance.py -v`` and read the "acceptance"
section of the summary, or ``python tests/test_acceptance.py``.
"""

from itertools import permutations, product
from math import comb

from vtab.bumping import repark
from vtab.cossz import cossz_forward, cossz_inverse, two_line_array
from vtab.di import di_forward, di_inverse
from vtab.maxindex import algorithm_a, algorithm_b, enumerate_rnk, psi, psi_inverse, rk_of_shape
from vtab.rsk import inverse_rsk_word, rsk_word
from vtab.shapes import (
    catalan,
    is_two_row_sequence,
    stirling2,
    two_row_decompose,
    two_row_from_syt,
)
from vtab.tableaux import Tableau, count_syt, partitions, star
from vtab.vacillating import vt_to_syt_star
from vtab.verify import CHECKS, two_row_count_report, two_row_count_table, verify_identity


def _mismatch(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def criterion_1():
    failures = []
    for n in range(1, 7):
        for k in range(0, 5):
            report = verify_identity(n, k)
            if not report.ok or report.total != n**k:
                failures.append(f"identity n={n} k={k}: {report.violations[:1]}")
            for lam, c in report.per_shape.items():
                _mismatch(failures, f"shape {lam} n={n} k={k}", c.observed,
                          count_syt(lam) * c.m_k_lambda)
    return failures


def criterion_2():
    f = []
    image = di_forward((3, 2, 5), 6)
    _mismatch(f, "DI(3,2,5) P", image.p.rows, ((1, 2, 5), (3, 6), (4,)))
    _mismatch(f, "DI(3,2,5) gamma", image.gamma.steps,
              ((6,), (5,), (5, 1), (4, 1), (4, 1, 1), (3, 1, 1), (3, 2, 1)))

    image = di_forward((3, 2, 6, 2), 8)
    _mismatch(f, "DI(3,2,6,2) P", image.p.rows, ((1, 2, 6, 8), (3, 5), (4, 7)))
    _mismatch(f, "DI(3,2,6,2) gamma", image.gamma.steps,
              ((8,), (7,), (7, 1), (6, 1), (6, 1, 1), (5, 1, 1), (5, 2, 1), (4, 2, 1), (4, 2, 2)))
    _mismatch(f, "Q*", vt_to_syt_star(image.gamma).rows, ((1, 3), (2, 4)))
    _mismatch(f, "Q", rsk_word((4, 5, 7, 8, 3, 1, 6, 2))[1].rows, ((1, 2, 3, 4), (5, 7), (6, 8)))
    _mismatch(f, "psi", psi((3, 2, 6, 2), 8), (4, 5, 7, 8, 3, 1, 6, 2))
    _mismatch(f, "algorithm A", algorithm_a((4, 5, 7, 8, 3, 1, 6, 2), 4),
              ((4, 3, 7, 5), (3, 2, 6, 2)))
    b = algorithm_b((3, 2, 6, 2), 8)
    _mismatch(f, "algorithm B", (b.t, b.a, b.w),
              ((4, 3, 7, 5), (3, 1, 6, 2), (4, 5, 7, 8, 3, 1, 6, 2)))

    b = algorithm_b((4, 4), 4)
    _mismatch(f, "B(4,4)", (b.failure, b.t), ("overflow", (5, 6)))
    b = algorithm_b((1, 1), 4)
    _mismatch(f, "B(1,1)", (b.failure, b.t, b.a), ("underflow", (2, 3), (0, 1)))
    b = algorithm_b((1, 2), 4)
    _mismatch(f, "B(1,2)", (b.ok, b.t, b.w), (True, (3, 4), (3, 4, 1, 2)))
    _mismatch(f, "vt index of (1,2)", di_forward((1, 2), 4).vt_index, 1)
    _mismatch(f, "psi^-1(3412)", psi_inverse((3, 4, 1, 2), 2), (2, 2))

    p = Tableau(((1, 2, 4, 7, 8, 9, 11, 15), (3, 5, 6, 10, 12, 13, 14)))
    seq = two_row_from_syt(p)
    _mismatch(f, "b -> i", seq, (2, 4, 4, 9, 11, 11, 11))
    _mismatch(f, "DI P for two-row example", di_forward(seq, 15).p, p)
    d = two_row_decompose(seq, 15)
    _mismatch(f, "v", d.v, (2, 3, 3, 6, 7, 7, 7))
    _mismatch(f, "eps", d.eps, (0, 1, 1, 3, 4, 4, 4))
    _mismatch(f, "b = i + v", d.second_row, p.rows[1])

    right = repark(11, (3, 2, 5, 8, 9), "right")
    _mismatch(f, "repark right", (right.positions, right.success), ((4, 3, 6, 10, 11), True))
    left = repark(11, (3, 2, 5, 8, 9), "left")
    _mismatch(f, "repark left", (left.positions, left.success), ((2, 1, 4, 6, 7), True))

    _mismatch(f, "COSSZ array", two_line_array((3, 2, 6, 2), 6).bottom, (1, 4, 5, 3, 6, 2))
    s, t = cossz_forward((3, 2, 6, 2), 6)
    _mismatch(f, "COSSZ S", s.rows, ((1, 2, 5, 6), (3,), (4,)))
    _mismatch(f, "COSSZ T", t.to_lists(), [[[], [], [], [3]], [[1]], [[2, 4]]])
    s, t = cossz_forward((3, 1, 6, 2), 8)
    _mismatch(f, "COSSZ S'", s.rows, ((1, 2, 6, 8), (3, 5), (4, 7)))
    _mismatch(f, "COSSZ T'", t.to_lists(), [[[], [], [], []], [[1], [3]], [[2], [4]]])
    return f


def criterion_3():
    f = []
    for n in range(1, 7):
        for k in range(0, 5):
            for seq in product(range(1, n + 1), repeat=k):
                image = di_forward(seq, n)
                _mismatch(f, f"DI round trip n={n}", di_inverse(image.p, image.gamma), seq)
                if k < n and image.vt_index == k:
                    _mismatch(f, f"psi round trip n={n}", psi_inverse(psi(seq, n), k), seq)
    for w in permutations(range(1, 7)):
        _mismatch(f, "RSK round trip", inverse_rsk_word(*rsk_word(w)), w)
    for n in range(1, 6):
        for k in range(0, 5):
            for seq in product(range(1, n + 1), repeat=k):
                _mismatch(f, f"COSSZ round trip n={n}", cossz_inverse(*cossz_forward(seq, n)), seq)
    return f


def criterion_4():
    f = []
    plans = {
        "one-row": lambda n: range(0, 5),
        "hook": lambda n: range(1, n),
        "two-row": lambda n: range(1, n // 2 + 1),
        "max-index-test": lambda n: range(1, min(n, 5)),
        "algorithm-a": lambda n: range(1, min(n, 5)),
        "bumping": lambda n: range(1, min(n, 5)),
        "suffix": lambda n: range(1, min(n, 5)),
        "cossz-maxshape": lambda n: range(1, min(n, 5)),
    }
    for name, ks in plans.items():
        for n in range(1, 7):
            for k in ks(n):
                report = CHECKS[name](n, k)
                if not report.ok:
                    f.append(f"{name} n={n} k={k}: {report.violations[0]}")
    return f


def criterion_5():
    f = []
    _mismatch(f, "R_2^4", enumerate_rnk(4, 2),
              [(1, 4, 3, 2), (2, 4, 1, 3), (2, 4, 3, 1), (3, 4, 1, 2), (3, 4, 2, 1)])
    by_shape = {}
    for seq in product(range(1, 5), repeat=2):
        image = di_forward(seq, 4)
        if image.vt_index == 2:
            by_shape.setdefault(image.shape, set()).add(seq)
    _mismatch(f, "VT-index 2 for n=4", by_shape,
              {(2, 2): {(2, 2), (1, 3)}, (2, 1, 1): {(3, 2), (3, 1), (2, 1)}})

    for n in range(1, 7):
        for k in range(0, 5):
            shapes = {}
            for seq in product(range(1, n + 1), repeat=k):
                lam = di_forward(seq, n).shape
                shapes[lam] = shapes.get(lam, 0) + 1
            _mismatch(f, f"one-row n={n} k={k}", shapes.get((n,), 0),
                      sum(stirling2(k, i) for i in range(n + 1)))
            if 1 <= k < n:
                hook = (n - k,) + (1,) * k
                _mismatch(f, f"hook n={n} k={k}", shapes.get(hook, 0), comb(n - 1, k))
            if 1 <= k and 2 * k <= n:
                _mismatch(f, f"two-row n={n} k={k}", shapes.get((n - k, k), 0),
                          count_syt((n - k, k)))
    for m in range(1, 6):
        two_row = sum(1 for s in product(range(1, 2 * m + 1), repeat=m)
                      if is_two_row_sequence(s, 2 * m))
        _mismatch(f, f"Catalan m={m}", (count_syt((m, m)), two_row), (catalan(m), catalan(m)))
    for n in range(2, 7):
        for k in range(1, n):
            for lam in partitions(n):
                if lam[0] == n - k:
                    _mismatch(f, f"|R_k({lam})|", len(rk_of_shape(n, k, lam)),
                              count_syt(lam) * count_syt(star(lam)))
    return f


def criterion_6():
    f = []
    for n in range(1, 10):
        for k in range(0, min(n, 4) + 1):
            for x in permutations(range(1, n + 1), k):
                for direction in ("right", "left"):
                    out = repark(n, x, direction)
                    if out.success != out.predicted:
                        f.append(f"repark n={n} {direction} {x}")
    return f


def criterion_7():
    f = []
    rows = two_row_count_table(10)
    for r in rows:
        _mismatch(f, f"ballot form n={r.n} k={r.k}", r.ballot_fraction, r.syt_count)
    report = two_row_count_report(10)
    if not report.ok or not report.notes:
        f.append("two-row count report has violations or no note")
    return f


TITLES = {
    1: "shape tally over [n]^k equals f^lambda * m_k^lambda for n <= 6, k <= 4",
    2: "worked examples reproduced exactly",
    3: "round trips for DI, psi, RSK on S_6 and COSSZ",
    4: "exhaustive characterization equivalences for n <= 6",
    5: "counting identities",
    6: "reparking simulation agrees with the criterion for n <= 9, k <= 4",
    7: "two-row count: hook-length value authoritative, both fraction forms compared for n <= 10",
}
CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7}


def test_criterion_1_identity(acceptance):
    acceptance(1, TITLES[1], criterion_1())


def test_criterion_2_worked_examples(acceptance):
    acceptance(2, TITLES[2], criterion_2())


def test_criterion_3_round_trips(acceptance):
    acceptance(3, TITLES[3], criterion_3())


def test_criterion_4_characterizations(acceptance):
    acceptance(4, TITLES[4], criterion_4())


def test_criterion_5_counts(acceptance):
    acceptance(5, TITLES[5], criterion_5())


def test_criterion_6_reparking(acceptance):
    acceptance(6, TITLES[6], criterion_6())


def test_criterion_7_two_row_count(acceptance):
    acceptance(7, TITLES[7], criterion_7())


if __name__ == "__main__":
    import sys

    bad = 0
    for number, check in CRITERIA.items():
        failures = check()
        bad += bool(failures)
        status = "PASS" if not failures else "FAIL"
        print(f"[{status}] criterion {number}: {TITLES[number]}")
        for line in failures[:5]:
            print(f"    {line}")
    sys.exit(1 if bad else 0)
