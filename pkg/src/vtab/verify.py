"""Exhaustive checks over ``[n]^k`` and related finite sets.

Every check returns a :class:`SweepReport`; a report with no violations
means the statement held on every instance examined.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import comb
from typing import Any, Callable, Iterable, Iterator, Sequence

from .bumping import bumping_criterion, repark, reverse_complement, suffix_criterion
from .cossz import cossz_forward, cossz_inverse, cossz_maxshape
from .di import DiImage, di_forward, di_inverse
from .maxindex import (
    algorithm_a,
    algorithm_b,
    enumerate_rnk,
    has_max_vt_index,
    psi,
    psi_inverse,
    push_right,
)
from .rsk import row_insert, rsk_word
from .shapes import (
    ballot,
    is_hook_sequence,
    is_one_row,
    is_two_row_sequence,
    one_row_count,
    one_row_to_set_partition,
    set_partition_to_one_row,
    two_row_decompose,
    two_row_from_syt,
)
from .tableaux import Partition, Tableau, count_syt, enumerate_syt, partitions, star
from .vacillating import count_vt

SCHEMA_VERSION = 1
DEFAULT_BUDGET = 10**7


class BudgetExceededError(ValueError):
    pass


def budget() -> int:
    return int(os.environ.get("TABLEAUX_BUDGET", DEFAULT_BUDGET))


@dataclass
class ShapeCount:
    observed: int
    f_lambda: int
    m_k_lambda: int

    @property
    def expected(self) -> int:
        return self.f_lambda * self.m_k_lambda


@dataclass
class SweepReport:
    name: str
    n: int
    k: int
    total: int = 0
    assertions: int = 0
    per_shape: dict[Partition, ShapeCount] = field(default_factory=dict)
    violations: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, check: str, instance: Any, **detail: Any) -> None:
        self.violations.append({"check": check, "input": instance, **detail})

    def expect(self, cond: bool, check: str, instance: Any, **detail: Any) -> None:
        self.assertions += 1
        if not cond:
            self.fail(check, instance, **detail)

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "total": self.total,
            "assertions": self.assertions,
            "per_shape": [
                {
                    "shape": list(shape),
                    "observed_count": c.observed,
                    "f_lambda": c.f_lambda,
                    "m_k_lambda": c.m_k_lambda,
                }
                for shape, c in self.per_shape.items()
            ],
            "violations": [_jsonable(v) for v in self.violations],
            "notes": self.notes,
            "ok": self.ok,
        }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    return obj


def sequences(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """``[n]^k`` in lexicographic (odometer) order."""
    return product(range(1, n + 1), repeat=k)


def _check_budget(n: int, k: int) -> None:
    if n**k > budget():
        raise BudgetExceededError(f"{n}^{k} sequences exceed the sweep budget {budget()}")


def di_images(n: int, k: int, workers: int = 1) -> list[tuple[tuple[int, ...], DiImage]]:
    """``di_forward`` over all of ``[n]^k``, chunked by first entry; output order is fixed."""
    _check_budget(n, k)
    if k == 0:
        return [((), di_forward((), n))]

    def chunk(first: int) -> list[tuple[tuple[int, ...], DiImage]]:
        return [((first,) + rest, di_forward((first,) + rest, n)) for rest in sequences(n, k - 1)]

    if workers <= 1:
        chunks = [chunk(first) for first in range(1, n + 1)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(chunk, range(1, n + 1)))
    return [item for c in chunks for item in c]


def verify_identity(n: int, k: int, workers: int = 1) -> SweepReport:
    """Tally VT-shapes over ``[n]^k`` against ``f^lambda * m_k^lambda``; check injectivity."""
    report = SweepReport("identity", n, k)
    images = di_images(n, k, workers)
    report.total = len(images)
    observed: dict[Partition, int] = {}
    seen: dict[tuple, tuple[int, ...]] = {}
    for seq, image in images:
        observed[image.shape] = observed.get(image.shape, 0) + 1
        key = (image.p, image.gamma)
        if key in seen:
            report.fail("injective", seq, collides_with=seen[key])
        seen[key] = seq
    for lam in partitions(n):
        count = ShapeCount(observed.get(lam, 0), count_syt(lam), count_vt(n, k, lam))
        if count.observed or count.expected:
            report.per_shape[lam] = count
        report.expect(count.observed == count.expected, "per-shape", list(lam),
                      observed=count.observed, expected=count.expected)
    report.expect(report.total == n**k, "total", [n, k], total=report.total)
    report.expect(sum(c.expected for c in report.per_shape.values()) == n**k,
                  "sum f*m", [n, k])
    return report


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise ValueError(f"check needs {what}")


def check_round_trip(n: int, k: int) -> SweepReport:
    report = SweepReport("round-trip", n, k)
    for seq, image in di_images(n, k):
        report.total += 1
        report.expect(di_inverse(image.p, image.gamma) == seq, "di_inverse", seq)
    return report


def check_one_row(n: int, k: int) -> SweepReport:
    report = SweepReport("one-row", n, k)
    members = 0
    for seq, image in di_images(n, k):
        report.total += 1
        predicted = is_one_row(seq, n)
        report.expect(predicted == (image.shape == (n,)), "one-row", seq, shape=image.shape)
        if predicted:
            members += 1
            back = set_partition_to_one_row(one_row_to_set_partition(seq, n), n)
            report.expect(back == seq, "set-partition round trip", seq)
    report.expect(members == one_row_count(n, k), "count", [n, k], observed=members)
    return report


def check_hook(n: int, k: int) -> SweepReport:
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("hook", n, k)
    hook = (n - k,) + (1,) * k
    members = 0
    for seq, image in di_images(n, k):
        report.total += 1
        predicted = is_hook_sequence(seq, n)
        members += predicted
        report.expect(predicted == (image.shape == hook), "hook", seq, shape=image.shape)
    report.expect(members == comb(n - 1, k) == count_syt(hook), "count", [n, k], observed=members)
    report.notes.append(f"{members} hook sequences")
    return report


def check_two_row(n: int, k: int) -> SweepReport:
    _need(n >= 2 * k, "n >= 2k")
    report = SweepReport("two-row", n, k)
    shape = (n - k, k) if k else (n,)
    actual = {seq: image for seq, image in di_images(n, k) if image.shape == shape}
    report.total = n**k
    image_set = set()
    for p in enumerate_syt(shape) if k else []:
        seq = two_row_from_syt(p)
        image_set.add(seq)
        report.expect(seq in actual and actual[seq].p == p, "P component", seq)
        report.expect(two_row_decompose(seq, n).second_row == p.rows[1], "b = i + v", seq)
    if k:
        report.expect(image_set == set(actual), "image", [n, k])
    for seq in sequences(n, k):
        report.expect(is_two_row_sequence(seq, n) == (seq in actual), "decompose test", seq)
    report.expect(len(actual) == count_syt(shape) == ballot(n, k), "count", [n, k],
                  observed=len(actual))
    return report


def check_algorithm_a(n: int, k: int) -> SweepReport:
    """Algorithm A and psi agree, hit every sequence of VT-index k, and invert Algorithm B."""
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("algorithm-a", n, k)
    by_index = {seq: image for seq, image in di_images(n, k)}
    target = {seq for seq, image in by_index.items() if image.vt_index == k}
    produced = set()
    rk_sizes: dict[Partition, int] = {}
    for w in enumerate_rnk(n, k):
        report.total += 1
        lam = rsk_word(w)[0].shape
        rk_sizes[lam] = rk_sizes.get(lam, 0) + 1
        t, seq = algorithm_a(w, k)
        produced.add(seq)
        image = by_index[seq]
        report.expect(image.shape == lam, "shape", list(w), got=image.shape)
        report.expect(image.bumped == t, "bumping sequence", list(w), t=t, di=image.bumped)
        report.expect(psi(seq, n) == w, "psi", list(w))
        report.expect(psi_inverse(w, k) == seq, "psi inverse", list(w))
        result = algorithm_b(seq, n)
        report.expect(result.ok and result.w == w and result.t == t, "algorithm B", list(w))
    report.expect(produced == target, "image", [n, k])
    for lam in partitions(n):
        if lam[0] == n - k:
            expected = count_syt(lam) * count_syt(star(lam))
            observed = rk_sizes.get(lam, 0)
            report.per_shape[lam] = ShapeCount(observed, count_syt(lam), count_syt(star(lam)))
            report.expect(observed == expected, "|R_k(lambda)|", list(lam), observed=observed)
            fiber = sum(1 for s in target if by_index[s].shape == lam)
            report.expect(fiber == expected, "|I_k(lambda)|", list(lam), observed=fiber)
    return report


def check_max_index_test(n: int, k: int) -> SweepReport:
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("max-index-test", n, k)
    for seq, image in di_images(n, k):
        report.total += 1
        report.expect(has_max_vt_index(seq, n) == (image.vt_index == k), "test", seq,
                      vt_index=image.vt_index)
    return report


def _distinct(n: int, k: int) -> Iterable[tuple[int, ...]]:
    return permutations(range(1, n + 1), k)


def rsk_bumps(w: Sequence[int], k: int) -> tuple[int | None, ...]:
    """Entries pushed out of the first row while RSK inserts the last ``k`` letters of ``w``."""
    t = Tableau(())
    out = []
    for pos, x in enumerate(w):
        t, _, bumped = row_insert(t, x)
        if pos >= len(w) - k:
            out.append(bumped)
    return tuple(out)


def check_bumping(n: int, k: int) -> SweepReport:
    """The criterion against the bumps RSK actually makes, over all distinct ``t``."""
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("bumping", n, k)
    bumps = set()
    for w in enumerate_rnk(n, k):
        t = rsk_bumps(w, k)
        report.expect(t == push_right(w[n - k:]), "algorithm A step", list(w), rsk=t)
        bumps.add(t)
    for t in _distinct(n, k):
        report.total += 1
        report.expect(bumping_criterion(t, n) == (t in bumps), "criterion", t)
        report.expect(bumping_criterion(t, n) == suffix_criterion(reverse_complement(t, n), n),
                      "duality", t)
    return report


def check_suffix(n: int, k: int) -> SweepReport:
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("suffix", n, k)
    suffixes = {w[n - k:] for w in enumerate_rnk(n, k)}
    for a in _distinct(n, k):
        report.total += 1
        report.expect(suffix_criterion(a, n) == (a in suffixes), "criterion", a)
    return report


def check_cossz_maxshape(n: int, k: int) -> SweepReport:
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("cossz-maxshape", n, k)
    for seq in sequences(n, k):
        report.total += 1
        distinct = len(set(seq)) == len(seq)
        expected = distinct and suffix_criterion(seq, n)
        report.expect(cossz_maxshape(seq, n) == expected, "maxshape", seq)
    return report


def check_cossz_round_trip(n: int, k: int) -> SweepReport:
    _check_budget(n, k)
    report = SweepReport("cossz-round-trip", n, k)
    seen = set()
    observed: dict[Partition, int] = {}
    for seq in sequences(n, k):
        report.total += 1
        s, t = cossz_forward(seq, n)
        seen.add((s, t))
        observed[s.shape] = observed.get(s.shape, 0) + 1
        report.expect(cossz_inverse(s, t) == seq, "inverse", seq)
    report.expect(len(seen) == n**k, "injective", [n, k])
    for lam in partitions(n):
        count = ShapeCount(observed.get(lam, 0), count_syt(lam), count_vt(n, k, lam))
        if count.observed or count.expected:
            report.per_shape[lam] = count
        report.expect(count.observed == count.expected, "per-shape", list(lam))
    return report


def check_repark(n: int, k: int) -> SweepReport:
    _need(n >= k, "n >= k")
    report = SweepReport("repark", n, k)
    for x in _distinct(n, k):
        for direction in ("right", "left"):
            report.total += 1
            out = repark(n, x, direction)
            report.expect(out.success == out.predicted, direction, x, moved=out.positions)
    return report


def check_psi(n: int, k: int) -> SweepReport:
    """psi by definition, psi by Algorithm B, and psi inverse, on every sequence of VT-index k."""
    _need(n >= k + 1, "n >= k + 1")
    report = SweepReport("psi", n, k)
    for seq, image in di_images(n, k):
        if image.vt_index != k:
            continue
        report.total += 1
        w = psi(seq, n)
        report.expect(algorithm_b(seq, n).w == w, "algorithm B", seq)
        report.expect(psi_inverse(w, k) == seq, "inverse", seq)
    return report


CHECKS: dict[str, Callable[[int, int], SweepReport]] = {
    "identity": verify_identity,
    "round-trip": check_round_trip,
    "one-row": check_one_row,
    "hook": check_hook,
    "two-row": check_two_row,
    "algorithm-a": check_algorithm_a,
    "psi": check_psi,
    "max-index-test": check_max_index_test,
    "bumping": check_bumping,
    "suffix": check_suffix,
    "repark": check_repark,
    "cossz-maxshape": check_cossz_maxshape,
    "cossz-round-trip": check_cossz_round_trip,
}


def verify_theorem(name: str, n: int, k: int) -> SweepReport:
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    return CHECKS[name](n, k)


@dataclass(frozen=True)
class TwoRowCountRow:
    n: int
    k: int
    syt_count: int
    printed_fraction: Fraction
    ballot_fraction: Fraction


def two_row_count_table(n_max: int = 10) -> list[TwoRowCountRow]:
    """``f^{(n-k,k)}`` next to ``(n-2k-1)/(n-k+1) C(n,k)`` and ``(n-2k+1)/(n-k+1) C(n,k)``.

    The hook-length count is the authority; the first fraction is the form
    that is off by two in the numerator and goes negative at ``n = 2k``.
    """
    rows = []
    for n in range(1, n_max + 1):
        for k in range(1, n // 2 + 1):
            rows.append(TwoRowCountRow(
                n,
                k,
                count_syt((n - k, k)),
                Fraction(n - 2 * k - 1, n - k + 1) * comb(n, k),
                Fraction(n - 2 * k + 1, n - k + 1) * comb(n, k),
            ))
    return rows


def two_row_count_report(n_max: int = 10) -> SweepReport:
    report = SweepReport("two-row-count", n_max, 0)
    mismatched = 0
    for row in two_row_count_table(n_max):
        report.total += 1
        report.expect(row.syt_count == row.ballot_fraction, "ballot form", [row.n, row.k],
                      syt=row.syt_count, ballot=str(row.ballot_fraction))
        if row.printed_fraction != row.syt_count:
            mismatched += 1
    report.notes.append(
        f"(n-2k+1)/(n-k+1)*C(n,k) equals f^(n-k,k) on all {report.total} cases with n <= {n_max}; "
        f"(n-2k-1)/(n-k+1)*C(n,k) differs on {mismatched} of them"
    )
    return report
