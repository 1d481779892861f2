"""n-vacillating tableaux and their simplified (first-row-stripped) form.

A tableau of length ``2k`` is stored as a flat tuple of ``2k + 1``
partitions: index ``2j`` is the integer step ``j`` and ``2j + 1`` the
half step ``j + 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .tableaux import (
    BoundExceededError,
    Partition,
    Tableau,
    addable_boxes,
    add_box,
    contains,
    partition,
    remove_box,
    removable_boxes,
    size,
    skew_box,
    star,
    standard_tableau,
)

DEFAULT_VT_BOUND = (12, 8)


class InfeasibleError(ValueError):
    """No n-vacillating tableau has the requested simplified form."""


def _check_steps(steps: tuple[Partition, ...], allow_stay: bool) -> None:
    allowed = {0, 1} if allow_stay else {1}
    for idx in range(0, len(steps) - 1, 2):
        whole, half, nxt = steps[idx], steps[idx + 1], steps[idx + 2]
        if not contains(whole, half) or size(whole) - size(half) not in allowed:
            raise ValueError(f"step {idx // 2}: {half} is not {whole} minus a box")
        if not contains(nxt, half) or size(nxt) - size(half) not in allowed:
            raise ValueError(f"step {idx // 2}: {nxt} is not {half} plus a box")


@dataclass(frozen=True)
class VacillatingTableau:
    """An n-vacillating tableau: start at ``(n)``, alternately remove then add one box."""

    n: int
    k: int
    steps: tuple[Partition, ...]

    def __post_init__(self) -> None:
        steps = tuple(partition(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) != 2 * self.k + 1:
            raise ValueError(f"expected {2 * self.k + 1} steps, got {len(steps)}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if steps[0] != (self.n,):
            raise ValueError(f"first step must be ({self.n},), got {steps[0]}")
        _check_steps(steps, allow_stay=False)

    @property
    def shape(self) -> Partition:
        return self.steps[-1]

    def step(self, j: int) -> Partition:
        """``lambda^(j)`` for integer ``j``."""
        return self.steps[2 * j]

    def half_step(self, j: int) -> Partition:
        """``lambda^(j + 1/2)``."""
        return self.steps[2 * j + 1]


@dataclass(frozen=True)
class SimplifiedVacillatingTableau:
    """Start at the empty partition; each half step removes or adds at most one box."""

    k: int
    steps: tuple[Partition, ...]

    def __post_init__(self) -> None:
        steps = tuple(partition(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) != 2 * self.k + 1:
            raise ValueError(f"expected {2 * self.k + 1} steps, got {len(steps)}")
        if steps[0] != ():
            raise ValueError("first step must be the empty partition")
        _check_steps(steps, allow_stay=True)

    @property
    def shape(self) -> Partition:
        return self.steps[-1]


def simplify(gamma: VacillatingTableau) -> SimplifiedVacillatingTableau:
    return SimplifiedVacillatingTableau(gamma.k, tuple(star(s) for s in gamma.steps))


def unsimplify(gstar: SimplifiedVacillatingTableau, n: int) -> VacillatingTableau:
    """Put back the first rows; their lengths are forced by the sizes ``n`` and ``n - 1``."""
    steps = []
    for idx, mu in enumerate(gstar.steps):
        first = (n if idx % 2 == 0 else n - 1) - size(mu)
        if first < (mu[0] if mu else 0):
            raise InfeasibleError(f"no first row of length {first} fits above {mu}")
        steps.append(((first,) if first else ()) + mu)
    try:
        return VacillatingTableau(n, gstar.k, tuple(steps))
    except ValueError as exc:
        raise InfeasibleError(str(exc)) from exc


def iter_vt(n: int, k: int, shape: Partition | None = None) -> Iterator[VacillatingTableau]:
    """Depth-first walk over all n-vacillating tableaux of length ``2k``.

    With ``shape`` given, branches that can no longer reach it are pruned.
    """
    target = partition(shape) if shape is not None else None
    if target is not None and size(target) != n:
        return
    path: list[Partition] = [(n,)]

    def reachable(cur: Partition, rounds_left: int) -> bool:
        if target is None:
            return True
        extra = sum(max(0, a - b) for a, b in _zip_pad(cur, target))
        missing = sum(max(0, b - a) for a, b in _zip_pad(cur, target))
        return extra <= rounds_left and missing <= rounds_left

    def walk(cur: Partition, rounds_left: int) -> Iterator[VacillatingTableau]:
        if rounds_left == 0:
            if target is None or cur == target:
                yield VacillatingTableau(n, k, tuple(path))
            return
        for r, _ in removable_boxes(cur):
            half = remove_box(cur, r)
            path.append(half)
            for r2, _ in addable_boxes(half):
                nxt = add_box(half, r2)
                if reachable(nxt, rounds_left - 1):
                    path.append(nxt)
                    yield from walk(nxt, rounds_left - 1)
                    path.pop()
            path.pop()

    if reachable((n,), k):
        yield from walk((n,), k)


def _zip_pad(a: Partition, b: Partition) -> Iterator[tuple[int, int]]:
    for i in range(max(len(a), len(b))):
        yield (a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)


def enumerate_vt(
    n: int,
    k: int,
    shape: Partition,
    bound: tuple[int, int] = DEFAULT_VT_BOUND,
) -> list[VacillatingTableau]:
    """All n-vacillating tableaux of ``shape`` and length ``2k``, in a fixed order."""
    if n > bound[0] or k > bound[1]:
        raise BoundExceededError(f"(n, k) = ({n}, {k}) exceeds enumeration bound {bound}")
    return list(iter_vt(n, k, shape))


def vt_to_syt_star(gamma: VacillatingTableau) -> Tableau:
    """Record, for a shape with first row ``n - k``, the box each round adds below row one."""
    if not gamma.shape or gamma.shape[0] != gamma.n - gamma.k:
        raise ValueError(f"first row of {gamma.shape} is not n - k = {gamma.n - gamma.k}")
    lam_star = star(gamma.shape)
    rows: list[list[int]] = [[] for _ in lam_star]
    for j in range(gamma.k):
        before = star(gamma.step(j))
        after = star(gamma.step(j + 1))
        if star(gamma.half_step(j)) != before:
            raise AssertionError("a box below the first row was removed")
        r, _ = skew_box(after, before)
        rows[r].append(j + 1)
    return standard_tableau(rows)


def syt_star_to_vt(q_star: Tableau, n: int) -> VacillatingTableau:
    """Inverse of :func:`vt_to_syt_star`: entry ``j`` says where round ``j`` adds a box."""
    if not q_star.is_standard:
        raise ValueError("expected a standard Young tableau")
    k = q_star.size
    steps: list[Partition] = [()]
    for j in range(1, k + 1):
        prefix = tuple(sum(1 for x in row if x <= j) for row in q_star.rows)
        prefix = tuple(p for p in prefix if p)
        steps.extend([steps[-1], prefix])
    return unsimplify(SimplifiedVacillatingTableau(k, tuple(steps)), n)


def count_vt(n: int, k: int, shape: Sequence[int]) -> int:
    return sum(1 for _ in iter_vt(n, k, tuple(shape)))
