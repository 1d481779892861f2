"""JSON encodings.

* partition: ``[3, 2, 1]``
* tableau: ``{"rows": [[1, 2, 5], [3, 6], [4]]}``
* set partition: ``[[1], [2, 4], [3]]``
* vacillating tableau: ``{"n": 6, "k": 3, "steps": [[6], [5], ...]}``
* multiset tableau: ``{"rows": [[[], [], [3]], [[1]], [[2, 4]]]}``
"""

from __future__ import annotations

from typing import Any

from .cossz import MultisetTableau
from .tableaux import SetPartition, Tableau
from .vacillating import VacillatingTableau


def tableau_to_json(t: Tableau) -> dict[str, Any]:
    return {"rows": t.to_lists()}


def tableau_from_json(obj: Any) -> Tableau:
    rows = obj["rows"] if isinstance(obj, dict) else obj
    return Tableau(tuple(tuple(r) for r in rows))


def vt_to_json(gamma: VacillatingTableau) -> dict[str, Any]:
    return {"n": gamma.n, "k": gamma.k, "steps": [list(s) for s in gamma.steps]}


def vt_from_json(obj: dict[str, Any]) -> VacillatingTableau:
    return VacillatingTableau(int(obj["n"]), int(obj["k"]), tuple(tuple(s) for s in obj["steps"]))


def set_partition_to_json(p: SetPartition) -> list[list[int]]:
    return [list(b) for b in p.blocks]


def set_partition_from_json(obj: list[list[int]]) -> SetPartition:
    return SetPartition(tuple(tuple(b) for b in obj))


def multiset_to_json(t: MultisetTableau) -> dict[str, Any]:
    return {"rows": t.to_lists()}


def multiset_from_json(obj: Any) -> MultisetTableau:
    rows = obj["rows"] if isinstance(obj, dict) else obj
    return MultisetTableau(tuple(tuple(frozenset(c) for c in row) for row in rows))
