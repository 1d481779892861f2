"""Vacillating tableaux, the delete-insert bijection and its relatives.

Submodules:

* ``tableaux``: partitions, tableaux, set partitions
* ``rsk``: insertion, jeu de taquin, Knuth RSK over two-line arrays
* ``vacillating``: vacillating tableaux and their enumeration
* ``di``: the delete-insert map and its inverse
* ``shapes``: sequences with one-row, hook and two-row VT-shape
* ``maxindex``: maximal VT-index, Algorithms A and B, ``psi``
* ``bumping``: bumping sequences, suffixes, reparking
* ``cossz``: the RSK-only bijection with multiset tableaux
* ``verify``: exhaustive sweeps
"""

from .di import di_forward, di_inverse, vt_index, vt_shape
from .rsk import inverse_rsk_word, jdt_delete, reverse_jdt, row_insert, rsk_word
from .tableaux import SetPartition, Tableau

__version__ = "0.1.0"

__all__ = [
    "SetPartition",
    "Tableau",
    "di_forward",
    "di_inverse",
    "inverse_rsk_word",
    "jdt_delete",
    "reverse_jdt",
    "row_insert",
    "rsk_word",
    "vt_index",
    "vt_shape",
]
