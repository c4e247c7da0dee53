"""Nilpotentizers nil_G(x) = {g : <x, g> nilpotent} and nil(G).

Whole tables are filled one conjugacy class of cyclic subgroups at a time:
a row is computed for a representative x and then carried to every x^h
(and every generator of <x^h>) by conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EmptySet
from .groups import ElementSet, FiniteGroup
from .series import in_subnormalizer, is_nilpotent_by_series, is_pair_nilpotent


def _by_cyclic_subgroup(G: FiniteGroup, x: int, test: Callable[[FiniteGroup, int, int], bool]) -> np.ndarray:
    # membership of g depends only on <g>, so test one generator per cyclic subgroup
    cid = G.cyclic_ids
    keys = np.unique(cid)
    verdict = np.zeros(G.order, dtype=bool)
    for g in keys:
        verdict[g] = test(G, x, int(g))
    return verdict[cid]


def _conjugation_table(G: FiniteGroup, row_of: Callable[[int], np.ndarray]) -> np.ndarray:
    n = G.order
    rows = np.zeros((n, n), dtype=bool)
    done = np.zeros(n, dtype=bool)
    cid = G.cyclic_ids
    same_cyclic = {int(c): np.flatnonzero(cid == c) for c in np.unique(cid)}
    for x in range(n):
        if done[x]:
            continue
        idx = np.flatnonzero(row_of(x))
        for h in range(n):
            y = int(G.conj[x, h])
            if done[y]:
                continue
            gens = same_cyclic[int(cid[y])]
            rows[gens[:, None], G.conj[idx, h][None, :]] = True
            done[gens] = True
    rows.flags.writeable = False
    return rows


def _subgroup_flags(G: FiniteGroup, rows: np.ndarray) -> np.ndarray:
    # subgroup-ness is conjugation invariant: test one row per class
    flags = np.zeros(G.order, dtype=bool)
    for cls in G.conjugacy_classes:
        flags[cls] = G.is_subgroup(ElementSet(G, rows[cls[0]]))
    return flags


@dataclass(frozen=True)
class NilTable:
    group: FiniteGroup
    rows: np.ndarray            # rows[x, g]: g in nil_G(x)
    nil_of_group: ElementSet
    is_subgroup_flags: np.ndarray

    def __getitem__(self, x: int) -> ElementSet:
        return ElementSet(self.group, self.rows[x])

    def sizes(self) -> np.ndarray:
        return self.rows.sum(axis=1)


def nilpotentizer(G: FiniteGroup, x: int) -> ElementSet:
    return ElementSet(G, _by_cyclic_subgroup(G, x, is_pair_nilpotent))


def nilpotentizer_direct(G: FiniteGroup, x: int) -> ElementSet:
    """Element-wise reference: build every <x, g> and run its lower central series."""
    mask = np.array([is_nilpotent_by_series(G.closure([x, g])) for g in range(G.order)])
    return ElementSet(G, mask)


def nil_table(G: FiniteGroup, verify: bool = False) -> NilTable:
    """Nilpotentizers of all elements.

    With ``verify`` every row is recomputed element-wise and compared.
    """
    table = G.cache.get("nil_table")
    if table is None:
        rows = _conjugation_table(G, lambda x: nilpotentizer(G, x).mask)
        table = NilTable(G, rows, ElementSet(G, rows.all(axis=0)), _subgroup_flags(G, rows))
        G.cache["nil_table"] = table
    if verify:
        for x in range(G.order):
            if nilpotentizer_direct(G, x) != table[x]:
                raise AssertionError(f"nil_table row {G.labels[x]} disagrees with brute force")
    return table


def nil_of_group(G: FiniteGroup) -> ElementSet:
    return nil_table(G).nil_of_group


def nilpotentizer_of_set(G: FiniteGroup, S) -> ElementSet:
    """nil_G(S) = intersection of nil_G(x) over x in S."""
    idx = S.indices if isinstance(S, ElementSet) else np.array(list(S), dtype=np.int64)
    if idx.size == 0:
        raise EmptySet("nilpotentizer of an empty set is undefined")
    return ElementSet(G, nil_table(G).rows[idx].all(axis=0))


def subnormalizer_table(G: FiniteGroup) -> NilTable:
    """S_G(x) for all x, packaged like a NilTable (nil_of_group holds their intersection)."""
    table = G.cache.get("subnormalizer_table")
    if table is None:
        rows = _conjugation_table(G, lambda x: _by_cyclic_subgroup(G, x, in_subnormalizer))
        table = NilTable(G, rows, ElementSet(G, rows.all(axis=0)), _subgroup_flags(G, rows))
        G.cache["subnormalizer_table"] = table
    return table


def engel_subgroup_flags(G: FiniteGroup) -> np.ndarray:
    from .series import engel_table
    flags = G.cache.get("engel_flags")
    if flags is None:
        flags = _subgroup_flags(G, engel_table(G))
        G.cache["engel_flags"] = flags
    return flags
