"""Central series, nilpotency, Engel sets and subnormalizers.

Commutators are ``[a, b] = a^-1 b^-1 a b`` and iterated commutators are
left-normed: ``[g, x, x] = [[g, x], x]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import ElementSet, FiniteGroup, p_part, prime_factors


@dataclass(frozen=True)
class SeriesRecord:
    terms: list[ElementSet]
    kind: str  # "lower-central" | "upper-central" | "derived"
    stabilized_at: int

    @property
    def last(self) -> ElementSet:
        return self.terms[-1]

    def sizes(self) -> list[int]:
        return [len(t) for t in self.terms]


def _as_set(H) -> ElementSet:
    return H.whole() if isinstance(H, FiniteGroup) else H


def _commutator_series(H: ElementSet, derived: bool) -> SeriesRecord:
    G = H.group
    G.require_subgroup(H)
    terms = [H]
    h_idx = H.indices
    while True:
        cur = terms[-1].indices
        right = cur if derived else h_idx
        gens = np.unique(G.comm[cur[:, None], right[None, :]])
        nxt = ElementSet(G, G.closure_mask(gens))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesRecord(terms, "derived" if derived else "lower-central", len(terms) - 1)


def lower_central_series(H) -> SeriesRecord:
    """gamma_1 = H, gamma_{i+1} = <[h, g] : h in gamma_i, g in H>, until it repeats."""
    return _commutator_series(_as_set(H), derived=False)


def derived_series(H) -> SeriesRecord:
    return _commutator_series(_as_set(H), derived=True)


def nilpotency_class(H) -> int | None:
    """Class of ``H`` from its lower central series, or None if not nilpotent."""
    rec = lower_central_series(H)
    if len(rec.last) != 1:
        return None
    return rec.stabilized_at


def is_nilpotent_by_series(H) -> bool:
    return nilpotency_class(H) is not None


def _p_element_masks(G: FiniteGroup) -> dict[int, np.ndarray]:
    masks = G.cache.get("p_elements")
    if masks is None:
        masks = {p: G.p_elements(p) for p in G.primes}
        G.cache["p_elements"] = masks
    return masks


def is_nilpotent(H) -> bool:
    """Nilpotency test by counting p-elements.

    A finite group is nilpotent iff each Sylow subgroup is normal, i.e. iff for
    every prime p the number of p-elements equals the p-part of the order.
    Agrees with :func:`is_nilpotent_by_series`, but avoids building the series.
    """
    H = _as_set(H)
    G = H.group
    n = len(H)
    masks = _p_element_masks(G)
    for p in prime_factors(n):
        if int((H.mask & masks[p]).sum()) != p_part(n, p):
            return False
    return True


def upper_central_series(G: FiniteGroup) -> SeriesRecord:
    """Z_0 = 1, Z_{i+1} = {x : [x, g] in Z_i for all g}."""
    terms = [G.trivial()]
    while True:
        z = terms[-1].mask
        nxt = ElementSet(G, z[G.comm].all(axis=1))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesRecord(terms, "upper-central", len(terms) - 1)


def hypercenter(G: FiniteGroup) -> ElementSet:
    hit = G.cache.get("hypercenter")
    if hit is None:
        hit = upper_central_series(G).last
        G.cache["hypercenter"] = hit
    return hit


def is_pair_nilpotent(G: FiniteGroup, x: int, y: int) -> bool:
    """Whether <x, y> is nilpotent; memoized on the pair of cyclic subgroups."""
    if G.mul[x, y] == G.mul[y, x]:
        return True
    a, b = int(G.cyclic_ids[x]), int(G.cyclic_ids[y])
    key = (a, b) if a <= b else (b, a)
    hit = G._pair_nilpotent.get(key)
    if hit is None:
        hit = is_nilpotent(G.pair_closure(x, y))
        hit = G._pair_nilpotent.setdefault(key, hit)
    return hit


def _engel_power_table(G: FiniteGroup) -> np.ndarray:
    """M[c, g] = the 2^k-fold iterate of c -> [c, g], with 2^k >= |G|.

    The identity is a fixed point of every such map, so c reaches the
    identity under iteration iff M[c, g] is the identity.
    """
    M = G.cache.get("engel_power")
    if M is None:
        M = G.comm.astype(np.int64)
        steps = 1
        while steps < G.order:
            M = np.take_along_axis(M, M, axis=0)
            steps *= 2
        M.flags.writeable = False
        G.cache["engel_power"] = M
    return M


def engel_table(G: FiniteGroup) -> np.ndarray:
    """E[x, g] is True iff g lies in E_G(x) = {g : [g, x, ..., x] = 1}."""
    E = G.cache.get("engel_table")
    if E is None:
        E = (_engel_power_table(G) == G.identity).T.copy()
        E.flags.writeable = False
        G.cache["engel_table"] = E
    return E


def engel_set(G: FiniteGroup, x: int) -> ElementSet:
    return ElementSet(G, engel_table(G)[x])


def engel_set_by_iteration(G: FiniteGroup, x: int) -> ElementSet:
    """Direct iteration with cycle detection; slower reference for :func:`engel_set`."""
    mask = np.zeros(G.order, dtype=bool)
    for g in range(G.order):
        seen = set()
        c = g
        while c != G.identity and c not in seen:
            seen.add(c)
            c = int(G.comm[c, x])
        mask[g] = c == G.identity
    return ElementSet(G, mask)


def right_engel_set(G: FiniteGroup) -> ElementSet:
    """R(G) = {x : for every g, [x, g, ..., g] = 1 eventually}."""
    return ElementSet(G, (_engel_power_table(G) == G.identity).all(axis=1))


def is_subnormal_cyclic(G: FiniteGroup, x: int, K: ElementSet) -> bool:
    """Whether <x> is subnormal in the subgroup K (which must contain x).

    Iterates K_{i+1} = normal closure of x in K_i; <x> is subnormal iff the
    chain reaches <x>.  The chain strictly descends until it stops, so it
    ends within |K| steps.
    """
    X = G.cyclic(x)
    cur = K
    while True:
        if cur == X:
            return True
        nxt = G.normal_closure(x, within=cur)
        if nxt == cur:
            return False
        cur = nxt


def in_subnormalizer(G: FiniteGroup, x: int, g: int) -> bool:
    if G.mul[x, g] == G.mul[g, x]:
        return True
    return is_subnormal_cyclic(G, x, G.pair_closure(x, g))


def subnormalizer(G: FiniteGroup, x: int) -> ElementSet:
    """S_G(x) = {g : <x> is subnormal in <x, g>}."""
    from .nilpotentizer import subnormalizer_table
    return subnormalizer_table(G)[x]


def subnormalizer_direct(G: FiniteGroup, x: int) -> ElementSet:
    """S_G(x) by testing every g separately."""
    return ElementSet(G, np.array([in_subnormalizer(G, x, g) for g in range(G.order)]))
