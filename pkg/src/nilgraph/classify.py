"""Group-class predicates: n-groups, sn-groups, E-groups and their p-local
versions, AC-groups, Sylow abelian-ness, normal abelian subgroups, quotients."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotNormal, PrimeNotDividing
from .groups import ElementSet, FiniteGroup, p_part
from .nilpotentizer import engel_subgroup_flags, nil_table, subnormalizer_table
from .series import derived_series, hypercenter, is_nilpotent


def _check_prime(G: FiniteGroup, p: int) -> None:
    if p not in G.primes:
        raise PrimeNotDividing(f"{p} does not divide |{G.name}| = {G.order}")


def _all_flags(flags: np.ndarray, G: FiniteGroup, p: int | None) -> bool:
    if p is None:
        return bool(flags.all())
    _check_prime(G, p)
    return bool(flags[G.p_elements(p)].all())


def is_n_group(G: FiniteGroup) -> bool:
    return _all_flags(nil_table(G).is_subgroup_flags, G, None)


def is_np_group(G: FiniteGroup, p: int) -> bool:
    return _all_flags(nil_table(G).is_subgroup_flags, G, p)


def is_sn_group(G: FiniteGroup) -> bool:
    return _all_flags(subnormalizer_table(G).is_subgroup_flags, G, None)


def is_snp_group(G: FiniteGroup, p: int) -> bool:
    return _all_flags(subnormalizer_table(G).is_subgroup_flags, G, p)


def is_e_group(G: FiniteGroup) -> bool:
    return _all_flags(engel_subgroup_flags(G), G, None)


def is_ep_group(G: FiniteGroup, p: int) -> bool:
    return _all_flags(engel_subgroup_flags(G), G, p)


def is_centerless(G: FiniteGroup) -> bool:
    return len(G.center()) == 1


def is_ac_group(G: FiniteGroup) -> bool:
    """Centralizer of every non-central element is abelian."""
    Z = G.center()
    for cls in G.conjugacy_classes:
        x = int(cls[0])
        if x in Z:
            continue
        if not G.is_abelian(G.centralizer(x)):
            return False
    return True


def sylow_subgroup(G: FiniteGroup, p: int) -> ElementSet:
    """One Sylow p-subgroup, grown by adjoining normalizing p-elements."""
    _check_prime(G, p)
    target = p_part(G.order, p)
    pmask = G.p_elements(p)
    P = G.trivial()
    while len(P) < target:
        for g in np.flatnonzero(pmask & ~P.mask):
            g = int(g)
            # g normalizes P
            if P.mask[G.conj[P.indices, g]].all():
                P = G.closure(np.append(P.indices, g))
                break
        else:  # pragma: no cover - impossible by Sylow's theorem
            raise AssertionError("no normalizing p-element found")
    return P


def sylow_abelian(G: FiniteGroup, p: int) -> bool:
    return G.is_abelian(sylow_subgroup(G, p))


def minimal_normal_subgroups(G: FiniteGroup) -> list[ElementSet]:
    """Inclusion-minimal normal closures of single nontrivial elements."""
    closures = set()
    for cls in G.conjugacy_classes:
        x = int(cls[0])
        if x != G.identity:
            closures.add(G.normal_closure(x))
    closures = sorted(closures, key=lambda N: (len(N), N.indices.tolist()))
    return [N for N in closures if not any(M <= N and M != N for M in closures)]


def has_nontrivial_normal_abelian_subgroup(G: FiniteGroup) -> bool:
    return any(G.is_abelian(N) for N in minimal_normal_subgroups(G))


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    return all(len(G.normal_closure(int(cls[0]))) == G.order
               for cls in G.conjugacy_classes if int(cls[0]) != G.identity)


def is_solvable(G: FiniteGroup) -> bool:
    return len(derived_series(G).last) == 1


def is_weakly_nilpotent(G: FiniteGroup) -> bool:
    """Every pair of elements generates a nilpotent subgroup."""
    return bool(nil_table(G).rows.all())


def quotient(G: FiniteGroup, N: ElementSet, name: str | None = None) -> FiniteGroup:
    """G/N with cosets indexed by their smallest member; labels ``[rep]``."""
    G.require_subgroup(N)
    if not G.is_normal(N):
        raise NotNormal(f"{N!r} is not normal in {G.name}")
    # coset of g is g*N; key each coset by its smallest element
    coset_min = G.mul[:, N.indices].min(axis=1)
    reps = np.unique(coset_min)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[reps] = np.arange(reps.size)
    proj = pos[coset_min]
    mul = proj[G.mul[reps[:, None], reps[None, :]]]
    inv = proj[G.inv[reps]]
    labels = [f"[{G.labels[r]}]" for r in reps]
    Q = FiniteGroup(mul, int(proj[G.identity]), inv, labels, source=G.source,
                    name=name or f"{G.name}/N{len(N)}")
    Q.cache["projection"] = proj
    return Q


def projection(Q: FiniteGroup) -> np.ndarray:
    """Map from the parent's element indices to coset indices of ``Q``."""
    return Q.cache["projection"]


@dataclass
class ClassProfile:
    flags: dict[str, bool]
    per_prime: dict[int, dict[str, bool]] = field(default_factory=dict)

    def consistent(self) -> bool:
        """n-group matches its p-local versions; sn, E, all sn(p), all E_p agree."""
        f, pp = self.flags, self.per_prime.values()
        n_ok = f["n_group"] == all(v["n_p"] for v in pp)
        chain = {f["sn_group"], f["e_group"], all(v["sn_p"] for v in pp), all(v["e_p"] for v in pp)}
        return n_ok and len(chain) == 1

    def to_dict(self) -> dict:
        return {"flags": dict(self.flags),
                "per_prime": {str(p): dict(v) for p, v in sorted(self.per_prime.items())}}


def class_profile(G: FiniteGroup) -> ClassProfile:
    flags = {
        "n_group": is_n_group(G),
        "sn_group": is_sn_group(G),
        "e_group": is_e_group(G),
        "ac_group": is_ac_group(G),
        "centerless": is_centerless(G),
        "has_normal_abelian": has_nontrivial_normal_abelian_subgroup(G) if G.order > 1 else False,
        "solvable": is_solvable(G),
        "nilpotent": len(hypercenter(G)) == G.order,
        "weakly_nilpotent": is_weakly_nilpotent(G),
        "simple": is_simple(G),
    }
    per_prime = {p: {"n_p": is_np_group(G, p), "sn_p": is_snp_group(G, p),
                     "e_p": is_ep_group(G, p), "sylow_abelian": sylow_abelian(G, p)}
                 for p in G.primes}
    return ClassProfile(flags, per_prime)


def is_nilpotent_group(G: FiniteGroup) -> bool:
    return is_nilpotent(G.whole())
