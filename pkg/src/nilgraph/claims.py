"""Claims about non-nilpotent graphs, each checked group by group.

A claim check returns ``None`` when it passes, a :class:`Skip` when the group
does not satisfy its hypotheses, or a witness dict describing a failure.
"""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analysis import GroupAnalysis, quotient_is_a5, quotient_is_s3
from .classify import is_n_group, projection, quotient
from .groups import ElementSet, normalize_cycle_label
from .nilpotentizer import nil_table, nilpotentizer, subnormalizer_table
from .series import engel_table, is_nilpotent

S4_ELEMENT = "(1 2)(3 4)"
S4_NILPOTENTIZER = [
    "()", "(3 4)", "(1 3)", "(2 3)", "(2 4)", "(1 4)", "(1 2)", "(1 2)(3 4)", "(1 3)(2 4)",
    "(1 4)(2 3)", "(1 3 2 4)", "(1 4 3 2)", "(1 2 3 4)", "(1 2 4 3)", "(1 3 4 2)", "(1 4 2 3)",
]
EQUIVARIANCE_SAMPLES = 100


@dataclass(frozen=True)
class Skip:
    reason: str


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    check: Callable[[GroupAnalysis], object]


def _fail(**witness) -> dict:
    return {k: (v if not isinstance(v, np.generic) else v.item()) for k, v in witness.items()}


def _lab(G, x) -> str:
    return G.labels[int(x)]


def _psl_q(a: GroupAnalysis) -> int | None:
    m = re.fullmatch(r"builtin PSL\(2,(\d+)\)", a.G.source)
    return int(m.group(1)) if m else None


def _psl2_even_orders(limit: int = 10 ** 7) -> set[int]:
    out, n = set(), 2
    while True:
        q = 2 ** n
        order = q * (q * q - 1)
        if order > limit:
            return out
        out.add(order)
        n += 1


def _suzuki_orders(limit: int = 10 ** 9) -> set[int]:
    out, m = set(), 1
    while True:
        q = 2 ** (2 * m + 1)
        order = q * q * (q * q + 1) * (q - 1)
        if order > limit:
            return out
        out.add(order)
        m += 1


# -- individual checks --------------------------------------------------------

def check_hypercenter_equalities(a: GroupAnalysis):
    Z, N, R = a.hypercenter, a.table.nil_of_group, a.right_engel
    if not (Z <= N <= R):
        return _fail(hypercenter=len(Z), nil=len(N), right_engel=len(R), issue="inclusion")
    if not (Z == N == R):
        return _fail(hypercenter=len(Z), nil=len(N), right_engel=len(R), issue="equality")
    return None


def check_nil_in_nilpotentizers(a: GroupAnalysis):
    rows = a.table.rows
    bad = np.flatnonzero(~(rows | ~a.table.nil_of_group.mask[None, :]).all(axis=1))
    if bad.size:
        return _fail(element=_lab(a.G, bad[0]))
    return None


def _hypercenter_quotient(a: GroupAnalysis):
    Q = a.quotient_by_hypercenter
    return Q, projection(Q)


def check_quotient_nilpotentizer(a: GroupAnalysis):
    G = a.G
    Q, proj = _hypercenter_quotient(a)
    qrows = nil_table(Q).rows
    rows = a.table.rows
    for x in range(G.order):
        # nil_G(x) is the full preimage of nil_{G/K}(xK)
        if not np.array_equal(rows[x], qrows[proj[x]][proj]):
            return _fail(element=_lab(G, x), quotient_order=Q.order)
    return None


def check_quotient_n_group(a: GroupAnalysis):
    Q, _ = _hypercenter_quotient(a)
    if is_n_group(a.G) != is_n_group(Q):
        return _fail(group_n=is_n_group(a.G), quotient_n=is_n_group(Q), quotient_order=Q.order)
    return None


def check_same_cyclic_same_nil(a: GroupAnalysis):
    G = a.G
    rows = a.table.rows
    cid = G.cyclic_ids
    for x in range(G.order):
        key = int(cid[x])
        if not np.array_equal(rows[x], rows[key]):
            return _fail(element=_lab(G, x), generator=_lab(G, key))
    return None


def check_conjugation_equivariance(a: GroupAnalysis):
    G = a.G
    rng = np.random.default_rng(zlib.crc32(G.name.encode()))
    for _ in range(EQUIVARIANCE_SAMPLES):
        x, g = (int(v) for v in rng.integers(0, G.order, size=2))
        lhs = nilpotentizer(G, G.conjugate(x, g))
        rhs = ElementSet.of(G, G.conj[nilpotentizer(G, x).indices, g])
        if lhs != rhs:
            return _fail(x=_lab(G, x), g=_lab(G, g))
    return None


def check_order_divides_nil(a: GroupAnalysis):
    sizes = a.table.sizes()
    bad = np.flatnonzero(sizes % a.G.orders != 0)
    if bad.size:
        x = int(bad[0])
        return _fail(element=_lab(a.G, x), order=int(a.G.orders[x]), nil_size=int(sizes[x]))
    return None


def check_inclusion_chain(a: GroupAnalysis):
    G = a.G
    nil = a.table.rows
    sn = subnormalizer_table(G).rows
    eng = engel_table(G)
    bad = np.flatnonzero((nil & ~sn).any(axis=1) | (sn & ~eng).any(axis=1))
    if bad.size:
        return _fail(element=_lab(G, bad[0]))
    return None


def check_sn_e_equivalence(a: GroupAnalysis):
    p = a.profile
    if not p.consistent():
        return _fail(sn=p.flags["sn_group"], e=p.flags["e_group"],
                     per_prime={str(k): v for k, v in p.per_prime.items()})
    return None


def check_simple_sn_classification(a: GroupAnalysis):
    f = a.profile.flags
    if not f["simple"] or a.G.is_abelian():
        return Skip("not a non-abelian simple group")
    listed = a.G.order in _psl2_even_orders() or a.G.order in _suzuki_orders()
    if f["sn_group"] != listed:
        return _fail(order=a.G.order, sn_group=f["sn_group"], listed_order=listed)
    return None


def check_s4_nilpotentizer(a: GroupAnalysis):
    G = a.G
    if G.source != "builtin S4":
        return Skip("only applies to S4")
    x = G.index_of(S4_ELEMENT)
    got = {normalize_cycle_label(s) for s in nilpotentizer(G, x).labels()}
    want = {normalize_cycle_label(s) for s in S4_NILPOTENTIZER}
    f = a.profile.flags
    if got != want or not f["sn_group"] or f["n_group"]:
        return _fail(nilpotentizer=sorted(got), sn_group=f["sn_group"], n_group=f["n_group"])
    return None


def check_prime_reduction(a: GroupAnalysis):
    p = a.profile
    local = all(v["n_p"] for v in p.per_prime.values())
    if p.flags["n_group"] != local:
        return _fail(n_group=p.flags["n_group"], all_n_p=local)
    return None


def check_abelian_sylow(a: GroupAnalysis):
    G = a.G
    tested = False
    for prime, v in a.profile.per_prime.items():
        if not v["sylow_abelian"]:
            continue
        tested = True
        if not v["n_p"]:
            return _fail(prime=prime, n_p=False)
        for x in np.flatnonzero(G.p_elements(prime)):
            if a.table[int(x)] != G.centralizer(int(x)):
                return _fail(prime=prime, element=_lab(G, x), issue="nil != centralizer")
    return None if tested else Skip("no abelian Sylow subgroup")


def _nil_equals_centralizer_off_identity(a: GroupAnalysis):
    G = a.G
    for x in range(G.order):
        if x != G.identity and a.table[x] != G.centralizer(x):
            return _fail(element=_lab(G, x), issue="nil != centralizer")
    return None


def check_centerless_ac(a: GroupAnalysis):
    f = a.profile.flags
    if not (f["centerless"] and f["ac_group"]):
        return Skip("not a centerless AC-group")
    if not f["n_group"]:
        return _fail(n_group=False)
    return _nil_equals_centralizer_off_identity(a)


def check_simple_sn_is_n(a: GroupAnalysis):
    f = a.profile.flags
    if not (f["simple"] and f["sn_group"]):
        return Skip("not a simple sn-group")
    if not f["n_group"]:
        return _fail(n_group=False)
    return None


def check_psl_mod16_n_group(a: GroupAnalysis):
    q = _psl_q(a)
    if q is None or (q * q) % 16 == 1:
        return Skip("not PSL(2,q) with q^2 != 1 mod 16")
    if not a.profile.flags["n_group"]:
        return _fail(q=q, n_group=False)
    return _nil_equals_centralizer_off_identity(a)


def check_psl_mod16_not_n_group(a: GroupAnalysis):
    q = _psl_q(a)
    if q is None or (q * q) % 16 != 1:
        return Skip("not PSL(2,q) with q^2 = 1 mod 16")
    if a.profile.flags["n_group"]:
        return _fail(q=q, n_group=True)
    # a 2-generated subgroup of order 24 that is itself not an n-group
    for H in a.two_generated_subgroups:
        if len(H) == 24 and not is_n_group(a.G.subgroup_as_group(H)):
            return None
    return _fail(q=q, issue="no order-24 non-n-subgroup found")


def check_diam_girth(a: GroupAnalysis):
    if a.profile.flags["weakly_nilpotent"]:
        return Skip("weakly nilpotent")
    m = a.full_metrics
    if m.diameter < 2 or m.girth != 3:
        return _fail(diameter=m.diameter, girth=m.girth)
    return None


def _non_nil_count(G) -> int:
    return G.order - len(nil_table(G).nil_of_group)


def check_subgroup_vertex_count(a: GroupAnalysis):
    if a.nilpotent:
        return Skip("nilpotent")
    G = a.G
    mine = _non_nil_count(G)
    for H in a.two_generated_subgroups:
        if len(H) == G.order or is_nilpotent(H):
            continue
        sub = G.subgroup_as_group(H)
        if not mine > _non_nil_count(sub):
            return _fail(subgroup_order=len(H), group_count=mine, subgroup_count=_non_nil_count(sub))
    return None


def check_quotient_vertex_count(a: GroupAnalysis):
    if a.nilpotent:
        return Skip("nilpotent")
    G = a.G
    mine = _non_nil_count(G)
    tested = 0
    for N in a.normal_subgroups:
        if len(N) in (1, G.order):
            continue
        Q = quotient(G, N)
        if is_nilpotent(Q.whole()):
            continue
        tested += 1
        if mine == _non_nil_count(Q):
            return _fail(normal_order=len(N), group_count=mine, quotient_count=_non_nil_count(Q))
    return None if tested else Skip("no proper normal subgroup with non-nilpotent quotient")


def check_edge_bound(a: GroupAnalysis):
    f = a.profile.flags
    if a.nilpotent or not f["solvable"]:
        return Skip("not a non-nilpotent solvable group")
    p = min(a.G.primes)
    e = a.reduced_metrics.edge_count
    if 2 * p * e < (p - 1) * a.G.order ** 2:
        return _fail(edges=e, prime=p, bound=(p - 1) * a.G.order ** 2 / (2 * p))
    return None


def _omega(a: GroupAnalysis) -> int:
    w = a.full_metrics.clique_number
    if w is None:
        raise RuntimeError(f"clique number of {a.G.name} unavailable (budget exhausted)")
    return w


def check_clique_small(a: GroupAnalysis):
    w = _omega(a)
    if a.nilpotent != (w <= 3):
        return _fail(omega=w, nilpotent=a.nilpotent)
    if w <= 20 and not a.profile.flags["solvable"]:
        return _fail(omega=w, solvable=False)
    return None


def check_clique_21(a: GroupAnalysis):
    if a.profile.flags["solvable"]:
        return Skip("solvable")
    w = _omega(a)
    Q = a.quotient_by_hypercenter
    if (w == 21) != quotient_is_a5(Q):
        return _fail(omega=w, quotient_order=Q.order)
    return None


def check_clique_4(a: GroupAnalysis):
    w = _omega(a)
    Q = a.quotient_by_hypercenter
    if (w == 4) != quotient_is_s3(Q):
        return _fail(omega=w, quotient_order=Q.order, quotient_abelian=Q.is_abelian())
    return None


def check_connected_diameter(a: GroupAnalysis):
    if a.nilpotent:
        return Skip("nilpotent")
    m = a.reduced_metrics
    if m.component_count != 1 or m.diameter > 6:
        return _fail(components=m.component_count, diameter=m.diameter)
    # vertices with different prime sets are within distance 4
    g = a.reduced_graph
    A = g.adjacency.astype(np.float32)
    R = np.eye(g.vertex_count, dtype=bool)
    for _ in range(4):
        R = R | ((R.astype(np.float32) @ A) > 0)
    G = a.G
    sig = [frozenset(G.pi_of(int(v))) for v in g.vertex_map]
    _, cls = np.unique([str(sorted(s)) for s in sig], return_inverse=True)
    far = ~R & (cls[:, None] != cls[None, :])
    if far.any():
        i, j = np.argwhere(far)[0]
        return _fail(x=g.vertex_labels[i], y=g.vertex_labels[j], issue="distance > 4")
    return None


def check_no_normal_abelian_diameter(a: GroupAnalysis):
    if a.profile.flags["has_normal_abelian"] or a.G.order == 1:
        return Skip("has a nontrivial normal abelian subgroup")
    m = a.reduced_metrics
    if len(a.table.nil_of_group) != 1 or m.component_count != 1 or m.diameter != 2:
        return _fail(nil=len(a.table.nil_of_group), components=m.component_count,
                     diameter=m.diameter)
    return None


def check_n_group_diameter(a: GroupAnalysis):
    f = a.profile.flags
    if not f["n_group"] or f["weakly_nilpotent"]:
        return Skip("not a non-weakly-nilpotent n-group")
    m = a.reduced_metrics
    if m.component_count != 1 or m.diameter != 2:
        return _fail(components=m.component_count, diameter=m.diameter)
    return None


def _is_s3(a: GroupAnalysis) -> bool:
    return a.G.order == 6 and not a.G.is_abelian()


def check_planarity(a: GroupAnalysis):
    if a.nilpotent:
        return Skip("nilpotent")
    planar = a.reduced_metrics.planar
    if planar != _is_s3(a):
        return _fail(planar=planar, order=a.G.order)
    return None


S3_REDUCED_FINGERPRINT = (5, 9, (3, 3, 4, 4, 4))


def check_s3_graph_recognition(a: GroupAnalysis):
    if a.nilpotent:
        return Skip("nilpotent")
    g = a.reduced_graph
    fp = (g.vertex_count, a.reduced_metrics.edge_count, tuple(sorted(g.degrees().tolist())))
    if fp == S3_REDUCED_FINGERPRINT and not _is_s3(a):
        return _fail(fingerprint=str(fp), order=a.G.order)
    if _is_s3(a) and fp != S3_REDUCED_FINGERPRINT:
        return _fail(fingerprint=str(fp), issue="S3 graph fingerprint changed")
    return None


def check_degree_kinds(a: GroupAnalysis):
    kinds = a.full_metrics.degree_kinds
    if a.nilpotent != (kinds <= 2):
        return _fail(nilpotent=a.nilpotent, degree_kinds=kinds)
    if not a.nilpotent and a.reduced_metrics.degree_kinds < 2:
        return _fail(issue="reduced graph is regular", degree_set=a.reduced_metrics.degree_set)
    return None


def check_component_count(a: GroupAnalysis):
    expected = len(a.hypercenter) + (0 if a.nilpotent else 1)
    got = a.full_metrics.component_count
    if got != expected:
        return _fail(components=got, expected=expected)
    return None


CLAIMS: list[Claim] = [
    Claim("P2.1", "Z*(G) <= nil(G) <= R(G), with equality for finite groups",
          check_hypercenter_equalities),
    Claim("L2.3(1)", "nil(G) is contained in every nilpotentizer", check_nil_in_nilpotentizers),
    Claim("L2.3(3)", "nil_{G/K}(xK) = nil_G(x)/K for normal K <= Z*(G) (K = Z*(G))",
          check_quotient_nilpotentizer),
    Claim("L2.3(4)", "G is an n-group iff G/K is, for normal K <= Z*(G) (K = Z*(G))",
          check_quotient_n_group),
    Claim("L2.3(5)", "<x> = <y> implies nil_G(x) = nil_G(y)", check_same_cyclic_same_nil),
    Claim("L2.3(6)", "nil_G(x)^g = nil_G(x^g) (sampled pairs)", check_conjugation_equivariance),
    Claim("L2.4", "|x| divides |nil_G(x)|", check_order_divides_nil),
    Claim("INC", "nil_G(x) <= S_G(x) <= E_G(x)", check_inclusion_chain),
    Claim("T3.1", "sn-group <=> E-group <=> sn(p) for all p <=> E_p for all p",
          check_sn_e_equivalence),
    Claim("T3.2", "a non-abelian simple group is an sn-group iff it is PSL(2,2^n) or Sz(2^(2m+1))",
          check_simple_sn_classification),
    Claim("L3.4", "S4 is an sn-group but not an n-group; nil((1 2)(3 4)) has 16 listed elements",
          check_s4_nilpotentizer),
    Claim("L3.5", "n-group iff n_p-group for every prime p dividing |G|", check_prime_reduction),
    Claim("L3.6", "abelian Sylow p-subgroups give an n_p-group with nil = centralizer on p-elements",
          check_abelian_sylow),
    Claim("L3.7", "a centerless AC-group is an n-group with nil = centralizer off the identity",
          check_centerless_ac),
    Claim("T3.8", "every simple sn-group is an n-group", check_simple_sn_is_n),
    Claim("L3.9", "PSL(2,q) with q^2 != 1 mod 16 is an n-group with nil = centralizer",
          check_psl_mod16_n_group),
    Claim("L3.10", "PSL(2,q) with q^2 = 1 mod 16 is not an n-group (contains an order-24 non-n-subgroup)",
          check_psl_mod16_not_n_group),
    Claim("P4.8", "not weakly nilpotent implies diam(N_G) >= 2 and girth(N_G) = 3", check_diam_girth),
    Claim("P4.9", "|G| - |nil(G)| > |H| - |nil(H)| for non-nilpotent proper 2-generated H",
          check_subgroup_vertex_count),
    Claim("P4.10", "|G| - |nil(G)| != |G/N| - |nil(G/N)| for proper N with G/N non-nilpotent",
          check_quotient_vertex_count),
    Claim("P4.11", "solvable non-nilpotent G has at least (p-1)/(2p)|G|^2 reduced edges",
          check_edge_bound),
    Claim("T4.5", "nilpotent iff omega(N_G) <= 3; omega(N_G) <= 20 implies solvable", check_clique_small),
    Claim("T4.6", "non-solvable G: omega(N_G) = 21 iff G/Z*(G) is A5", check_clique_21),
    Claim("T4.7", "omega(N_G) = 4 iff G/Z*(G) is S3", check_clique_4),
    Claim("T5.1", "reduced graph connected with diameter <= 6; distinct prime sets within distance 4",
          check_connected_diameter),
    Claim("T5.3", "no nontrivial normal abelian subgroup implies reduced diameter 2",
          check_no_normal_abelian_diameter),
    Claim("P5.4", "non-weakly-nilpotent n-group implies reduced graph connected of diameter 2",
          check_n_group_diameter),
    Claim("T6.1", "for non-nilpotent G the reduced graph is planar iff G is S3", check_planarity),
    Claim("C6.2", "a reduced graph with the S3 fingerprint forces G to be S3",
          check_s3_graph_recognition),
    Claim("T7.1", "nilpotent iff N_G has at most two vertex degrees; reduced graph never regular",
          check_degree_kinds),
    Claim("ABS", "N_G has |Z*(G)| components (nilpotent) or |Z*(G)| + 1 (otherwise)",
          check_component_count),
]

CLAIMS_BY_ID = {c.id: c for c in CLAIMS}

NOT_EXECUTED = {
    "T3.8 (Suzuki branch)": "Sz(2^(2m+1)) is not among the builtin families",
    "T4.1": "statement about infinite finitely generated solvable groups",
    "T4.3": "bound for infinite finitely generated solvable groups",
    "T4.4": "non-constructive bound",
}


# -- suite runner -------------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


def select_claims(text: str | None) -> list[Claim]:
    """``None`` or ``"paper"`` selects every claim; otherwise a comma-separated id list."""
    if text is None or text.strip() == "paper":
        return list(CLAIMS)
    out = []
    for cid in (s.strip() for s in text.split(",")):
        if not cid:
            continue
        if cid not in CLAIMS_BY_ID:
            raise KeyError(f"unknown claim id {cid!r}")
        out.append(CLAIMS_BY_ID[cid])
    if not out:
        raise KeyError("empty claim list")
    return out


@dataclass
class GroupOutcome:
    id: str
    order: int
    source: str
    results: dict[str, tuple[str, object]]
    reduced_diameter: int | None
    reduced_clique: int | None
    weakly_nilpotent: bool
    seconds: float


def evaluate_group(entry, claim_ids: list[str], cap: int, clique_budget: int) -> GroupOutcome:
    """Run the selected claims on one corpus entry (top-level so worker processes can pickle it)."""
    import time
    t0 = time.perf_counter()
    G = entry.build(cap)
    a = GroupAnalysis(G, clique_budget)
    results: dict[str, tuple[str, object]] = {}
    for cid in claim_ids:
        try:
            out = CLAIMS_BY_ID[cid].check(a)
        except Exception as exc:  # a crashing check is a failed claim, with the error as witness
            out = _fail(error=f"{type(exc).__name__}: {exc}")
        if out is None:
            results[cid] = (PASS, None)
        elif isinstance(out, Skip):
            results[cid] = (NOT_APPLICABLE, out.reason)
        else:
            results[cid] = (FAIL, out)
    nilpotent = a.nilpotent
    return GroupOutcome(
        id=G.name, order=G.order, source=G.source, results=results,
        reduced_diameter=None if nilpotent else a.reduced_metrics.diameter,
        reduced_clique=None if nilpotent else a.reduced_clique,
        weakly_nilpotent=a.profile.flags["weakly_nilpotent"],
        seconds=time.perf_counter() - t0,
    )


@dataclass
class SuiteResult:
    claims: list[dict]
    corpus: list[dict]
    reports: dict
    timings: dict

    @property
    def passed(self) -> bool:
        return all(c["verdict"] != FAIL for c in self.claims)

    def failures(self) -> list[str]:
        return [c["id"] for c in self.claims if c["verdict"] == FAIL]

    def to_dict(self) -> dict:
        return {"claims": self.claims, "corpus": self.corpus, "reports": self.reports,
                "timings": self.timings}

    def to_text(self) -> str:
        lines = []
        for c in self.claims:
            lines.append(f"{c['id']}: {c['verdict']} (tested {len(c['tested'])}, "
                         f"skipped {len(c['skipped'])})")
            for w in c["witnesses"]:
                lines.append("  witness: " + ", ".join(f"{k}={v}" for k, v in w.items()))
        for k, v in self.reports.items():
            lines.append(f"report.{k}: {v}")
        for k, v in self.timings.items():
            lines.append(f"timing.{k}: {v}")
        lines.append("result: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines) + "\n"


def _aggregate(claims: list[Claim], outcomes: list[GroupOutcome]) -> list[dict]:
    records = []
    for claim in claims:
        tested, skipped, witnesses = [], [], []
        for o in outcomes:
            verdict, detail = o.results[claim.id]
            if verdict == NOT_APPLICABLE:
                skipped.append({"group": o.id, "reason": detail})
                continue
            tested.append(o.id)
            if verdict == FAIL:
                witnesses.append({"group": o.id, **detail})
        verdict = FAIL if witnesses else (PASS if tested else NOT_APPLICABLE)
        records.append({"id": claim.id, "anchor": claim.anchor, "tested": tested,
                        "skipped": skipped, "verdict": verdict, "witnesses": witnesses})
    return records


def _reports(outcomes: list[GroupOutcome]) -> dict:
    diam = [(o.reduced_diameter, o.id) for o in outcomes if o.reduced_diameter is not None]
    cliques = [(o.reduced_clique, o.id) for o in outcomes
               if o.reduced_clique is not None and not o.weakly_nilpotent]
    return {
        "max_reduced_diameter": max(diam)[0] if diam else None,
        "max_reduced_diameter_groups": sorted(g for d, g in diam if d == max(diam)[0]) if diam else [],
        "min_reduced_clique_non_weakly_nilpotent": min(cliques)[0] if cliques else None,
        "not_executed": dict(NOT_EXECUTED),
    }


def run_suite(entries, claim_filter: str | None = None, threads: int = 1,
              cap: int | None = None, clique_budget: int | None = None,
              with_timings: bool = False) -> SuiteResult:
    """Evaluate claims over a corpus.  Output is independent of ``threads``."""
    import time
    from concurrent.futures import ProcessPoolExecutor

    from .graph import DEFAULT_CLIQUE_BUDGET
    from .groups import DEFAULT_CAP

    entries = list(entries)
    if not entries:
        raise ValueError("empty corpus")
    cap = DEFAULT_CAP if cap is None else cap
    clique_budget = DEFAULT_CLIQUE_BUDGET if clique_budget is None else clique_budget
    claims = select_claims(claim_filter)
    ids = [c.id for c in claims]
    t0 = time.perf_counter()
    args = [(e, ids, cap, clique_budget) for e in entries]
    if threads > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(evaluate_group, *zip(*args)))
    else:
        outcomes = [evaluate_group(*a) for a in args]
    corpus = [{"id": o.id, "order": o.order, "source": o.source} for o in outcomes]
    timings = {}
    if with_timings:
        timings = {"groups": {o.id: round(o.seconds, 3) for o in outcomes},
                   "total": round(time.perf_counter() - t0, 3)}
    return SuiteResult(_aggregate(claims, outcomes), corpus, _reports(outcomes), timings)
