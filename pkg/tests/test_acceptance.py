"""Acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL ...`` line; the lines are echoed
in the pytest terminal summary and printed directly when this file is run as a
script (``python3 tests/test_acceptance.py``).
"""

import subprocess
import sys
import time

import pytest

from nilgraph import GroupAnalysis, builtin, default_corpus, nil_table, nilpotentizer
from nilgraph.claims import check_conjugation_equivariance
from nilgraph.classify import is_n_group, is_sn_group
from nilgraph.groups import normalize_cycle_label
from nilgraph.nilpotentizer import nilpotentizer_direct, subnormalizer_table
from nilgraph.series import engel_table

from oracle import Brute

LINES: list[str] = []

S4_SET = ["()", "(3 4)", "(1 3)", "(2 3)", "(2 4)", "(1 4)", "(1 2)", "(1 2)(3 4)", "(1 3)(2 4)",
          "(1 4)(2 3)", "(1 3 2 4)", "(1 4 3 2)", "(1 2 3 4)", "(1 2 4 3)", "(1 3 4 2)", "(1 4 2 3)"]


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    return [GroupAnalysis(G) for G in default_corpus()]


def non_nilpotent(corpus):
    return [a for a in corpus if not a.nilpotent]


def test_c01_s4_nilpotentizer():
    t0 = time.perf_counter()
    S4 = builtin("S4")
    got = {normalize_cycle_label(s) for s in nilpotentizer(S4, S4.index_of("(1 2)(3 4)")).labels()}
    dt = time.perf_counter() - t0
    ok = got == {normalize_cycle_label(s) for s in S4_SET} and len(got) == 16 and dt < 1
    record(1, ok, f"nil_S4((1 2)(3 4)) has the 16 listed elements ({dt:.2f}s)")


def test_c02_classification():
    t0 = time.perf_counter()
    A5 = builtin("A5")
    a5 = is_sn_group(A5) and is_n_group(A5)
    t_a5 = time.perf_counter() - t0
    t0 = time.perf_counter()
    P8 = builtin("PSL(2,8)")
    p8 = is_sn_group(P8) and is_n_group(P8)
    t_p8 = time.perf_counter() - t0
    S4, D12, P7 = builtin("S4"), builtin("D12"), builtin("PSL(2,7)")
    ok = (is_sn_group(S4) and not is_n_group(S4) and is_sn_group(D12) and is_n_group(D12)
          and not is_n_group(P7) and a5 and p8 and t_a5 < 5 and t_p8 < 120)
    record(2, ok, f"S4 sn not n; D12 sn and n; PSL(2,7) not n; A5 and PSL(2,8) sn and n "
                  f"(A5 {t_a5:.2f}s, PSL(2,8) {t_p8:.2f}s)")


def test_c03_clique_numbers(corpus):
    by = {a.G.name: a for a in corpus}
    w3, w60 = by["S3"].full_metrics.clique_number, by["A5"].full_metrics.clique_number
    record(3, w3 == 4 and w60 == 21, f"omega(N_S3) = {w3}, omega(N_A5) = {w60}")


def test_c04_planarity(corpus):
    planar = [a.G.name for a in non_nilpotent(corpus) if a.reduced_metrics.planar]
    s3 = next(a for a in corpus if a.G.name == "S3").reduced_metrics
    ok = planar == ["S3"] and (s3.vertex_count, s3.edge_count) == (5, 9)
    record(4, ok, f"planar reduced graphs: {planar}; S3 reduced graph {s3.vertex_count} vertices, "
                  f"{s3.edge_count} edges")


def test_c05_degree_kinds(corpus):
    bad = [a.G.name for a in corpus
           if a.nilpotent != (a.full_metrics.degree_kinds <= 2)
           or (not a.nilpotent and (a.full_metrics.degree_kinds < 3 or a.reduced_metrics.degree_kinds < 2))]
    record(5, not bad, f"degree-kind law on {len(corpus)} groups; violations: {bad}")


def test_c06_components_and_diameter(corpus):
    bad = []
    for a in corpus:
        expected = len(a.hypercenter) + (0 if a.nilpotent else 1)
        if a.full_metrics.component_count != expected:
            bad.append(a.G.name)
    diam = {a.G.name: a.reduced_metrics.diameter for a in non_nilpotent(corpus)}
    bad += [n for a in non_nilpotent(corpus) for n in [a.G.name]
            if a.reduced_metrics.component_count != 1 or not 2 <= diam[n] <= 6]
    record(6, not bad, f"component counts and 2 <= diam <= 6; violations: {bad}; "
                       f"empirical max reduced diameter = {max(diam.values())}")


def test_c07_diameter_two(corpus):
    by = {a.G.name: a for a in corpus}
    named = all(by[n].reduced_metrics.diameter == 2 for n in ("A5", "S5", "PSL(2,7)"))
    n_groups = [a for a in corpus if a.profile.flags["n_group"] and not a.profile.flags["weakly_nilpotent"]]
    rest = all(a.reduced_metrics.diameter == 2 for a in n_groups)
    record(7, named and rest, f"diameter 2 for A5, S5, PSL(2,7) and {len(n_groups)} non-weakly-nilpotent n-groups")


def test_c08_edge_bound(corpus):
    bad, s3_edges = [], None
    for a in non_nilpotent(corpus):
        if not a.profile.flags["solvable"]:
            continue
        p = min(a.G.primes)
        e = a.reduced_metrics.edge_count
        if 2 * p * e < (p - 1) * a.G.order ** 2:
            bad.append(a.G.name)
        if a.G.name == "S3":
            s3_edges = e
    record(8, not bad and s3_edges == 9, f"edge bound holds, violations {bad}; S3 meets it with {s3_edges} edges")


def test_c09_identity_suite(corpus):
    bad = []
    for a in corpus:
        G, t = a.G, a.table
        if not (a.hypercenter == t.nil_of_group == a.right_engel):
            bad.append((G.name, "P2.1"))
        if ((t.sizes() % G.orders) != 0).any():
            bad.append((G.name, "divisibility"))
        if check_conjugation_equivariance(a) is not None:
            bad.append((G.name, "equivariance"))
        sn = subnormalizer_table(G).rows
        if (t.rows & ~sn).any() or (sn & ~engel_table(G)).any():
            bad.append((G.name, "inclusion chain"))
    record(9, not bad, f"identity suite over {len(corpus)} groups; violations: {bad}")


def test_c10_equivalence_ledger(corpus):
    bad = [a.G.name for a in corpus if not a.profile.consistent()]
    record(10, not bad, f"sn <=> E <=> all sn(p) <=> all E_p on {len(corpus)} groups; violations: {bad}")


def test_c11_oracle_cross_check():
    checked, bad = [], []
    for G in default_corpus():
        if G.order > 60:
            continue
        checked.append(G.name)
        B = Brute(G)
        rows = nil_table(G).rows
        for x in range(G.order):
            if set(rows[x].nonzero()[0].tolist()) != B.nilpotentizer(x) or nilpotentizer_direct(G, x).mask.tolist() != rows[x].tolist():
                bad.append((G.name, G.labels[x]))
                break
    record(11, not bad, f"nil_table equals brute force on {len(checked)} groups of order <= 60; mismatches: {bad}")


@pytest.mark.slow
def test_c12_full_suite_cli():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "nilgraph", "verify", "--suite", "paper", "--threads", "1"],
                          capture_output=True, text=True, timeout=900)
    dt = time.perf_counter() - t0
    failing = [ln for ln in proc.stdout.splitlines() if ": fail" in ln]
    record(12, proc.returncode == 0 and dt < 600,
           f"verify --suite paper exit {proc.returncode} in {dt:.1f}s; failing claims: {failing}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
