"""Per-group analysis: the corpus, cached analyses and the GroupReport record."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .classify import ClassProfile, class_profile, is_simple, quotient
from .families import builtin
from .graph import (DEFAULT_CLIQUE_BUDGET, GraphMetrics, NnGraph, build_full_graph,
                    build_reduced_graph, graph_metrics, maximum_clique)
from .errors import CliqueTimeout
from .groups import DEFAULT_CAP, ElementSet, FiniteGroup, read_cayley_file, read_permutation_file
from .nilpotentizer import NilTable, nil_table
from .series import (hypercenter, lower_central_series, nilpotency_class, right_engel_set,
                     upper_central_series)

DEFAULT_CORPUS = [
    "S3", "S4", "S5", "A4", "A5", "D8", "D10", "D12", "Q8", "T", "C6", "C12",
    "S3xC2", "A4xC2", "PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)",
    "PSL(2,11)", "PSL(2,13)",
]


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str = "builtin"   # builtin | cayley | perms
    ref: str = ""

    def build(self, cap: int = DEFAULT_CAP) -> FiniteGroup:
        if self.kind == "builtin":
            G = builtin(self.ref or self.id, cap)
        elif self.kind == "cayley":
            G = read_cayley_file(self.ref)
        elif self.kind == "perms":
            G = read_permutation_file(self.ref, cap)
        else:
            raise ValueError(f"unknown corpus entry kind {self.kind!r}")
        G.name = self.id
        return G


def default_entries() -> list[CorpusEntry]:
    return [CorpusEntry(name, "builtin", name) for name in DEFAULT_CORPUS]


def load_corpus_config(path) -> list[CorpusEntry]:
    """Corpus config (JSON).

    Keys: ``default`` (bool, include the default corpus, default true),
    ``builtin`` (list of names), ``cayley`` and ``perms`` (lists of paths,
    relative paths resolved against the config file).
    """
    path = Path(path)
    cfg = json.loads(path.read_text())
    entries = default_entries() if cfg.get("default", True) else []
    for name in cfg.get("builtin", []):
        entries.append(CorpusEntry(name, "builtin", name))
    for kind in ("cayley", "perms"):
        for p in cfg.get(kind, []):
            full = (path.parent / p) if not Path(p).is_absolute() else Path(p)
            entries.append(CorpusEntry(Path(p).stem, kind, str(full)))
    return entries


def default_corpus(cap: int = DEFAULT_CAP) -> list[FiniteGroup]:
    return [e.build(cap) for e in default_entries()]


class GroupAnalysis:
    """Lazily computed facts about one group, shared by the report and the claims."""

    def __init__(self, G: FiniteGroup, clique_budget: int = DEFAULT_CLIQUE_BUDGET):
        self.G = G
        self.clique_budget = clique_budget
        self.timings: dict[str, float] = {}

    def _timed(self, key: str, fn):
        t0 = time.perf_counter()
        out = fn()
        self.timings[key] = self.timings.get(key, 0.0) + time.perf_counter() - t0
        return out

    @cached_property
    def table(self) -> NilTable:
        return self._timed("nil_table", lambda: nil_table(self.G))

    @cached_property
    def hypercenter(self) -> ElementSet:
        return hypercenter(self.G)

    @cached_property
    def right_engel(self) -> ElementSet:
        return self._timed("engel", lambda: right_engel_set(self.G))

    @cached_property
    def profile(self) -> ClassProfile:
        return self._timed("classify", lambda: class_profile(self.G))

    @property
    def nilpotent(self) -> bool:
        return len(self.hypercenter) == self.G.order

    @cached_property
    def full_graph(self) -> NnGraph:
        return build_full_graph(self.G)

    @cached_property
    def reduced_graph(self) -> NnGraph:
        return build_reduced_graph(self.G)

    @cached_property
    def reduced_clique(self) -> int | None:
        try:
            return self._timed("clique", lambda: len(maximum_clique(self.reduced_graph,
                                                                     self.clique_budget)))
        except CliqueTimeout:
            return None

    @cached_property
    def reduced_metrics(self) -> GraphMetrics:
        return self._timed("graph", lambda: graph_metrics(self.reduced_graph,
                                                          clique=self.reduced_clique))

    @cached_property
    def full_metrics(self) -> GraphMetrics:
        # nil(G) vertices are isolated, so the cliques of N_G are those of the
        # reduced graph (or single vertices when it has no edges)
        w = self.reduced_clique
        if w is not None and self.G.order:
            w = max(w, 1)
        return self._timed("graph", lambda: graph_metrics(self.full_graph, clique=w))

    @cached_property
    def quotient_by_hypercenter(self) -> FiniteGroup:
        return quotient(self.G, self.hypercenter, name=f"{self.G.name}/Z*")

    @cached_property
    def two_generated_subgroups(self) -> list[ElementSet]:
        """Distinct <x, g>, x running over classes of cyclic subgroups, g over all cyclic subgroups.

        Each 2-generated subgroup is conjugate to one in this list.
        """
        G = self.G
        cid = G.cyclic_ids
        cyclic_keys = np.unique(cid)
        reps = []
        covered = np.zeros(G.order, dtype=bool)
        for x in range(G.order):
            if not covered[x]:
                reps.append(x)
                covered[np.isin(cid, np.unique(cid[G.conj[x]]))] = True
        seen: dict[bytes, ElementSet] = {}
        for x in reps:
            for g in cyclic_keys:
                H = G.pair_closure(x, int(g))
                seen.setdefault(H.mask.tobytes(), H)
        return sorted(seen.values(), key=lambda H: (len(H), H.indices.tolist()))

    @cached_property
    def normal_subgroups(self) -> list[ElementSet]:
        """Normal closures of single elements and joins of pairs of them."""
        G = self.G
        base = {G.normal_closure(int(cls[0])) for cls in G.conjugacy_classes}
        base = sorted(base, key=lambda N: (len(N), N.indices.tolist()))
        out = set(base)
        for i, N in enumerate(base):
            for M in base[i + 1:]:
                out.add(G.closure(N | M))
        return sorted(out, key=lambda N: (len(N), N.indices.tolist()))

    def report(self, with_timings: bool = False) -> "GroupReport":
        G = self.G
        t0 = time.perf_counter()
        table = self.table
        upper = upper_central_series(G)
        lower = lower_central_series(G)
        full = self.full_metrics
        reduced = self.reduced_metrics
        rep = GroupReport(
            id=G.name,
            order=G.order,
            source=G.source,
            upper_central_sizes=upper.sizes(),
            lower_central_sizes=lower.sizes(),
            nilpotency_class=nilpotency_class(G.whole()),
            hypercenter_size=len(self.hypercenter),
            nil_size=len(table.nil_of_group),
            nil_is_subgroup=G.is_subgroup(table.nil_of_group),
            right_engel_size=len(self.right_engel),
            profile=self.profile,
            full=full,
            reduced=reduced,
            timings={},
        )
        if with_timings:
            self.timings["report"] = time.perf_counter() - t0
            rep.timings = {k: round(v, 4) for k, v in sorted(self.timings.items())}
        return rep


@dataclass
class GroupReport:
    id: str
    order: int
    source: str
    upper_central_sizes: list[int]
    lower_central_sizes: list[int]
    nilpotency_class: int | None
    hypercenter_size: int
    nil_size: int
    nil_is_subgroup: bool
    right_engel_size: int
    profile: ClassProfile
    full: GraphMetrics
    reduced: GraphMetrics
    timings: dict[str, float] = field(default_factory=dict)

    def consistent(self) -> bool:
        """Isolated vertices of N_G are exactly the elements of nil(G)."""
        if self.order == 1:
            return self.nil_size == 1
        return self.full.component_sizes.count(1) == self.nil_size

    def to_dict(self) -> dict:
        out = {
            "group": {"id": self.id, "order": self.order, "source": self.source},
            "series": {
                "upper_central_sizes": list(self.upper_central_sizes),
                "lower_central_sizes": list(self.lower_central_sizes),
                "nilpotency_class": self.nilpotency_class,
            },
            "sets": {
                "hypercenter_size": self.hypercenter_size,
                "nil_size": self.nil_size,
                "nil_is_subgroup": self.nil_is_subgroup,
                "right_engel_size": self.right_engel_size,
            },
            "class": self.profile.to_dict(),
            "full_graph": self.full.to_dict(),
            "reduced_graph": self.reduced.to_dict(),
        }
        if self.timings:
            out["timings"] = dict(self.timings)
        return out

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"group: {self.id}", f"order: {self.order}", f"source: {self.source}"]
        for section in ("series", "sets"):
            for k, v in d[section].items():
                lines.append(f"{section}.{k}: {_fmt(v)}")
        for k, v in d["class"]["flags"].items():
            lines.append(f"class.{k}: {_fmt(v)}")
        for p, v in d["class"]["per_prime"].items():
            lines.append(f"class.p{p}: " + " ".join(f"{k}={_fmt(b)}" for k, b in v.items()))
        for tag, key in (("N", "full_graph"), ("reduced_N", "reduced_graph")):
            for k, v in d[key].items():
                lines.append(f"{tag}.{k}: {_fmt(v)}")
        for k, v in d.get("timings", {}).items():
            lines.append(f"timing.{k}: {v}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(str(x) for x in v) if v else "-"
    return str(v)


def analyze(G: FiniteGroup, clique_budget: int = DEFAULT_CLIQUE_BUDGET,
            with_timings: bool = False) -> GroupReport:
    return GroupAnalysis(G, clique_budget).report(with_timings)


def quotient_is_s3(Q: FiniteGroup) -> bool:
    """Order 6 and non-abelian: the only such group is S3."""
    return Q.order == 6 and not Q.is_abelian()


def quotient_is_a5(Q: FiniteGroup) -> bool:
    """Order 60 and simple: the only such group is A5."""
    return Q.order == 60 and is_simple(Q)
