"""Concrete finite groups stored as dense multiplication tables.

Elements are the indices ``0..n-1``.  Every derived quantity (orders,
commutators, conjugates, cyclic subgroups) is computed once from the table
and cached on the group, so a :class:`FiniteGroup` is safe to share once
built.
"""

from __future__ import annotations

import re
from collections import deque
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapExceeded, MalformedTable, NotAGroup, NotASubgroup

DEFAULT_CAP = 100_000


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


class ElementSet:
    """A subset of a finite group, held as a boolean mask over element indices."""

    __slots__ = ("group", "mask", "_hash")

    def __init__(self, group: "FiniteGroup", mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (group.order,):
            raise ValueError(f"mask has shape {mask.shape}, expected ({group.order},)")
        if mask.flags.writeable:
            mask = mask.copy()
            mask.flags.writeable = False
        self.group = group
        self.mask = mask
        self._hash = None

    @classmethod
    def of(cls, group: "FiniteGroup", elements: Iterable[int]) -> "ElementSet":
        mask = np.zeros(group.order, dtype=bool)
        idx = np.fromiter((int(e) for e in elements), dtype=np.int64)
        if idx.size:
            if idx.min() < 0 or idx.max() >= group.order:
                raise IndexError("element index out of range")
            mask[idx] = True
        return cls(group, mask)

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def labels(self) -> list[str]:
        return [self.group.labels[i] for i in self.indices]

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self) -> Iterator[int]:
        return iter(int(i) for i in self.indices)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def _check(self, other: "ElementSet") -> None:
        if other.group is not self.group:
            raise ValueError("element sets belong to different groups")

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.group, self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.group, self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.group, self.mask & ~other.mask)

    def __le__(self, other: "ElementSet") -> bool:
        self._check(other)
        return not bool((self.mask & ~other.mask).any())

    def __ge__(self, other: "ElementSet") -> bool:
        return other <= self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return other.group is self.group and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.mask.tobytes())
        return self._hash

    def __repr__(self) -> str:
        shown = ", ".join(self.labels()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"ElementSet({len(self)}: {{{shown}{more}}})"


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``mul[a, b]`` is the index of the product ``a*b``.  Construction does not
    validate the table; use :func:`from_cayley_table` for untrusted input or
    call :meth:`validate`.
    """

    def __init__(self, mul, identity: int, inv, labels: Sequence[str], source: str,
                 name: str | None = None):
        mul = np.array(mul, dtype=np.int32)
        inv = np.array(inv, dtype=np.int32)
        mul.flags.writeable = False
        inv.flags.writeable = False
        self.mul = mul
        self.inv = inv
        self.identity = int(identity)
        self.labels = list(labels)
        self.source = source
        self.name = name or source
        self._pair_closures: dict[tuple[int, int], np.ndarray] = {}
        self._pair_nilpotent: dict[tuple[int, int], bool] = {}
        # derived analyses (nilpotentizer tables etc.) keyed by name
        self.cache: dict[str, object] = {}

    @property
    def order(self) -> int:
        return len(self.inv)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def validate(self) -> None:
        """Exhaustively check associativity, identity, inverses and labels."""
        n, mul = self.order, self.mul
        ar = np.arange(n)
        if not (np.array_equal(mul[self.identity], ar) and np.array_equal(mul[:, self.identity], ar)):
            raise NotAGroup("declared identity is not a two-sided identity")
        if not (np.all(mul[ar, self.inv] == self.identity) and np.all(mul[self.inv, ar] == self.identity)):
            raise NotAGroup("inverse table is not a two-sided inverse")
        for a in range(n):
            # (a*b)*c == a*(b*c) for all b, c
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise NotAGroup(f"multiplication is not associative at a={a}")
        if len(set(self.labels)) != n:
            raise NotAGroup("labels are not unique")

    # -- element arithmetic -------------------------------------------------

    def product(self, *xs: int) -> int:
        r = self.identity
        for x in xs:
            r = int(self.mul[r, x])
        return r

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        r, base = self.identity, int(x)
        while k:
            if k & 1:
                r = int(self.mul[r, base])
            base = int(self.mul[base, base])
            k >>= 1
        return r

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        return int(self.comm[a, b])

    def conjugate(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return int(self.conj[x, g])

    def index_of(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        ar = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        cur = ar.copy()
        for k in range(1, n + 1):
            hit = (cur == self.identity) & (out == 0)
            out[hit] = k
            if out.all():
                break
            cur = self.mul[cur, ar]
        out.flags.writeable = False
        return out

    def element_order(self, x: int) -> int:
        return int(self.orders[x])

    def pi_of(self, x: int) -> set[int]:
        """Primes dividing the order of ``x``."""
        return set(prime_factors(self.element_order(x)))

    @cached_property
    def primes(self) -> list[int]:
        return prime_factors(self.order)

    def p_elements(self, p: int) -> np.ndarray:
        """Mask of elements whose order is a power of ``p`` (identity included)."""
        o = self.orders.copy()
        while True:
            div = (o % p == 0)
            if not div.any():
                break
            o[div] //= p
        return o == 1

    @cached_property
    def comm(self) -> np.ndarray:
        """comm[a, b] = [a, b]."""
        a_inv_b_inv = self.mul[self.inv[:, None], self.inv[None, :]]
        c = self.mul[a_inv_b_inv, self.mul]
        c.flags.writeable = False
        return c

    @cached_property
    def conj(self) -> np.ndarray:
        """conj[x, g] = g^-1 x g."""
        g_inv_x = self.mul[self.inv[None, :], np.arange(self.order)[:, None]]
        c = self.mul[g_inv_x, np.arange(self.order)[None, :]]
        c.flags.writeable = False
        return c

    @cached_property
    def powers(self) -> list[np.ndarray]:
        """powers[x] = [x^0, x^1, ..., x^(|x|-1)]."""
        out = []
        for x in range(self.order):
            seq = [self.identity]
            for _ in range(self.element_order(x) - 1):
                seq.append(int(self.mul[seq[-1], x]))
            out.append(np.array(seq, dtype=np.int64))
        return out

    @cached_property
    def cyclic_ids(self) -> np.ndarray:
        """Smallest generator of <x>, used as a canonical key for the cyclic subgroup."""
        cid = np.full(self.order, -1, dtype=np.int64)
        for x in range(self.order):
            if cid[x] >= 0:
                continue
            pw = self.powers[x]
            m = len(pw)
            gens = [int(pw[k]) for k in range(1, m) if gcd(k, m) == 1] or [self.identity]
            key = min(gens)
            cid[gens] = key
        cid.flags.writeable = False
        return cid

    @cached_property
    def conjugacy_classes(self) -> list[np.ndarray]:
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            cls = np.unique(self.conj[x])
            seen[cls] = True
            classes.append(cls)
        return classes

    # -- sets and subgroups -------------------------------------------------

    def element_set(self, elements: Iterable[int] = ()) -> ElementSet:
        return ElementSet.of(self, elements)

    def whole(self) -> ElementSet:
        return ElementSet(self, np.ones(self.order, dtype=bool))

    def trivial(self) -> ElementSet:
        return ElementSet.of(self, [self.identity])

    def closure_mask(self, gens) -> np.ndarray:
        gens = np.unique(np.asarray(list(gens) if not isinstance(gens, np.ndarray) else gens,
                                    dtype=np.int64))
        seen = np.zeros(self.order, dtype=bool)
        seen[self.identity] = True
        if gens.size == 0:
            return seen
        frontier = np.array([self.identity])
        while frontier.size:
            new = self.mul[frontier[:, None], gens[None, :]].ravel()
            new = np.unique(new[~seen[new]])
            seen[new] = True
            frontier = new
        return seen

    def closure(self, S) -> ElementSet:
        """Smallest subgroup containing ``S`` (an ElementSet or iterable of indices)."""
        if isinstance(S, ElementSet):
            S = S.indices
        return ElementSet(self, self.closure_mask(S))

    def cyclic(self, x: int) -> ElementSet:
        return ElementSet.of(self, self.powers[x])

    def pair_closure(self, x: int, y: int) -> ElementSet:
        """<x, y>, memoized on the unordered pair of cyclic subgroups."""
        a, b = int(self.cyclic_ids[x]), int(self.cyclic_ids[y])
        key = (a, b) if a <= b else (b, a)
        mask = self._pair_closures.get(key)
        if mask is None:
            mask = self.closure_mask([x, y])
            mask.flags.writeable = False
            mask = self._pair_closures.setdefault(key, mask)
        return ElementSet(self, mask)

    def is_subgroup(self, S: ElementSet) -> bool:
        """Closed under multiplication and nonempty (finite, so a subgroup)."""
        idx = S.indices
        if idx.size == 0 or not S.mask[self.identity]:
            return False
        return bool(S.mask[self.mul[idx[:, None], idx[None, :]]].all())

    def require_subgroup(self, S: ElementSet) -> None:
        if not self.is_subgroup(S):
            raise NotASubgroup(f"{S!r} is not a subgroup of {self.name}")

    def centralizer(self, x: int) -> ElementSet:
        return ElementSet(self, self.mul[x] == self.mul[:, x])

    def center(self) -> ElementSet:
        return ElementSet(self, np.all(self.mul == self.mul.T, axis=1))

    def conjugates(self, x: int, within: ElementSet | None = None) -> np.ndarray:
        row = self.conj[x]
        if within is not None:
            row = row[within.indices]
        return np.unique(row)

    def normal_closure(self, x, within: ElementSet | None = None) -> ElementSet:
        """Closure of all conjugates of ``x`` (or of each element of a set) under ``within``."""
        xs = x.indices if isinstance(x, ElementSet) else np.array([int(x)])
        cols = within.indices if within is not None else np.arange(self.order)
        gens = np.unique(self.conj[xs[:, None], cols[None, :]])
        return ElementSet(self, self.closure_mask(gens))

    def is_normal(self, N: ElementSet, within: ElementSet | None = None) -> bool:
        cols = within.indices if within is not None else np.arange(self.order)
        return bool(N.mask[self.conj[N.indices[:, None], cols[None, :]]].all())

    def is_abelian(self, H: ElementSet | None = None) -> bool:
        if H is None:
            return bool(np.array_equal(self.mul, self.mul.T))
        self.require_subgroup(H)
        idx = H.indices
        block = self.mul[idx[:, None], idx[None, :]]
        return bool(np.array_equal(block, block.T))

    def subgroup_as_group(self, H: ElementSet, name: str | None = None) -> "FiniteGroup":
        """Re-index ``H`` as a standalone group; labels are inherited."""
        self.require_subgroup(H)
        idx = H.indices
        pos = np.full(self.order, -1, dtype=np.int64)
        pos[idx] = np.arange(idx.size)
        mul = pos[self.mul[idx[:, None], idx[None, :]]]
        inv = pos[self.inv[idx]]
        return FiniteGroup(mul, int(pos[self.identity]), inv, [self.labels[i] for i in idx],
                           source=self.source, name=name or f"subgroup of {self.name}")


# -- construction -----------------------------------------------------------

def from_cayley_table(rows, labels: Sequence[str] | None = None, source: str = "cayley-file",
                      name: str | None = None) -> FiniteGroup:
    """Validate a Cayley table and build the group it describes."""
    try:
        rows = [list(r) for r in rows]
    except TypeError as exc:
        raise MalformedTable("table rows are not sequences") from exc
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    if any(len(r) != n for r in rows):
        raise MalformedTable("table is not square")
    try:
        mul = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTable("table entries are not integers") from exc
    if mul.min() < 0 or mul.max() >= n:
        raise MalformedTable(f"entries must lie in 0..{n - 1}")
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    inv = np.empty(n, dtype=np.int64)
    for a in range(n):
        right = np.flatnonzero(mul[a] == e)
        if right.size == 0 or mul[right[0], a] != e:
            raise NotAGroup(f"element {a} has no two-sided inverse")
        inv[a] = right[0]
    if labels is None:
        labels = ["e" if i == e else str(i) for i in range(n)]
    labels = list(labels)
    if len(labels) != n:
        raise MalformedTable("label count does not match table size")
    g = FiniteGroup(mul, e, inv, labels, source=source, name=name)
    g.validate()
    return g


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse disjoint-cycle notation into a 0-based image tuple.

    Points are 1-based.  Points may be separated by spaces or commas; a cycle
    written without separators, such as ``(1324)``, is read one digit per point.
    """
    text = text.strip()
    if not text or text.replace(" ", "") == "":
        raise ValueError("empty permutation")
    residue = _CYCLE_RE.sub("", text).strip()
    if residue:
        raise ValueError(f"cannot parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            pts = [int(t) for t in re.split(r"[\s,]+", body) if t]
        else:
            pts = [int(ch) for ch in body]
        if len(set(pts)) != len(pts) or min(pts) < 1:
            raise ValueError(f"bad cycle {body!r}")
        cycles.append(pts)
    d = max([max(c) for c in cycles] + [degree or 0, 1])
    img = list(range(d))
    seen: set[int] = set()
    for c in cycles:
        if seen & set(c):
            raise ValueError("cycles are not disjoint")
        seen |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def cycle_label(perm: Sequence[int]) -> str:
    """Disjoint-cycle notation with 1-based points; ``()`` for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(str(i + 1))
            i = perm[i]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def normalize_cycle_label(text: str) -> str:
    return cycle_label(parse_cycles(text))


def from_permutation_generators(gens: Sequence[Sequence[int]], cap: int = DEFAULT_CAP,
                                degree: int | None = None, source: str = "permutation",
                                name: str | None = None) -> FiniteGroup:
    """Enumerate the group generated by permutations (0-based image tuples).

    Products compose left to right: ``(a*b)(i) = b(a(i))``.
    """
    d = max([len(g) for g in gens] + [degree or 0, 1])
    gens = [tuple(g) + tuple(range(len(g), d)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(d)):
            raise ValueError(f"generator {g} is not a bijection")
    ident = tuple(range(d))
    index = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = tuple(g[i] for i in a)
            if b not in index:
                if len(elems) >= cap:
                    raise CapExceeded(f"more than {cap} elements generated")
                index[b] = len(elems)
                elems.append(b)
                queue.append(b)
    P = np.array(elems, dtype=np.int64)
    n = len(elems)
    if d ** d < 2 ** 62:
        weights = d ** np.arange(d, dtype=np.int64)
        keys = P @ weights
        order = np.argsort(keys)
        sorted_keys = keys[order]

        def lookup(rows: np.ndarray) -> np.ndarray:
            return order[np.searchsorted(sorted_keys, rows @ weights)]
    else:
        def lookup(rows: np.ndarray) -> np.ndarray:
            return np.array([index[tuple(r)] for r in rows.tolist()], dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # row i, column j: (a_i * a_j)(k) = a_j(a_i(k))
        mul[i] = lookup(P[:, P[i]])
    inv = np.empty(n, dtype=np.int64)
    inv[np.arange(n)] = np.argmax(mul == 0, axis=1)
    labels = [cycle_label(p) for p in elems]
    return FiniteGroup(mul, 0, inv, labels, source=source, name=name)


def read_cayley_file(path) -> FiniteGroup:
    """Read a Cayley table file.

    Format: first line ``n``; then ``n`` rows of ``n`` zero-based indices;
    optionally lines ``label i <string>``.
    """
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedTable("empty file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise MalformedTable("first line must be the group order") from exc
    if n < 1 or len(lines) < n + 1:
        raise MalformedTable("fewer rows than declared order")
    try:
        rows = [[int(t) for t in ln.split()] for ln in lines[1:n + 1]]
    except ValueError as exc:
        raise MalformedTable("non-integer table entry") from exc
    labels: list[str] | None = None
    extra = lines[n + 1:]
    if extra:
        labels = [str(i) for i in range(n)]
        for ln in extra:
            parts = ln.split(None, 2)
            if len(parts) != 3 or parts[0] != "label":
                raise MalformedTable(f"unexpected line {ln!r}")
            labels[int(parts[1])] = parts[2]
    return from_cayley_table(rows, labels=labels, source="cayley-file", name=str(path))


def read_permutation_file(path, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Read generators, one per line, in disjoint-cycle notation."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    perms = [parse_cycles(ln) for ln in lines]
    d = max([len(p) for p in perms] + [1])
    return from_permutation_generators(perms, cap=cap, degree=d, source="permutation",
                                       name=str(path))
