"""Builtin group families: cyclic, dihedral, symmetric, alternating,
dicyclic (Q8 and the order-12 group T), PSL(2, q) and direct products."""

from __future__ import annotations

import re
from itertools import product

import numpy as np

from .errors import CapExceeded, UnknownFamily
from .groups import DEFAULT_CAP, FiniteGroup, from_cayley_table, from_permutation_generators

PSL_FIELDS = (4, 5, 7, 8, 9, 11, 13)
MAX_SYM_DEGREE = 6

# (characteristic, degree, monic irreducible coefficients low->high without leading 1)
_IRREDUCIBLE = {
    4: (2, 2, (1, 1)),       # x^2 + x + 1
    8: (2, 3, (1, 1, 0)),    # x^3 + x + 1
    9: (3, 2, (1, 0)),       # x^2 + 1
}


class SmallField:
    """GF(q) for the few q PSL(2, q) needs, as explicit add/mul tables.

    Elements are integers ``0..q-1``; for prime powers an element encodes its
    polynomial coefficients in base ``p``.
    """

    def __init__(self, q: int):
        self.q = q
        if q in _IRREDUCIBLE:
            p, k, low = _IRREDUCIBLE[q]
        else:
            p, k, low = q, 1, ()
            if any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
                raise UnknownFamily(f"no field table for q={q}")
        self.p, self.k = p, k
        digits = [self._digits(a) for a in range(q)]
        self.add = np.array([[self._encode([(x + y) % p for x, y in zip(da, db)])
                              for db in digits] for da in digits], dtype=np.int64)
        self.mul = np.array([[self._encode(self._polymul(da, db, low)) for db in digits]
                             for da in digits], dtype=np.int64)
        self.neg = np.array([self._encode([(-x) % p for x in d]) for d in digits], dtype=np.int64)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _polymul(self, a, b, low) -> list[int]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce using x^k = -(low)
        for deg in range(len(prod) - 1, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, l in enumerate(low):
                    prod[deg - k + i] = (prod[deg - k + i] - c * l) % p
        return prod[:k]


def _cycle(n: int) -> tuple[int, ...]:
    return tuple(list(range(1, n)) + [0])


def cyclic_group(n: int) -> FiniteGroup:
    gens = [_cycle(n)] if n > 1 else []
    return from_permutation_generators(gens, degree=n, source=f"builtin C{n}", name=f"C{n}")


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given order (acting on order/2 points)."""
    if order % 2 or order < 2:
        raise UnknownFamily(f"dihedral groups have even order, got D{order}")
    n = order // 2
    name = f"D{order}"
    if n <= 2:
        # D2 = C2 and D4 = C2 x C2, the latter acting on 4 points
        if n == 1:
            return from_permutation_generators([(1, 0)], source=f"builtin {name}", name=name)
        return from_permutation_generators([(1, 0, 2, 3), (0, 1, 3, 2)], source=f"builtin {name}",
                                           name=name)
    rot = _cycle(n)
    ref = tuple((-i) % n for i in range(n))
    return from_permutation_generators([rot, ref], source=f"builtin {name}", name=name)


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n > MAX_SYM_DEGREE:
        raise CapExceeded(f"S{n} exceeds the supported degree {MAX_SYM_DEGREE}")
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        gens.append(_cycle(n))
    return from_permutation_generators(gens, cap=cap, degree=n, source=f"builtin S{n}",
                                       name=f"S{n}")


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n > MAX_SYM_DEGREE:
        raise CapExceeded(f"A{n} exceeds the supported degree {MAX_SYM_DEGREE}")
    gens = []
    for k in range(2, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0  # (1 2 k+1)
        gens.append(tuple(img))
    return from_permutation_generators(gens, cap=cap, degree=max(n, 1), source=f"builtin A{n}",
                                       name=f"A{n}")


def dicyclic_group(m: int, name: str | None = None) -> FiniteGroup:
    """<x, y | x^(2m) = 1, y^2 = x^m, y^-1 x y = x^-1>, order 4m.

    m = 2 gives Q8; m = 3 gives the order-12 group T.
    Elements are x^a y^b with 0 <= a < 2m, b in {0, 1}.
    """
    n2 = 2 * m
    elems = [(a, b) for b in (0, 1) for a in range(n2)]
    index = {e: i for i, e in enumerate(elems)}

    def mult(u, v):
        a, b = u
        c, d = v
        # y x^c = x^-c y
        a2 = (a + (c if b == 0 else -c)) % n2
        b2 = b + d
        if b2 == 2:
            a2, b2 = (a2 + m) % n2, 0
        return (a2, b2)

    rows = [[index[mult(u, v)] for v in elems] for u in elems]

    def lab(a, b):
        parts = []
        if a:
            parts.append("x" if a == 1 else f"x^{a}")
        if b:
            parts.append("y")
        return "".join(parts) or "1"

    name = name or f"Dic{m}"
    g = from_cayley_table(rows, labels=[lab(a, b) for a, b in elems], source=f"builtin {name}",
                          name=name)
    return g


def psl2(q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """PSL(2, q) as the permutation group SL(2, q) induces on the projective line.

    Points ``(x : 1)`` are numbered ``x + 1`` and ``(1 : 0)`` is point ``q + 1``.
    """
    if q not in PSL_FIELDS:
        raise UnknownFamily(f"PSL(2,{q}) is not supported (q must be one of {PSL_FIELDS})")
    F = SmallField(q)
    points = [(x, 1) for x in range(q)] + [(1, 0)]

    def normalize(v):
        x, y = v
        if y != 0:
            yinv = next(t for t in range(1, q) if F.mul[y, t] == 1)
            return (int(F.mul[x, yinv]), 1)
        return (1, 0)

    pindex = {pt: i for i, pt in enumerate(points)}

    def action(M):
        (a, b), (c, d) = M
        img = []
        for x, y in points:
            # row vector (x, y) times M
            nx = F.add[F.mul[x, a], F.mul[y, c]]
            ny = F.add[F.mul[x, b], F.mul[y, d]]
            img.append(pindex[normalize((int(nx), int(ny)))])
        return tuple(img)

    gens = []
    for t in range(1, q):
        gens.append(action(((1, t), (0, 1))))
        gens.append(action(((1, 0), (t, 1))))
    name = f"PSL(2,{q})"
    return from_permutation_generators(sorted(set(gens)), cap=cap, degree=q + 1,
                                       source=f"builtin {name}", name=name)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G x H with element (g, h) at index g*|H| + h."""
    n, m = G.order, H.order
    gi = np.repeat(np.arange(n), m)
    hi = np.tile(np.arange(m), n)
    mul = G.mul[gi[:, None], gi[None, :]] * m + H.mul[hi[:, None], hi[None, :]]
    inv = G.inv[gi] * m + H.inv[hi]
    labels = [f"({G.labels[a]}, {H.labels[b]})" for a, b in product(range(n), range(m))]
    name = name or f"{G.name}x{H.name}"
    return FiniteGroup(mul, G.identity * m + H.identity, inv, labels, source=f"builtin {name}",
                       name=name)


_NAME_RE = re.compile(r"^([CDSA])_?\{?(\d+)\}?$")
_PSL_RE = re.compile(r"^PSL\(?2,\s*(\d+)\)?$", re.IGNORECASE)


def builtin(name: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from a family name such as ``S4``, ``D12``, ``PSL(2,7)`` or ``S3xC2``."""
    key = name.strip().replace(" ", "")
    factors = [f for f in re.split(r"[x×*]", key) if f] if not _PSL_RE.match(key) else [key]
    if len(factors) > 1:
        groups = [builtin(f, cap) for f in factors]
        total = int(np.prod([g.order for g in groups]))
        if total > cap:
            raise CapExceeded(f"{name} has order {total} > {cap}")
        out = groups[0]
        for g in groups[1:]:
            out = direct_product(out, g)
        return out
    return _single(key, cap)


def _single(key: str, cap: int) -> FiniteGroup:
    if key in ("Q8", "Q_8"):
        return dicyclic_group(2, name="Q8")
    if key == "T":
        return dicyclic_group(3, name="T")
    m = _PSL_RE.match(key)
    if m:
        return psl2(int(m.group(1)), cap)
    m = _NAME_RE.match(key)
    if not m:
        raise UnknownFamily(f"unknown group family {key!r}")
    fam, n = m.group(1), int(m.group(2))
    if n < 1:
        raise UnknownFamily(f"bad parameter in {key!r}")
    if fam == "C":
        if n > cap:
            raise CapExceeded(f"C{n} exceeds cap {cap}")
        return cyclic_group(n)
    if fam == "D":
        if n > cap:
            raise CapExceeded(f"D{n} exceeds cap {cap}")
        return dihedral_group(n)
    if fam == "S":
        return symmetric_group(n, cap)
    return alternating_group(n, cap)


BUILTIN_FAMILIES = [
    "C<n>", "D<2n>", "S<n> (n<=6)", "A<n> (n<=6)", "Q8", "T",
    "PSL(2,q) for q in " + ",".join(map(str, PSL_FIELDS)), "<G>x<H>",
]
