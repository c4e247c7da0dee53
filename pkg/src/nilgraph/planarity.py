"""Exact planarity testing by path addition (Demoucron-Malgrange-Pertuiset).

Each biconnected block is embedded starting from a cycle; fragments of the
rest of the block are added one path at a time into a face that contains all
of the fragment's attachment vertices.  A fragment with no such face proves
the block non-planar.
"""

from __future__ import annotations

from collections import deque


def _blocks(adj: list[set[int]]) -> list[set[tuple[int, int]]]:
    """Biconnected components as edge sets (iterative Hopcroft-Tarjan)."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    blocks = []
    t = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(adj[root])))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = set()
                    while True:
                        e = estack.pop()
                        block.add((min(e), max(e)))
                        if e == (parent, v):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = next(iter(adj))
    parent = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w == parent[v]:
                continue
            if w in parent:
                # w is an ancestor-side vertex already seen: walk both to the root
                path_v, path_w = [v], [w]
                while path_v[-1] is not None:
                    path_v.append(parent[path_v[-1]])
                while path_w[-1] is not None:
                    path_w.append(parent[path_w[-1]])
                path_v.pop()
                path_w.pop()
                common = set(path_v) & set(path_w)
                cv = [u for u in path_v if u not in common]
                cw = [u for u in path_w if u not in common]
                meet = next(u for u in path_v if u in common)
                return cv + [meet] + cw[::-1]
            parent[w] = v
            stack.append(w)
    raise ValueError("graph has no cycle")


def _block_is_planar(edges: set[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    nv, ne = len(adj), len(edges)
    if ne <= 2 or nv <= 4:
        return True
    if ne > 3 * nv - 6:
        return False
    cycle = _find_cycle(adj)
    emb_v = set(cycle)
    emb_e = {(min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
    faces = [list(cycle), list(cycle)]
    while len(emb_e) < ne:
        fragments = _fragments(adj, emb_v, emb_e)
        choice = None
        for frag in fragments:
            att = frag[0]
            ok = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) == 1:
                choice = (frag, ok[0])
                if len(ok) == 1:
                    break
        frag, fi = choice
        path = _fragment_path(adj, emb_v, frag)
        face = faces.pop(fi)
        faces.extend(_split_face(face, path))
        emb_v.update(path)
        emb_e.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    return True


def _fragments(adj, emb_v, emb_e):
    """Fragments as (attachments, interior vertices, chord edge or None)."""
    out = []
    for a in emb_v:
        for b in adj[a]:
            if b in emb_v and a < b and (a, b) not in emb_e:
                out.append(({a, b}, set(), (a, b)))
    seen: set[int] = set()
    for s in adj:
        if s in emb_v or s in seen:
            continue
        comp, att = {s}, set()
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in emb_v:
                    att.add(w)
                elif w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append((att, comp, None))
    return out


def _fragment_path(adj, emb_v, frag) -> list[int]:
    att, comp, chord = frag
    if chord is not None:
        return list(chord)
    a = min(att)
    starts = [w for w in adj[a] if w in comp]
    parent = {w: a for w in starts}
    queue = deque(starts)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in emb_v and w != a:
                path = [w, v]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if w in comp and w not in parent:
                parent[w] = v
                queue.append(w)
    raise AssertionError("fragment of a biconnected block has a single attachment")


def _split_face(face: list[int], path: list[int]) -> list[list[int]]:
    a, b = path[0], path[-1]
    i, j = face.index(a), face.index(b)
    k = len(face)
    # walk face from a to b and from b to a
    ab = [face[(i + s) % k] for s in range((j - i) % k + 1)]
    ba = [face[(j + s) % k] for s in range((i - j) % k + 1)]
    inner = path[1:-1]
    return [ab + inner[::-1], ba + inner]


def is_planar_adjacency(adj: list[set[int]]) -> bool:
    """Exact planarity of an undirected simple graph given as neighbour sets."""
    n = len(adj)
    m = sum(len(s) for s in adj) // 2
    if n >= 3 and m > 3 * n - 6:
        return False
    return all(_block_is_planar(block) for block in _blocks(adj))
