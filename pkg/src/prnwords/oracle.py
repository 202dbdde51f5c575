"""Brute-force ground truth for small graphs.

Exhaustive searches over permutation tuples and chord diagrams, plus the
supporting graph utilities (isomorphism, induced subgraphs, local
complementation, transitive orientations).  Everything here refuses inputs
beyond configured size bounds instead of silently truncating.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace

import numpy as np

from .graphcore import (
    Graph,
    InvalidArgument,
    PermSequence,
    concat,
    represents,
    sort_tokens,
    token_key,
)

BOUNDS_ENV = "PRNWORDS_BOUNDS"


class BoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    """Size limits for the exhaustive searches.

    ``prn1``..``prn3`` cap the vertex count for permutation-tuple search with
    that many permutations, ``prn_more`` for four or more.  Override from the
    environment with e.g. ``PRNWORDS_BOUNDS="prn2=7,circle=7"``.
    """

    prn1: int = 10
    prn2: int = 8
    prn3: int = 6
    prn_more: int = 4
    circle: int = 8
    iso: int = 24
    canon: int = 10
    orient: int = 20
    induced: int = 2000
    probe: int = 7

    def max_vertices(self, k: int) -> int:
        return {1: self.prn1, 2: self.prn2, 3: self.prn3}.get(k, self.prn_more)

    @classmethod
    def from_env(cls, environ=None) -> "SearchBounds":
        text = (environ if environ is not None else os.environ).get(BOUNDS_ENV, "")
        return cls().updated(text)

    def updated(self, text: str) -> "SearchBounds":
        known = {f.name for f in fields(self)}
        changes = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in known:
                raise InvalidArgument(f"unknown bound {key!r}; expected one of {sorted(known)}")
            try:
                number = int(value)
            except ValueError:
                raise InvalidArgument(f"bound {key} needs an integer, got {value!r}") from None
            if number < 1:
                raise InvalidArgument(f"bound {key} must be positive")
            changes[key] = number
        return replace(self, **changes)


DEFAULT_BOUNDS = SearchBounds()


@dataclass(frozen=True)
class ChordDiagram:
    """Labelled chords on circle positions 0..2n-1, one chord per label."""

    chords: tuple  # of (label, i, j) with i < j

    def __post_init__(self):
        labels = [c[0] for c in self.chords]
        points = sorted(p for c in self.chords for p in c[1:])
        if len(set(labels)) != len(labels):
            raise InvalidArgument("chord labels must be distinct")
        if points != list(range(2 * len(self.chords))):
            raise InvalidArgument("chord endpoints must cover 0..2n-1 exactly once")
        normal = tuple(sorted(((l, min(i, j), max(i, j)) for l, i, j in self.chords), key=lambda c: c[1]))
        object.__setattr__(self, "chords", normal)

    @classmethod
    def from_pairs(cls, pairs: dict) -> "ChordDiagram":
        return cls(tuple((label, i, j) for label, (i, j) in pairs.items()))

    @classmethod
    def from_word(cls, w) -> "ChordDiagram":
        """Each letter of a 2-uniform word becomes the chord joining its two positions."""
        occ: dict = {}
        for pos, x in enumerate(w):
            occ.setdefault(x, []).append(pos)
        if any(len(p) != 2 for p in occ.values()):
            raise InvalidArgument("chord diagrams come from 2-uniform words only")
        return cls(tuple((x, p[0], p[1]) for x, p in occ.items()))

    def to_word(self) -> tuple:
        w = [None] * (2 * len(self.chords))
        for label, i, j in self.chords:
            w[i] = w[j] = label
        return tuple(w)

    def as_dict(self) -> dict:
        return {label: [i, j] for label, i, j in self.chords}


@dataclass
class SearchOutcome:
    found: bool
    witness: object = None
    states_examined: int = 0
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)


def _check_size(n: int, limit: int, what: str):
    if n > limit:
        raise BoundExceeded(
            f"{what}: {n} vertices exceeds the configured limit of {limit} "
            f"(raise it via {BOUNDS_ENV} if you really mean it)"
        )


# --- permutation-tuple search ------------------------------------------------

def _pair_index(n: int):
    iu, ju = np.triu_indices(n, k=1)
    return iu, ju


def _order_masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of range(n) in lexicographic order, and their order masks.

    Bit t of a mask is set when the t-th pair (i < j) appears as "i before j".
    """
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    pos = np.argsort(perms, axis=1)
    iu, ju = _pair_index(n)
    before = pos[:, iu] < pos[:, ju]
    weights = np.left_shift(np.int64(1), np.arange(len(iu), dtype=np.int64))
    masks = (before.astype(np.int64) * weights).sum(axis=1) if len(iu) else np.zeros(len(perms), np.int64)
    return perms, masks


def _edge_mask(g: Graph, order: list[str]) -> int:
    iu, ju = _pair_index(len(order))
    mask = 0
    for t, (i, j) in enumerate(zip(iu, ju)):
        if g.has_edge(order[i], order[j]):
            mask |= 1 << t
    return mask


def _scan_range(masks, full, targets, k, leads, pinned=False, block=64):
    """First hit, as an index into the lexicographic tuple enumeration.

    ``leads`` are the leading permutation indices to scan.  When ``pinned``
    the leading permutation is fixed and only the k-1 others are counted in
    the returned index.  The derived edge mask of a tuple is the set of
    pairs whose order agrees in every permutation.
    """
    n_perm = len(masks)
    single = len(targets) == 1
    tv = np.array(sorted(targets), dtype=np.int64)

    def hits(arr):
        return arr == tv[0] if single else np.isin(arr, tv)

    if k == 2:
        leads = np.asarray(leads, dtype=np.int64)
        for b in range(0, len(leads), block):
            rows = leads[b:b + block]
            h = hits(~(masks[rows][:, None] ^ masks[None, :]) & full)
            if h.any():
                r, c = np.argwhere(h)[0]
                return (0 if pinned else int(rows[r])) * n_perm + int(c)
        return None
    for lead in leads:
        eq = ~(masks[lead] ^ masks) & full
        for mid in itertools.product(range(n_perm), repeat=k - 3):
            acc = full
            for i in mid:
                acc &= eq[i]
            h = hits((eq[:, None] & eq[None, :]) & acc)
            if h.any():
                r, c = np.argwhere(h)[0]
                idx = 0 if pinned else int(lead)
                for i in mid:
                    idx = idx * n_perm + i
                return (idx * n_perm + int(r)) * n_perm + int(c)
    return None


def _decode(index: int, k: int, n_perm: int) -> list[int]:
    out = []
    for _ in range(k):
        index, r = divmod(index, n_perm)
        out.append(r)
    return out[::-1]


_MASK_CACHE: dict = {}


def _cached_masks(n: int):
    if n not in _MASK_CACHE:
        perms, masks = _order_masks(n)
        _MASK_CACHE[n] = (perms, masks, np.int64((1 << (n * (n - 1) // 2)) - 1))
    return _MASK_CACHE[n]


def _scan_worker(args):
    n, k, targets, start, stop = args
    _, masks, full = _cached_masks(n)
    return _scan_range(masks, full, targets, k, range(start, stop))


def _parallel_scan(n, k, targets, workers):
    _, masks, full = _cached_masks(n)
    n_perm = len(masks)
    if workers <= 1:
        return _scan_range(masks, full, targets, k, range(n_perm))
    # contiguous slices of the leading index; the reducer keeps the smallest hit
    step = math.ceil(n_perm / (workers * 4))
    jobs = [(n, k, targets, s, min(n_perm, s + step)) for s in range(0, n_perm, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        found = [h for h in pool.map(_scan_worker, jobs) if h is not None]
    return min(found) if found else None


def prn_search(
    g: Graph,
    k: int,
    bounds: SearchBounds | None = None,
    canonical: bool = False,
    workers: int = 1,
) -> SearchOutcome:
    """Look for k permutations of V(g) whose concatenation represents g.

    Tuples are enumerated in lexicographic order of permutation indices and
    the first representing tuple is returned, so the witness and
    ``states_examined`` do not depend on ``workers``.  With ``canonical``
    the first permutation is pinned to the sorted vertex order and the
    derived graph is matched against every relabelling of g instead.
    """
    if k < 1:
        raise InvalidArgument("need at least one permutation")
    bounds = bounds or DEFAULT_BOUNDS
    order = g.sorted_vertices()
    n = len(order)
    if n == 0:
        raise InvalidArgument("graph has no vertices")
    _check_size(n, bounds.max_vertices(k), f"prn_search with k={k}")
    t0 = time.perf_counter()
    perms, masks, full = _cached_masks(n)
    n_perm = len(perms)
    target = _edge_mask(g, order)

    relabel_of = {}
    if canonical:
        iu, ju = _pair_index(n)
        bit = {(int(i), int(j)): 1 << t for t, (i, j) in enumerate(zip(iu, ju))}
        edge_pairs = [p for p in bit if target & bit[p]]
        for sigma in perms.tolist():
            m = 0
            for i, j in edge_pairs:
                m |= bit[(min(sigma[i], sigma[j]), max(sigma[i], sigma[j]))]
            relabel_of.setdefault(m, sigma)
        targets = set(relabel_of)
    else:
        targets = {target}

    if k == 1:
        hit = 0 if int(full) in targets else None
        total = 1 if canonical else n_perm
    elif canonical:
        hit = _scan_range(masks, full, targets, k, [0], pinned=True)
        total = n_perm ** (k - 1)
    else:
        hit = _parallel_scan(n, k, targets, workers)
        total = n_perm ** k

    outcome = SearchOutcome(found=hit is not None, states_examined=total if hit is None else hit + 1)
    if hit is not None:
        if canonical:
            chosen = [0] + (_decode(hit, k - 1, n_perm) if k > 1 else [])
            chosen = chosen[:k]
        else:
            chosen = _decode(hit, k, n_perm)
        rows = [perms[i].tolist() for i in chosen]
        if canonical:
            derived = int(full)
            for i in chosen[1:]:
                derived &= ~(int(masks[chosen[0]]) ^ int(masks[i])) & int(full)
            sigma = relabel_of[derived]
            inverse = {s: v for v, s in enumerate(sigma)}
            rows = [[inverse[x] for x in row] for row in rows]
        witness = [tuple(order[v] for v in row) for row in rows]
        if not represents(concat(witness), g):
            raise AssertionError("prn_search produced a witness that fails verification")
        outcome.witness = witness
    outcome.elapsed_ms = (time.perf_counter() - t0) * 1000
    outcome.details = {"k": k, "n": n, "canonical": canonical}
    return outcome


def all_perm_representations(g: Graph, k: int = 2, bounds: SearchBounds | None = None) -> list[PermSequence]:
    """Every k-tuple of permutations representing g, in enumeration order."""
    bounds = bounds or DEFAULT_BOUNDS
    order = g.sorted_vertices()
    n = len(order)
    _check_size(n, bounds.max_vertices(k), "all_perm_representations")
    if k != 2:
        raise InvalidArgument("only pairs are enumerated")
    perms, masks, full = _cached_masks(n)
    target = _edge_mask(g, order)
    agree = ~(masks[:, None] ^ masks[None, :]) & full
    found = np.argwhere(agree == target)
    return [[tuple(order[v] for v in perms[i]), tuple(order[v] for v in perms[j])] for i, j in found]


def is_permutation_graph_small(g: Graph, bounds: SearchBounds | None = None) -> bool:
    bounds = bounds or DEFAULT_BOUNDS
    _check_size(g.n, bounds.prn2, "is_permutation_graph_small")
    return g.is_complete() or prn_search(g, 2, bounds).found


# --- chord diagrams ------------------------------------------------------------

def chord_intersection_graph(d: ChordDiagram) -> Graph:
    chords = d.chords
    edges = [
        (a[0], b[0])
        for a, b in itertools.combinations(chords, 2)
        if (a[1] < b[1] < a[2] < b[2]) or (b[1] < a[1] < b[2] < a[2])
    ]
    return Graph((c[0] for c in chords), edges)


def _matchings(n: int, first_partner: int | None = None):
    """All perfect matchings of 0..2n-1 as (rows, n) left/right arrays.

    The lowest free point is always matched next, so chord t has the t-th
    smallest left endpoint and row order equals depth-first order.
    """
    size = 2 * n
    bits = np.arange(size, dtype=np.int64)
    used = np.zeros(1, dtype=np.int64)
    left = np.zeros((1, 0), dtype=np.int8)
    right = np.zeros((1, 0), dtype=np.int8)
    for t in range(n):
        free = ((used[:, None] >> bits[None, :]) & 1) == 0
        idx = np.nonzero(free)[1].reshape(len(used), size - 2 * t)
        lo, partners = idx[:, 0], idx[:, 1:]
        if t == 0 and first_partner is not None:
            partners = partners[:, first_partner - 1:first_partner]
        c = partners.shape[1]
        rows = len(used)
        used = np.repeat(used, c) | (np.int64(1) << np.repeat(lo, c)) | (np.int64(1) << partners.ravel())
        left = np.concatenate([np.repeat(left, c, axis=0), np.repeat(lo, c)[:, None].astype(np.int8)], axis=1)
        right = np.concatenate([np.repeat(right, c, axis=0), partners.reshape(rows * c, 1).astype(np.int8)], axis=1)
    return left, right


def _double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2)) if m > 0 else 1


def _circle_chunk(g: Graph, n: int, first_partner: int, bounds: SearchBounds):
    """Smallest local index in the block whose diagram's intersection graph is ~ g."""
    left, right = _matchings(n, first_partner)
    iu, ju = _pair_index(n)
    # chord s opens before chord t (s < t): they cross iff t opens inside s and closes outside
    cross = (left[:, ju] < right[:, iu]) & (right[:, iu] < right[:, ju])
    degrees = np.zeros((len(left), n), dtype=np.int16)
    for t, (i, j) in enumerate(zip(iu, ju)):
        degrees[:, i] += cross[:, t]
        degrees[:, j] += cross[:, t]
    want = np.array(sorted(len(nb) for nb in g.adjacency().values()), dtype=np.int16)
    keep = np.flatnonzero((np.sort(degrees, axis=1) == want).all(axis=1))
    if len(keep) == 0:
        return None, len(left), 0
    weights = np.left_shift(np.int64(1), np.arange(len(iu), dtype=np.int64))
    codes = (cross[keep].astype(np.int64) * weights).sum(axis=1)
    uniq, first = np.unique(codes, return_index=True)
    candidates = 0
    best = None
    for pos in np.argsort(first):
        code = int(uniq[pos])
        h = Graph(map(str, range(n)), ((str(i), str(j)) for t, (i, j) in enumerate(zip(iu, ju)) if code >> t & 1))
        candidates += 1
        bij = isomorphic(h, g, bounds)
        if bij is not None:
            row = int(keep[first[pos]])
            best = (row, bij, left[row].tolist(), right[row].tolist())
            break
    return best, len(left), candidates


def circle_search(g: Graph, bounds: SearchBounds | None = None) -> SearchOutcome:
    """Search all chord diagrams on |V| chords for one whose intersection graph is g.

    Diagrams are enumerated as perfect matchings with position 0 matched first,
    block by block on the partner of position 0.  Degree multisets prune
    before any isomorphism test.
    """
    bounds = bounds or DEFAULT_BOUNDS
    n = g.n
    if n == 0:
        raise InvalidArgument("graph has no vertices")
    _check_size(n, bounds.circle, "circle_search")
    t0 = time.perf_counter()
    block = _double_factorial(2 * n - 3)
    examined = 0
    tested = 0
    outcome = SearchOutcome(found=False)
    for p in range(1, 2 * n):
        best, count, cand = _circle_chunk(g, n, p, bounds)
        tested += cand
        if best is not None:
            row, bij, lo, hi = best
            examined += row + 1
            diagram = ChordDiagram(tuple((bij[str(t)], lo[t], hi[t]) for t in range(n)))
            if isomorphic(chord_intersection_graph(diagram), g, bounds) is None:
                raise AssertionError("circle_search witness fails verification")
            outcome = SearchOutcome(found=True, witness=diagram)
            break
        examined += count
        assert count == block
    outcome.states_examined = examined
    outcome.details = {"isomorphism_tests": tested, "total_diagrams": _double_factorial(2 * n - 1)}
    outcome.elapsed_ms = (time.perf_counter() - t0) * 1000
    return outcome


# --- graph utilities -------------------------------------------------------------

def local_complement(g: Graph, v: str) -> Graph:
    """Complement the edges inside the neighbourhood of ``v``."""
    if v not in g.vertices:
        raise InvalidArgument(f"vertex {v!r} not in graph")
    nbrs = sort_tokens(g.neighbors(v))
    flip = {frozenset(p) for p in itertools.combinations(nbrs, 2)}
    return Graph(g.vertices, map(tuple, g.edges ^ flip))


def comparability_search(g: Graph, bounds: SearchBounds | None = None) -> SearchOutcome:
    """Backtrack over edge orientations until one is transitive.

    Orientations are tried edge by edge in sorted order, forward direction
    first; a branch dies as soon as two oriented arcs a->b->c lack a
    consistent a->c.  Equivalent to filtering all 2^|E| orientations.
    """
    bounds = bounds or DEFAULT_BOUNDS
    if g.m > bounds.orient:
        raise BoundExceeded(f"comparability search: {g.m} edges exceeds the limit of {bounds.orient}")
    t0 = time.perf_counter()
    edges = g.edge_list()
    succ: dict[str, set] = {v: set() for v in g.vertices}
    pred: dict[str, set] = {v: set() for v in g.vertices}
    nodes = 0

    def consistent(x, y):
        for w in pred[x]:
            if w == y or not g.has_edge(w, y) or w in succ[y]:
                return False
        for z in succ[y]:
            if z == x or not g.has_edge(x, z) or z in pred[x]:
                return False
        return True

    def place(i):
        nonlocal nodes
        nodes += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for x, y in ((u, v), (v, u)):
            if consistent(x, y):
                succ[x].add(y)
                pred[y].add(x)
                if place(i + 1):
                    return True
                succ[x].discard(y)
                pred[y].discard(x)
        return False

    found = place(0)
    arcs = sorted(((x, y) for x in succ for y in succ[x]), key=lambda a: tuple(map(token_key, a))) if found else None
    return SearchOutcome(found, arcs, nodes, (time.perf_counter() - t0) * 1000)


def is_comparability_small(g: Graph, bounds: SearchBounds | None = None):
    """A transitive orientation as a list of arcs, or None."""
    return comparability_search(g, bounds).witness


def is_transitive_orientation(g: Graph, arcs) -> bool:
    arcs = set(map(tuple, arcs))
    if {frozenset(a) for a in arcs} != set(g.edges) or len(arcs) != g.m:
        return False
    return all((a, c) in arcs for a, b in arcs for b2, c in arcs if b == b2)


def induced_subgraph(host: Graph, pattern: Graph, bounds: SearchBounds | None = None):
    """Injective map pattern -> host preserving edges and non-edges, or None."""
    bounds = bounds or DEFAULT_BOUNDS
    if host.n > bounds.induced:
        raise BoundExceeded(f"induced_subgraph: host has {host.n} vertices, limit {bounds.induced}")
    if pattern.n > host.n:
        return None
    hadj = host.adjacency()
    padj = pattern.adjacency()
    order = []
    remaining = set(pattern.vertices)
    while remaining:
        placed = set(order)
        v = min(remaining, key=lambda x: (-len(padj[x] & placed), -len(padj[x]), token_key(x)))
        order.append(v)
        remaining.discard(v)
    host_sorted = host.sorted_vertices()
    image: dict[str, str] = {}
    used: set[str] = set()

    def candidates(p):
        anchors = [image[q] for q in padj[p] if q in image]
        pool = sort_tokens(hadj[anchors[0]]) if anchors else host_sorted
        need = len(padj[p])
        for h in pool:
            if h in used or len(hadj[h]) < need:
                continue
            if all((image[q] in hadj[h]) == (q in padj[p]) for q in image):
                yield h

    def extend(i):
        if i == len(order):
            return True
        p = order[i]
        for h in candidates(p):
            image[p] = h
            used.add(h)
            if extend(i + 1):
                return True
            del image[p]
            used.discard(h)
        return False

    return dict(image) if extend(0) else None


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == count:
            return colors
        count = len(rank)


def canonical_form(g: Graph, bounds: SearchBounds | None = None):
    """(code, ordering): the minimum adjacency code over refined vertex orderings.

    Individualisation-refinement search: colour refinement, then branch on
    every vertex of the first non-singleton cell, skipping vertices that are
    twins of one already tried (swapping twins is an automorphism).
    """
    bounds = bounds or DEFAULT_BOUNDS
    _check_size(g.n, bounds.canon, "canonical_form")
    verts = g.sorted_vertices()
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    adj = g.adjacency()
    nbrs = [sorted(idx[u] for u in adj[v]) for v in verts]
    nset = [set(x) for x in nbrs]
    best = [None, None]

    def code_of(order):
        bits = 0
        for a in range(n):
            for b in range(a + 1, n):
                bits = (bits << 1) | (order[b] in nset[order[a]])
        return bits

    def search(colors):
        colors = _refine(nbrs, colors)
        if len(set(colors)) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            c = code_of(order)
            if best[0] is None or c > best[0]:
                best[0], best[1] = c, order
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        tried: list[int] = []
        for v in target:
            if any(nset[v] - {u} == nset[u] - {v} for u in tried):
                continue
            tried.append(v)
            search([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    search([0] * n)
    return (n, best[0]), [verts[i] for i in best[1]] if n else []


def isomorphic(g1: Graph, g2: Graph, bounds: SearchBounds | None = None):
    """A bijection V(g1) -> V(g2) that is an isomorphism, or None.

    Colour refinement runs on the disjoint union so colours are comparable
    across the two graphs; then a vertex of the first non-singleton cell of
    g1 is individualised against each same-coloured vertex of g2 in turn
    (twins in g2 are tried once).  Exhaustive, so None is a proof.
    """
    bounds = bounds or DEFAULT_BOUNDS
    _check_size(max(g1.n, g2.n), bounds.iso, "isomorphic")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adjacency().values())) != sorted(map(len, g2.adjacency().values())):
        return None
    v1, v2 = g1.sorted_vertices(), g2.sorted_vertices()
    n = len(v1)
    a1, a2 = g1.adjacency(), g2.adjacency()
    idx1 = {v: i for i, v in enumerate(v1)}
    idx2 = {v: n + i for i, v in enumerate(v2)}
    nbrs = [sorted(idx1[u] for u in a1[v]) for v in v1] + [sorted(idx2[u] for u in a2[v]) for v in v2]
    nset = [set(x) for x in nbrs]

    def balanced(colors):
        left = sorted(colors[:n])
        return left == sorted(colors[n:])

    def match(colors):
        colors = _refine(nbrs, colors)
        if not balanced(colors):
            return None
        if len(set(colors[:n])) == n:
            where = {c: i for i, c in enumerate(colors[n:])}
            return {v1[i]: v2[where[colors[i]]] for i in range(n)}
        cells: dict[int, list[int]] = {}
        for i in range(n):
            cells.setdefault(colors[i], []).append(i)
        c = next(c for c in sorted(cells) if len(cells[c]) > 1)
        x = cells[c][0]
        tried: list[int] = []
        for y in (j for j in range(n, 2 * n) if colors[j] == c):
            if any(nset[y] - {u} == nset[u] - {y} for u in tried):
                continue
            tried.append(y)
            split = [2 * col + (0 if i in (x, y) else 1) for i, col in enumerate(colors)]
            found = match(split)
            if found is not None:
                return found
        return None

    bij = match([0] * (2 * n))
    if bij is not None and g1.relabel(bij) != g2:
        raise AssertionError("isomorphism search returned a non-isomorphism")
    return bij


# --- conjecture probe -------------------------------------------------------------

@dataclass
class ProbeReport:
    verdict: str  # "consistent", "inconclusive" or "skipped"
    reason: str
    circle: bool | None = None
    comparability: bool | None = None
    complete: bool | None = None
    prn_upper: int | None = None
    witness: PermSequence | None = None
    searches: dict = field(default_factory=dict)


def conjecture_probe(g: Graph, bounds: SearchBounds | None = None) -> ProbeReport:
    """Check a small graph against "circle + comparability implies prn <= 3".

    Failing to find three permutations within the search bounds is reported
    as inconclusive, never as a counterexample.
    """
    bounds = bounds or DEFAULT_BOUNDS
    _check_size(g.n, bounds.probe, "conjecture_probe")
    searches = {}
    comp = comparability_search(g, bounds)
    searches["comparability"] = comp.states_examined
    one = prn_search(g, 1, bounds)
    searches["prn1"] = one.states_examined
    if one.found:
        return ProbeReport("skipped", "complete graph: representation number 1", complete=True,
                           comparability=comp.found, prn_upper=1, witness=one.witness, searches=searches)
    if not comp.found:
        return ProbeReport("skipped", "not a comparability graph", comparability=False, complete=False,
                           searches=searches)
    circ = circle_search(g, bounds)
    searches["circle"] = circ.states_examined
    if not circ.found:
        return ProbeReport("skipped", "not a circle graph (representation number above 2)", circle=False,
                           comparability=True, complete=False, searches=searches)
    report = ProbeReport("inconclusive", "", circle=True, comparability=True, complete=False, searches=searches)
    for k in (2, 3):
        if g.n > bounds.max_vertices(k):
            report.reason = f"{g.n} vertices exceeds the k={k} search bound {bounds.max_vertices(k)}"
            return report
        out = prn_search(g, k, bounds)
        searches[f"prn{k}"] = out.states_examined
        if out.found:
            report.verdict = "consistent"
            report.reason = f"found {k} permutations representing the graph"
            report.prn_upper = k
            report.witness = out.witness
            return report
    report.reason = "no 3-permutation representation within bounds"
    return report
