"""Three permutations representing any tree, and the tree prn classifier.

The tree is rooted, labelled by depth parity in breadth-first order (odd
labels on even depths), and then rewritten vertex by vertex: each visited
vertex splices its children into the three permutations at positions fixed
by its parity and by whether it is the smallest child of its parent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .families import spider_s
from .graphcore import (
    CertificateError,
    Graph,
    InvalidArgument,
    PermSequence,
    Word,
    concat,
    represents_permutationally,
    sort_tokens,
)
from .oracle import SearchBounds, induced_subgraph, prn_search


class NotATreeError(InvalidArgument):
    pass


@dataclass(frozen=True)
class RootedLabeledTree:
    graph: Graph
    root: str
    label: dict  # token -> int
    token: dict  # int -> token
    children: dict  # label -> sorted list of child labels
    parent: dict  # label -> parent label (root absent)

    @property
    def root_label(self) -> int:
        return self.label[self.root]

    def depth_order(self) -> list[int]:
        """Labels in breadth-first visiting order."""
        out, queue = [], deque([self.root_label])
        while queue:
            a = queue.popleft()
            out.append(a)
            queue.extend(self.children[a])
        return out


def root_and_label(t: Graph, root: str | None = None) -> RootedLabeledTree:
    """Root ``t`` and assign the parity labelling.

    Vertices at even depth get 1, 3, 5, ... and vertices at odd depth get
    2, 4, 6, ..., each class numbered in breadth-first order with siblings
    visited in token order.
    """
    if t.n == 0:
        raise NotATreeError("empty graph")
    if root is None:
        root = t.sorted_vertices()[0]
    if root not in t.vertices:
        raise InvalidArgument(f"root {root!r} is not a vertex")
    if t.m != t.n - 1:
        raise NotATreeError(f"{t.n} vertices and {t.m} edges cannot form a tree")
    adj = t.adjacency()
    depth = {root: 0}
    parent_tok = {}
    visit = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in sort_tokens(adj[v]):
            if u not in depth:
                depth[u] = depth[v] + 1
                parent_tok[u] = v
                visit.append(u)
                queue.append(u)
    if len(depth) != t.n:
        raise NotATreeError("graph is disconnected")

    label = {}
    next_odd, next_even = 1, 2
    for v in visit:
        if depth[v] % 2 == 0:
            label[v], next_odd = next_odd, next_odd + 2
        else:
            label[v], next_even = next_even, next_even + 2
    children = {label[v]: [] for v in visit}
    for v in visit[1:]:
        children[label[parent_tok[v]]].append(label[v])
    for kids in children.values():
        kids.sort()
    return RootedLabeledTree(
        graph=t,
        root=root,
        label=label,
        token={a: v for v, a in label.items()},
        children=children,
        parent={label[v]: label[p] for v, p in parent_tok.items()},
    )


class _Seq:
    """Doubly linked sequence of labels with O(1) positional splicing."""

    def __init__(self, first: int):
        self.nxt = {first: None}
        self.prv = {first: None}
        self.head = first

    def insert_after(self, anchor: int, items) -> None:
        for x in items:
            after = self.nxt[anchor]
            self.nxt[anchor], self.prv[x], self.nxt[x] = x, anchor, after
            if after is not None:
                self.prv[after] = x
            anchor = x

    def insert_before(self, anchor: int, items) -> None:
        before = self.prv[anchor]
        if before is None:
            self.prepend(items)
        else:
            self.insert_after(before, items)

    def prepend(self, items) -> None:
        items = list(items)
        if not items:
            return
        old = self.head
        self.head = items[0]
        self.prv[items[0]], self.nxt[items[0]] = None, old
        self.prv[old] = items[0]
        self.insert_after(items[0], items[1:])

    def to_list(self) -> list[int]:
        out, x = [], self.head
        while x is not None:
            out.append(x)
            x = self.nxt[x]
        return out


def _run(t: RootedLabeledTree, on_step=None):
    root = t.root_label
    p1, p2, p3 = _Seq(root), _Seq(root), _Seq(root)
    # last label placed after each odd parent in p1 (children of its later even kids go there)
    tail = {}
    if on_step:
        on_step(root, p1, p2, p3)
    queue = deque([root])
    while queue:
        a = queue.popleft()
        kids = t.children[a]
        if not kids:
            continue
        if a % 2 == 1:
            p1.insert_before(a, kids)
            p2.insert_before(a, reversed(kids))
            p3.prepend(kids)
        else:
            par = t.parent[a]
            if a == t.children[par][0]:
                p1.insert_after(a, kids)
                p2.insert_after(par, reversed(kids))
            else:
                anchor = tail.get(par, par)
                p1.insert_after(anchor, kids)
                tail[par] = kids[-1]
                p2.insert_after(a, reversed(kids))
            p3.insert_after(a, kids)
        queue.extend(c for c in kids if t.children[c])
        if on_step:
            on_step(a, p1, p2, p3)
    return p1, p2, p3


def _tokens(t: RootedLabeledTree, labels) -> Word:
    return tuple(t.token[a] for a in labels)


def tree_permutations(t: RootedLabeledTree, verify: bool = True) -> PermSequence:
    """(p1, p2, p3) over the tree's tokens; their concatenation represents the tree."""
    perms = [_tokens(t, s.to_list()) for s in _run(t)]
    if verify and not represents_permutationally(perms, t.graph):
        raise CertificateError("tree permutations do not represent the input tree")
    return perms


def tree_permutation_steps(t: RootedLabeledTree) -> tuple:
    """Snapshots (visited vertex, p1, p2, p3) after initialisation and after each visit."""
    snaps = []

    def record(a, *seqs):
        snaps.append((t.token[a],) + tuple(_tokens(t, s.to_list()) for s in seqs))

    _run(t, record)
    return tuple(snaps)


def contains_s(g: Graph, bounds: SearchBounds | None = None):
    """Embedding of the two-legged three-armed spider as an induced subgraph, or None."""
    return induced_subgraph(g, spider_s(), bounds)


@dataclass(frozen=True)
class TreePrnResult:
    prn: int
    witness: Word
    permutations: PermSequence


def tree_prn(t: Graph, root: str | None = None, bounds: SearchBounds | None = None) -> TreePrnResult:
    """Permutation-representation number of a tree, with a certifying word.

    Trees on one or two vertices are complete (one permutation).  Otherwise
    a tree without the spider needs exactly two, found by exhaustive search
    (so bounded in size); a tree containing it needs three, and the labelled
    construction supplies them.
    """
    labelled = root_and_label(t, root)
    if t.n <= 2:
        perm = (tuple(t.sorted_vertices()),)
        return TreePrnResult(1, perm[0], list(perm))
    if contains_s(t, bounds) is None:
        found = prn_search(t, 2, bounds)
        if not found.found:
            raise CertificateError("spider-free tree without a two-permutation representation")
        return TreePrnResult(2, concat(found.witness), found.witness)
    perms = tree_permutations(labelled)
    return TreePrnResult(3, concat(perms), perms)
