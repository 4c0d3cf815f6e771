"""Core model for rooted phylogenetic trees and profiles.

A :class:`PhyloTree` is a rooted multifurcating tree stored in an
index-based arena: every internal node has at least two children and
exactly the leaves carry taxon ids.  A :class:`Profile` is an ordered
collection of trees over overlapping taxon sets.

The module also provides the structural operations the compatibility
machinery is built on:

* ``cluster_of`` / ``cluster_set`` -- the species sets below nodes;
* ``restrict`` -- prune a tree down to a subset of its species;
* ``displays`` -- does one tree exhibit all the groupings of another;
* ``triples_of`` / ``triplet_graph`` -- rooted-triple extraction, used
  only by the slow correctness baselines (no performance contract).

All traversals are iterative; trees with millions of nodes are fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .taxa import TaxonTable

NO_TAXON = -1


class PhyloTree:
    """Rooted multifurcating tree with leaf-to-taxon labeling.

    Nodes are dense indices ``0..n_nodes-1``.  ``parent[v]`` is -1 for the
    root, ``taxon[v]`` is -1 for internal nodes.  Instances are treated as
    immutable after construction.
    """

    __slots__ = ("parent", "children", "taxon", "root", "_taxa_cache")

    def __init__(self, parent: list[int], children: list[list[int]],
                 taxon: list[int], root: int):
        self.parent = parent
        self.children = children
        self.taxon = taxon
        self.root = root
        self._taxa_cache: frozenset[int] | None = None
        self._check()

    def _check(self):
        for v, ch in enumerate(self.children):
            if ch:
                if self.taxon[v] != NO_TAXON:
                    raise ValueError(f"internal node {v} carries a taxon")
                if len(ch) < 2:
                    raise ValueError(f"internal node {v} has a single child")
                for c in ch:
                    if self.parent[c] != v:
                        raise ValueError("parent/child links inconsistent")
            else:
                if self.taxon[v] == NO_TAXON:
                    raise ValueError(f"leaf {v} has no taxon")
        if self.parent[self.root] != -1:
            raise ValueError("root has a parent")

    # -- basic queries ---------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def leaves(self) -> Iterator[int]:
        return (v for v in range(self.n_nodes) if not self.children[v])

    @property
    def taxa_set(self) -> frozenset[int]:
        if self._taxa_cache is None:
            self._taxa_cache = frozenset(
                t for t in self.taxon if t != NO_TAXON)
        return self._taxa_cache

    def postorder(self) -> list[int]:
        """Node indices with every child before its parent."""
        order: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children[v])
        order.reverse()
        return order

    def preorder(self) -> list[int]:
        order: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def depths(self) -> list[int]:
        d = [0] * self.n_nodes
        for v in self.preorder():
            p = self.parent[v]
            if p != -1:
                d[v] = d[p] + 1
        return d

    # -- cluster queries -------------------------------------------------

    def cluster_of(self, v: int) -> frozenset[int]:
        """Set of taxa at the leaves of the subtree rooted at *v*."""
        if not 0 <= v < self.n_nodes:
            raise IndexError(f"node index {v} out of range")
        out = []
        stack = [v]
        children = self.children
        taxon = self.taxon
        while stack:
            u = stack.pop()
            if children[u]:
                stack.extend(children[u])
            else:
                out.append(taxon[u])
        return frozenset(out)

    def cluster_set(self) -> set[frozenset[int]]:
        """All clusters of the tree.  Quadratic worst case; oracle tier."""
        clusters: dict[int, frozenset[int]] = {}
        for v in self.postorder():
            if self.children[v]:
                acc: set[int] = set()
                for c in self.children[v]:
                    acc |= clusters[c]
                clusters[v] = frozenset(acc)
            else:
                clusters[v] = frozenset((self.taxon[v],))
        return set(clusters.values())

    def min_taxon_below(self) -> list[int]:
        """Per-node minimum taxon id in its cluster (canonical order key)."""
        m = [0] * self.n_nodes
        for v in self.postorder():
            if self.children[v]:
                m[v] = min(m[c] for c in self.children[v])
            else:
                m[v] = self.taxon[v]
        return m

    # -- construction ----------------------------------------------------

    @classmethod
    def from_nested(cls, nested) -> "PhyloTree":
        """Build from nested lists, e.g. ``[[0, 1], 2]``.

        Ints are leaves (taxon ids); lists are internal nodes.  Singleton
        lists are contracted away, so ``[[3]]`` is the one-leaf tree on 3.
        """
        parent: list[int] = []
        children: list[list[int]] = []
        taxon: list[int] = []

        def new_node(tx: int) -> int:
            parent.append(-1)
            children.append([])
            taxon.append(tx)
            return len(parent) - 1

        # Iterative build: stack of (spec, assigned index or None-marker).
        # First pass creates nodes top-down, contraction handled by
        # unwrapping singleton lists eagerly.
        def unwrap(spec):
            while isinstance(spec, (list, tuple)) and len(spec) == 1:
                spec = spec[0]
            return spec

        root_spec = unwrap(nested)
        if isinstance(root_spec, (list, tuple)) and len(root_spec) == 0:
            raise ValueError("empty tree")
        root = new_node(NO_TAXON if isinstance(root_spec, (list, tuple))
                        else int(root_spec))
        stack = [(root_spec, root)]
        while stack:
            spec, idx = stack.pop()
            if not isinstance(spec, (list, tuple)):
                continue
            for child_spec in spec:
                child_spec = unwrap(child_spec)
                if isinstance(child_spec, (list, tuple)):
                    if len(child_spec) == 0:
                        raise ValueError("empty subtree")
                    c = new_node(NO_TAXON)
                    stack.append((child_spec, c))
                else:
                    c = new_node(int(child_spec))
                parent[c] = idx
                children[idx].append(c)
        return cls(parent, children, taxon, root)

    def canonicalized(self) -> "PhyloTree":
        """Copy with children everywhere sorted by minimum taxon id."""
        m = self.min_taxon_below()
        children = [sorted(ch, key=lambda c: m[c]) for ch in self.children]
        return PhyloTree(list(self.parent), children, list(self.taxon),
                         self.root)


@dataclass(frozen=True)
class RootedTriple:
    """The rooted triple ab|c: a and b split from c below the root."""
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (self.a < self.b and self.a != self.c and self.b != self.c):
            raise ValueError("triple must be normalized with a < b, c distinct")


def make_triple(x: int, y: int, c: int) -> RootedTriple:
    """Normalized xy|c (xy order-insensitive)."""
    a, b = (x, y) if x < y else (y, x)
    return RootedTriple(a, b, c)


@dataclass
class Profile:
    """Ordered collection of trees sharing one taxon table."""
    trees: list[PhyloTree]
    taxa: TaxonTable

    @property
    def k(self) -> int:
        return len(self.trees)

    @property
    def m_p(self) -> int:
        """Total node + edge count, the input-size parameter."""
        return sum(t.n_nodes + t.n_edges for t in self.trees)

    @property
    def taxa_set(self) -> frozenset[int]:
        out: set[int] = set()
        for t in self.trees:
            out |= t.taxa_set
        return frozenset(out)


# ---------------------------------------------------------------------------
# Restriction and the display relation
# ---------------------------------------------------------------------------

def restrict(t: PhyloTree, taxa: Iterable[int]) -> PhyloTree:
    """Restriction of *t* to the species in *taxa*.

    Implemented by pruning leaves outside *taxa* and contracting the
    resulting unary nodes; the cluster set of the result is exactly the
    set of nonempty intersections of t's clusters with *taxa*.
    """
    keep = frozenset(taxa)
    if not (keep & t.taxa_set):
        raise ValueError("restriction to a disjoint taxon set")

    parent: list[int] = []
    children: list[list[int]] = []
    taxon: list[int] = []

    def new_node(tx: int) -> int:
        parent.append(-1)
        children.append([])
        taxon.append(tx)
        return len(parent) - 1

    # result[v]: new index of the subtree image rooted below v, or -1.
    result = [-1] * t.n_nodes
    for v in t.postorder():
        ch = t.children[v]
        if not ch:
            if t.taxon[v] in keep:
                result[v] = new_node(t.taxon[v])
        else:
            kept = [result[c] for c in ch if result[c] != -1]
            if len(kept) == 1:
                result[v] = kept[0]          # unary contraction
            elif len(kept) >= 2:
                idx = new_node(NO_TAXON)
                for c in kept:
                    parent[c] = idx
                children[idx] = kept
                result[v] = idx
    return PhyloTree(parent, children, taxon, result[t.root])


class _Lca:
    """Binary-lifting LCA over a PhyloTree."""

    def __init__(self, t: PhyloTree):
        n = t.n_nodes
        self.depth = t.depths()
        logn = max(1, n.bit_length())
        up = [list(t.parent)]
        for j in range(1, logn):
            prev = up[j - 1]
            up.append([prev[prev[v]] if prev[v] != -1 else -1
                       for v in range(n)])
        self.up = up

    def query(self, u: int, v: int) -> int:
        depth, up = self.depth, self.up
        if depth[u] < depth[v]:
            u, v = v, u
        diff = depth[u] - depth[v]
        j = 0
        while diff:
            if diff & 1:
                u = up[j][u]
            diff >>= 1
            j += 1
        if u == v:
            return u
        for j in range(len(up) - 1, -1, -1):
            if up[j][u] != up[j][v]:
                u = up[j][u]
                v = up[j][v]
        return up[0][u]


def displays(t: PhyloTree, s: PhyloTree) -> bool:
    """True iff every cluster of *s* is a cluster of ``restrict(t, L(s))``.

    Runs in O((|t| + |s|) log |t|): each node of *s* is mapped to the LCA
    of its cluster in the restricted tree, and the cluster is present
    exactly when that LCA spans no extra leaves.
    """
    ls = s.taxa_set
    if not ls <= t.taxa_set:
        raise ValueError("species of the displayed tree missing from host")
    t2 = restrict(t, ls)

    leaf_of = {t2.taxon[v]: v for v in range(t2.n_nodes)
               if not t2.children[v]}
    # leaf counts below each t2 node
    count2 = [0] * t2.n_nodes
    for v in t2.postorder():
        if t2.children[v]:
            count2[v] = sum(count2[c] for c in t2.children[v])
        else:
            count2[v] = 1

    lca = _Lca(t2)
    rep = [0] * s.n_nodes
    size_s = [0] * s.n_nodes
    for v in s.postorder():
        if not s.children[v]:
            rep[v] = leaf_of[s.taxon[v]]
            size_s[v] = 1
        else:
            it = iter(s.children[v])
            first = next(it)
            r = rep[first]
            sz = size_s[first]
            for c in it:
                r = lca.query(r, rep[c])
                sz += size_s[c]
            rep[v] = r
            size_s[v] = sz
            if count2[r] != sz:
                return False
    return True


def isomorphic(t1: PhyloTree, t2: PhyloTree) -> bool:
    """Equality up to isomorphism: same taxa and same cluster sets."""
    return (t1.taxa_set == t2.taxa_set
            and t1.cluster_set() == t2.cluster_set())


# ---------------------------------------------------------------------------
# Rooted triples and the triplet graph (oracle tier)
# ---------------------------------------------------------------------------

def triples_of(t: PhyloTree) -> set[RootedTriple]:
    """All rooted triples induced by *t*.

    Enumerates every 3-subset of the taxa; intended for small trees only.
    """
    taxa = sorted(t.taxa_set)
    if len(taxa) < 3:
        return set()
    leaf_of = {t.taxon[v]: v for v in range(t.n_nodes) if not t.children[v]}
    depth = t.depths()
    parent = t.parent

    def lca(u: int, v: int) -> int:
        while u != v:
            if depth[u] < depth[v]:
                v = parent[v]
            else:
                u = parent[u]
        return u

    out: set[RootedTriple] = set()
    from itertools import combinations
    for a, b, c in combinations(taxa, 3):
        la, lb, lc = leaf_of[a], leaf_of[b], leaf_of[c]
        ab = lca(la, lb)
        ac = lca(la, lc)
        bc = lca(lb, lc)
        # exactly one of the pair-LCAs is strictly deepest iff binary
        if depth[ab] > depth[ac] and ac == bc:
            out.add(make_triple(a, b, c))
        elif depth[ac] > depth[ab] and ab == bc:
            out.add(make_triple(a, c, b))
        elif depth[bc] > depth[ab] and ab == ac:
            out.add(make_triple(b, c, a))
    return out


def triplet_graph(p: Profile, taxa: Iterable[int]) -> dict[int, set[int]]:
    """Adjacency of the triplet graph of ``p`` restricted to *taxa*.

    Vertices are all of *taxa*; (x, y) is an edge iff some xy|c is induced
    by a restricted input tree.  Oracle tier: materializes triples.
    """
    a = frozenset(taxa)
    adj: dict[int, set[int]] = {s: set() for s in a}
    for t in p.trees:
        common = a & t.taxa_set
        if len(common) < 3:
            continue
        sub = restrict(t, common)
        for tr in triples_of(sub):
            adj[tr.a].add(tr.b)
            adj[tr.b].add(tr.a)
    return adj


def components_of(adj: dict[int, set[int]]) -> list[frozenset[int]]:
    """Connected components of an adjacency-dict graph."""
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps
