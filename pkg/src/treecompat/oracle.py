"""Slow, trusted correctness baselines.

Three independent oracles back the fast path:

* :func:`build_classic` -- the classic triplet-graph supertree recursion,
  recomputing the triplet graph from scratch at every level;
* :func:`brute_force_compatible` -- exhaustive search over every rooted
  phylogenetic tree on at most five species;
* :class:`NaiveConnectivity` -- recompute-from-scratch connectivity for
  stress-testing the dynamic structure.

Nothing here has a performance contract; clarity over speed.
"""

from __future__ import annotations

from typing import Iterator

from .phylo import (NO_TAXON, PhyloTree, Profile, components_of, displays,
                    restrict, triplet_graph)

_MAX_BRUTE_FORCE = 6


def enumerate_trees(taxa) -> Iterator[PhyloTree]:
    """Every rooted phylogenetic tree on the given taxa, one per isomorphism
    class.

    Generated by recursively partitioning the leaf set into >= 2 root
    blocks; distinct partitions give non-isomorphic trees, so no
    deduplication is needed.  Counts follow the known series 1, 4, 26, 236
    for 2..5 leaves.
    """
    from sympy.utilities.iterables import multiset_partitions

    taxa = sorted(taxa)
    if len(taxa) > _MAX_BRUTE_FORCE:
        raise ValueError(f"leaf set too large for enumeration: {len(taxa)}")

    def nested(leafset: list[int]):
        if len(leafset) == 1:
            yield leafset[0]
            return
        for blocks in multiset_partitions(leafset):
            if len(blocks) < 2:
                continue
            yield from _block_choices(blocks, 0, [])

    def _block_choices(blocks, idx, acc):
        if idx == len(blocks):
            yield list(acc)
            return
        for sub in nested(blocks[idx]):
            acc.append(sub)
            yield from _block_choices(blocks, idx + 1, acc)
            acc.pop()

    if len(taxa) == 1:
        yield PhyloTree.from_nested(taxa[0])
        return
    for shape in nested(list(taxa)):
        yield PhyloTree.from_nested(shape)


def brute_force_compatible(p: Profile) -> bool:
    """Ground truth for tiny profiles: does any enumerated supertree on
    L(P) display every input tree?"""
    taxa = p.taxa_set
    if len(taxa) > _MAX_BRUTE_FORCE:
        raise ValueError(f"profile has {len(taxa)} species; brute force "
                         f"handles at most {_MAX_BRUTE_FORCE}")
    for t in enumerate_trees(taxa):
        if all(displays(t, ti) for ti in p.trees):
            return True
    return False


def build_classic(p: Profile) -> PhyloTree | None:
    """Classic BUILD over the triplet graph; None means incompatible.

    Recurses on the connected components of the triplet graph of the
    restricted profile, joining component subtrees under a fresh root.
    """

    def solve(taxa: frozenset[int]):
        if len(taxa) == 1:
            return next(iter(taxa))
        if len(taxa) == 2:
            return sorted(taxa)
        comps = components_of(triplet_graph(p, taxa))
        if len(comps) == 1:
            return None
        kids = []
        for comp in comps:
            sub = solve(comp)
            if sub is None:
                return None
            kids.append(sub)
        return kids

    nested = solve(p.taxa_set)
    if nested is None:
        return None
    return PhyloTree.from_nested(nested).canonicalized()


class NaiveConnectivity:
    """Edge-set mirror answering connectivity by recomputation.

    Rebuilds a union-find from the current edge set whenever a query
    follows a deletion; insertions union incrementally.
    """

    def __init__(self, n: int):
        self.n = n
        self.edges: set[tuple[int, int]] = set()
        self._uf: list[int] | None = list(range(n))

    def _find(self, x: int) -> int:
        uf = self._uf
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def _rebuild(self):
        self._uf = list(range(self.n))
        for u, v in self.edges:
            ru, rv = self._find(u), self._find(v)
            if ru != rv:
                self._uf[ru] = rv

    def insert(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        self.edges.add(key)
        if self._uf is not None:
            ru, rv = self._find(u), self._find(v)
            if ru != rv:
                self._uf[ru] = rv

    def delete(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        self.edges.remove(key)
        self._uf = None  # stale; rebuild lazily

    def connected(self, u: int, v: int) -> bool:
        if self._uf is None:
            self._rebuild()
        return self._find(u) == self._find(v)

    def component_size(self, u: int) -> int:
        if self._uf is None:
            self._rebuild()
        r = self._find(u)
        return sum(1 for x in range(self.n) if self._find(x) == r)

    def component_members(self, u: int) -> frozenset[int]:
        if self._uf is None:
            self._rebuild()
        r = self._find(u)
        return frozenset(x for x in range(self.n) if self._find(x) == r)
