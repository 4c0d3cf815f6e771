"""Seeded random profile generation for testing and benchmarking.

Profiles are derived from a hidden base supertree: each input tree is a
restriction of the base to a random species subset, optionally with
random internal edges contracted, so the profile is compatible by
construction.  ``gen_perturbed`` then swaps leaf labels in one tree,
which may or may not break compatibility -- useful for oracle-agreement
fuzzing, not as a known-incompatible source.

Shapes span the degree extremes: ``binary`` grows a fully resolved tree
by random sequential leaf attachment; ``star`` draws child counts from a
high-skewed geometric so internal nodes are massively multifurcating;
``mixed`` contracts a fraction of a binary tree's internal edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .phylo import NO_TAXON, PhyloTree, Profile, restrict
from .taxa import TaxonTable

MIXED_CONTRACTION_PROB = 0.2


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    n_species: int = 16
    k_trees: int = 3
    coverage: float = 0.75          # fraction of species per tree
    resolution: str = "binary"      # binary | star | mixed
    perturb: int = 0                # leaf-label swaps in one tree

    def __post_init__(self):
        if self.n_species < 1 or self.k_trees < 1:
            raise ValueError("counts must be positive")
        if not 0.0 < self.coverage <= 1.0:
            raise ValueError("coverage must be in (0, 1]")
        if self.coverage * self.n_species < 1:
            raise ValueError("coverage too small for the species count")
        if self.resolution not in ("binary", "star", "mixed"):
            raise ValueError(f"unknown resolution {self.resolution!r}")


def _random_binary(taxa: list[int], rng: random.Random) -> PhyloTree:
    """Fully resolved tree grown by attaching each leaf at a random edge."""
    if len(taxa) == 1:
        return PhyloTree.from_nested(taxa[0])
    parent = [-1, 0, 0]
    children = [[1, 2], [], []]
    taxon = [NO_TAXON, taxa[0], taxa[1]]
    edges = [1, 2]                  # an edge is named by its lower node
    for tx in taxa[2:]:
        below = edges[rng.randrange(len(edges))]
        p = parent[below]
        mid = len(parent)
        parent.append(p)
        children.append([below])
        taxon.append(NO_TAXON)
        leaf = len(parent)
        parent.append(mid)
        children.append([])
        taxon.append(tx)
        children[mid].append(leaf)
        children[p][children[p].index(below)] = mid
        parent[below] = mid
        edges.append(mid)
        edges.append(leaf)
    return PhyloTree(parent, children, taxon, 0)


def _random_star_heavy(taxa: list[int], rng: random.Random) -> PhyloTree:
    """Tree whose internal nodes keep nearly all leaves as direct children."""

    def build(block: list[int]):
        m = len(block)
        if m == 1:
            return block[0]
        # child count skewed toward m: m minus a small geometric excess
        excess = 0
        while m - excess > 2 and rng.random() < 0.5:
            excess += 1
        c = max(2, m - excess)
        rng.shuffle(block)
        # first c-1 blocks are singletons, the rest pools into the last
        blocks = [[x] for x in block[:c - 1]] + [block[c - 1:]]
        return [build(b) for b in blocks]

    return PhyloTree.from_nested(build(list(taxa)))


def _contract_random_edges(t: PhyloTree, prob: float,
                           rng: random.Random) -> PhyloTree:
    """Contract each internal edge independently with probability *prob*."""
    absorb = [False] * t.n_nodes
    for v in range(t.n_nodes):
        if t.parent[v] != -1 and t.children[v] and rng.random() < prob:
            absorb[v] = True
    return _rebuild_without(t, absorb)


def _rebuild_without(t: PhyloTree, absorb: list[bool]) -> PhyloTree:
    """Rebuild *t* with absorbed internal nodes merged into their parents."""
    parent: list[int] = []
    children: list[list[int]] = []
    taxon: list[int] = []

    def new_node(tx: int) -> int:
        parent.append(-1)
        children.append([])
        taxon.append(tx)
        return len(parent) - 1

    root = new_node(NO_TAXON if t.children[t.root] else t.taxon[t.root])
    stack = [(t.root, root)]
    while stack:
        v, idx = stack.pop()
        todo = list(t.children[v])
        while todo:
            c = todo.pop()
            if t.children[c] and absorb[c]:
                todo.extend(t.children[c])
            else:
                cidx = new_node(NO_TAXON if t.children[c] else t.taxon[c])
                parent[cidx] = idx
                children[idx].append(cidx)
                if t.children[c]:
                    stack.append((c, cidx))
    return PhyloTree(parent, children, taxon, root)


def _base_tree(cfg: GenConfig, rng: random.Random) -> PhyloTree:
    taxa = list(range(cfg.n_species))
    if cfg.resolution == "star":
        return _random_star_heavy(taxa, rng)
    return _random_binary(taxa, rng)


def gen_compatible(cfg: GenConfig) -> Profile:
    """Profile that is compatible by construction (restrictions of a
    random base supertree)."""
    rng = random.Random(cfg.seed)
    base = _base_tree(cfg, rng)
    size = max(1, round(cfg.coverage * cfg.n_species))
    taxa = TaxonTable()
    for s in range(cfg.n_species):
        taxa.intern(f"s{s}")
    trees = []
    for _ in range(cfg.k_trees):
        subset = rng.sample(range(cfg.n_species), size)
        t = restrict(base, subset)
        if cfg.resolution == "mixed":
            t = _contract_random_edges(t, MIXED_CONTRACTION_PROB, rng)
        trees.append(t)
    return Profile(trees=trees, taxa=taxa)


def gen_perturbed(cfg: GenConfig) -> Profile:
    """gen_compatible plus ``cfg.perturb`` leaf-label swaps in one tree."""
    p = gen_compatible(cfg)
    if cfg.perturb == 0:
        return p
    rng = random.Random(cfg.seed ^ 0x9E3779B97F4A7C15)
    candidates = [t for t in p.trees if len(t.taxa_set) >= 2]
    if not candidates:
        return p
    t = candidates[rng.randrange(len(candidates))]
    leaves = [v for v in range(t.n_nodes) if not t.children[v]]
    taxon = list(t.taxon)
    for _ in range(cfg.perturb):
        a, b = rng.sample(leaves, 2)
        taxon[a], taxon[b] = taxon[b], taxon[a]
    mutated = PhyloTree(list(t.parent), [list(c) for c in t.children],
                        taxon, t.root)
    trees = [mutated if s is t else s for s in p.trees]
    return Profile(trees=trees, taxa=p.taxa)
