"""Near-linear rooted tree compatibility testing and supertree output.

The algorithm maintains a display graph H over the union of all input
trees plus one hub vertex per species, wired to every leaf carrying that
species.  A work queue of connected components replaces the textbook
recursion: for each component, semi-universal nodes (tree indices whose
marked set is a singleton) are expanded to their children by deleting
their child edges from the dynamic connectivity structure; if the
component refuses to fall apart the profile is incompatible, otherwise
the resulting components become children of a fresh output node.

Per-component metadata (species count, semi-universal index set, and the
per-tree marked-vertex lists) is rebuilt after every split by scanning
only the smaller side, so each vertex is scanned O(log M) times overall
and the whole run costs O(M log^2 M) for an input of total size M.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynconn import DynGraph
from .phylo import NO_TAXON, PhyloTree, Profile


class ComponentInfo:
    """COUNT / SEMI / LIST metadata for one component of the display graph.

    ``count`` is the number of species hubs in the component; ``lists``
    maps a tree index to the set of marked vertices of that tree in the
    component (absent when empty); ``semi`` holds exactly the indices
    whose list is a singleton.
    """

    __slots__ = ("count", "lists", "semi")

    def __init__(self):
        self.count = 0
        self.lists: dict[int, set[int]] = {}
        self.semi: set[int] = set()

    def add_marked(self, v: int, i: int):
        s = self.lists.get(i)
        if s is None:
            self.lists[i] = {v}
            self.semi.add(i)
        else:
            s.add(v)
            if len(s) == 2:
                self.semi.discard(i)

    def remove_marked(self, v: int, i: int):
        s = self.lists[i]
        s.remove(v)
        if not s:
            del self.lists[i]
            self.semi.discard(i)
        elif len(s) == 1:
            self.semi.add(i)

    def marked_vertices(self) -> set[int]:
        out: set[int] = set()
        for s in self.lists.values():
            out |= s
        return out


class HGraph:
    """The display graph over V(P) plus per-species hub vertices.

    Vertex layout: tree i's node j is ``offset[i] + j``; species s is
    ``species_base + s``.  ``marked`` tracks the current frontier set U.
    """

    __slots__ = ("profile", "g", "offset", "species_base", "n_vertices",
                 "owner", "node_index", "marked")

    def __init__(self, profile: Profile):
        trees = profile.trees
        offset = []
        total = 0
        for t in trees:
            offset.append(total)
            total += t.n_nodes
        species_base = total
        n_species = len(profile.taxa)
        n_vertices = total + n_species

        owner = [0] * n_vertices          # tree index, or -1 for a hub
        node_index = [0] * n_vertices     # node index, or taxon id for a hub
        for i, t in enumerate(trees):
            base = offset[i]
            for j in range(t.n_nodes):
                owner[base + j] = i
                node_index[base + j] = j
        for s in range(n_species):
            owner[species_base + s] = -1
            node_index[species_base + s] = s

        self.profile = profile
        self.offset = offset
        self.species_base = species_base
        self.n_vertices = n_vertices
        self.owner = owner
        self.node_index = node_index
        self.marked = bytearray(n_vertices)

        g = DynGraph(n_vertices)
        for i, t in enumerate(trees):
            base = offset[i]
            parent = t.parent
            taxon = t.taxon
            for j in range(t.n_nodes):
                if parent[j] != -1:
                    g.insert_edge(base + parent[j], base + j)
                if taxon[j] != NO_TAXON:
                    g.insert_edge(base + j, species_base + taxon[j])
        self.g = g

    def is_species(self, v: int) -> bool:
        return v >= self.species_base

    def species_of(self, v: int) -> int:
        return v - self.species_base

    def describe(self, v: int):
        if v >= self.species_base:
            return ("species", v - self.species_base)
        return ("tree", self.owner[v], self.node_index[v])


def build_hgraph(profile: Profile):
    """Construct the display graph with roots marked, plus the initial
    per-component metadata keyed by component handle."""
    if not profile.trees:
        raise ValueError("empty profile")
    h = HGraph(profile)
    g = h.g
    for i, t in enumerate(profile.trees):
        h.marked[h.offset[i] + t.root] = 1

    table: dict[object, ComponentInfo] = {}
    for s in range(len(profile.taxa)):
        v = h.species_base + s
        key = g.component_handle(v)
        info = table.get(key)
        if info is None:
            info = table[key] = ComponentInfo()
        info.count += 1
    for i, t in enumerate(profile.trees):
        v = h.offset[i] + t.root
        key = g.component_handle(v)
        info = table.get(key)
        if info is None:
            info = table[key] = ComponentInfo()
        info.add_marked(v, i)
    return h, table


@dataclass
class BuildStats:
    """Instrumentation counters for one run."""
    m_p: int = 0
    expansions: int = 0
    edge_deletions: int = 0
    splits: int = 0
    scans: int = 0          # vertices visited in smaller-side rebuilds
    rounds: int = 0


class _OutNode:
    __slots__ = ("children", "taxon")

    def __init__(self, taxon: int = NO_TAXON):
        self.children: list[_OutNode] = []
        self.taxon = taxon


class _Engine:
    """One compatibility run; owns the display graph exclusively."""

    def __init__(self, profile: Profile, build_tree: bool = True,
                 trace=None):
        self.profile = profile
        self.build_tree = build_tree
        self.trace = trace
        self.stats = BuildStats(m_p=profile.m_p)
        self.h, self.by_handle = build_hgraph(profile)
        self.g = self.h.g

    # -- component info bookkeeping --------------------------------------

    def _info_of(self, v: int) -> ComponentInfo:
        return self.by_handle[self.g.component_handle(v)]

    def _delete(self, u: int, v: int) -> ComponentInfo | None:
        """Delete edge (u, v), rebuilding metadata if the component splits.

        Returns the freshly scanned smaller-side info, or None.
        """
        g = self.g
        h = self.h
        info = self.by_handle.pop(g.component_handle(u))
        report = g.delete_edge(u, v)
        self.stats.edge_deletions += 1
        if report is None:
            self.by_handle[g.component_handle(u)] = info
            return None
        self.stats.splits += 1
        small = ComponentInfo()
        marked = h.marked
        species_base = h.species_base
        owner = h.owner
        scans = 0
        for w in g.iter_handle(report.smaller):
            scans += 1
            if w >= species_base:
                info.count -= 1
                small.count += 1
            elif marked[w]:
                i = owner[w]
                info.remove_marked(w, i)
                small.add_marked(w, i)
        self.stats.scans += scans
        self.by_handle[report.larger] = info
        self.by_handle[report.smaller] = small
        return small

    # -- expansion -------------------------------------------------------

    def _expand(self, i: int, v: int, affected: set[ComponentInfo]):
        """Replace marked vertex v of tree i by its children in the
        frontier, deleting its incident display-graph edges."""
        h = self.h
        g = self.g
        t = self.profile.trees[i]
        base = h.offset[i]
        j = h.node_index[v]
        info = self._info_of(v)
        info.remove_marked(v, i)
        h.marked[v] = 0
        kids = t.children[j]
        if kids:
            for c in kids:
                cv = base + c
                h.marked[cv] = 1
                info.add_marked(cv, i)
            neighbors = [base + c for c in kids]
        else:
            # v is a leaf (a single-node input tree, or a stranded leaf
            # singleton): it has no children, so it simply drops out of
            # the frontier; its only remaining edge is the species hub.
            neighbors = [h.species_base + t.taxon[j]]
        for u in neighbors:
            small = self._delete(v, u)
            if small is not None:
                affected.add(small)
        # v (and, for the leaf case, possibly its hub) is now isolated;
        # drop any empty metadata left behind.
        hv = self.g.component_handle(v)
        leftover = self.by_handle.get(hv)
        if leftover is not None and not leftover.lists and leftover.count == 0:
            del self.by_handle[hv]
            affected.discard(leftover)
        self.stats.expansions += 1
        if self.trace is not None:
            self.trace.after_expand(self, i, v)

    # -- species harvesting (base cases and instrumentation) -------------

    def component_species(self, v: int) -> list[int]:
        h = self.h
        return sorted(h.species_of(w) for w in self.g.iter_component(v)
                      if w >= h.species_base)

    def marked_partition(self) -> set[frozenset[int]]:
        """Partition of the current frontier by display-graph component."""
        return {frozenset(info.marked_vertices())
                for info in self.by_handle.values() if info.lists}

    # -- main loop -------------------------------------------------------

    def run(self) -> bool:
        """Drain the work queue; True iff the profile is compatible."""
        top = _OutNode() if self.build_tree else None
        queue: list[tuple[ComponentInfo, _OutNode | None]] = [
            (info, top) for info in self.by_handle.values() if info.lists]
        self.tree: PhyloTree | None = None
        while queue:
            info, parent = queue.pop()
            if not self._process(info, parent, queue):
                return False
        if self.build_tree:
            self.tree = self._to_tree(top)
        return True

    def _process(self, info: ComponentInfo, parent: _OutNode | None,
                 queue) -> bool:
        rep = next(iter(next(iter(info.lists.values()))))
        if info.count <= 2:
            species = self.component_species(rep)
            for w in info.marked_vertices():
                self.h.marked[w] = 0        # component leaves the frontier
            self.by_handle.pop(self.g.component_handle(rep), None)
            if parent is not None:
                node = _OutNode()
                if len(species) == 1:
                    node.taxon = species[0]
                else:
                    for s in species:
                        node.children.append(_OutNode(s))
                parent.children.append(node)
            return True

        if self.trace is not None:
            species_before = self.component_species(rep)

        plan = [(i, next(iter(info.lists[i]))) for i in sorted(info.semi)]
        if not plan:
            return False    # no semi-universal nodes: component stays whole
        affected = {info}
        for i, v in plan:
            self._expand(i, v, affected)
        self.stats.rounds += 1

        parts = [inf for inf in affected if inf.lists]
        if self.trace is not None:
            self.trace.after_round(self, species_before, parts)
        if len(parts) == 1:
            return False
        node = None
        if parent is not None:
            node = _OutNode()
            parent.children.append(node)
        for inf in parts:
            queue.append((inf, node))
        return True

    def _to_tree(self, top: _OutNode) -> PhyloTree:
        root = top.children[0] if len(top.children) == 1 else top
        parent: list[int] = []
        children: list[list[int]] = []
        taxon: list[int] = []

        def new_node(tx):
            parent.append(-1)
            children.append([])
            taxon.append(tx)
            return len(parent) - 1

        ridx = new_node(root.taxon)
        stack = [(root, ridx)]
        while stack:
            node, idx = stack.pop()
            for ch in node.children:
                cidx = new_node(ch.taxon)
                parent[cidx] = idx
                children[idx].append(cidx)
                stack.append((ch, cidx))
        t = PhyloTree(parent, children, taxon, ridx)
        return t.canonicalized()


def buildg(p: Profile, trace=None) -> PhyloTree | None:
    """Decide compatibility of *p*; return a displaying supertree or None.

    The returned tree has deterministic child order (sorted by minimum
    taxon id) and may be more resolved than the inputs; it satisfies
    ``displays(result, t)`` for every tree of the profile.  ``None``
    means the profile is incompatible.
    """
    tree, _ = run_buildg(p, trace=trace)
    return tree


def run_buildg(p: Profile, trace=None):
    """As :func:`buildg`, but also return the instrumentation counters."""
    engine = _Engine(p, build_tree=True, trace=trace)
    engine.run()
    return engine.tree, engine.stats


def check_only(p: Profile) -> bool:
    """Compatibility verdict without materializing the supertree."""
    return _Engine(p, build_tree=False).run()
