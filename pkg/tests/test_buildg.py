"""The fast compatibility engine: verdicts, supertrees, internals."""

import pytest

from treecompat.buildg import (build_hgraph, buildg, check_only, run_buildg)
from treecompat.oracle import build_classic
from treecompat.phylo import displays, isomorphic
from treecompat.taxa import TaxonTable

from conftest import profile, random_profiles, tree


class TestVerdicts:
    def test_compatible_pair(self):
        p = profile("((a,b),c);((c,d),b);")
        t = buildg(p)
        assert t is not None
        assert all(displays(t, ti) for ti in p.trees)
        assert isomorphic(t, tree("((a,b),(c,d));", p.taxa))

    def test_incompatible_triples(self):
        assert buildg(profile("((a,b),c);((b,c),a);")) is None

    def test_disjoint_trees_joined(self):
        p = profile("(a,b);(c,d);")
        t = buildg(p)
        assert t is not None
        assert t.taxa_set == {0, 1, 2, 3}
        assert all(displays(t, ti) for ti in p.trees)

    def test_single_tree_identity(self):
        p = profile("((a,(b,c)),(d,e));")
        assert isomorphic(buildg(p), p.trees[0])

    def test_single_leaf_tree(self):
        p = profile("a;")
        t = buildg(p)
        assert t.n_nodes == 1

    def test_single_node_tree_in_profile(self):
        # one-leaf inputs exercise frontier expansion at a leaf
        p = profile("a;(a,b);(b,c);")
        t = buildg(p)
        assert t is not None
        assert all(displays(t, ti) for ti in p.trees)

    def test_star_inputs(self):
        p = profile("(a,b,c,d);(c,d,e);")
        t = buildg(p)
        assert t is not None
        assert all(displays(t, ti) for ti in p.trees)

    def test_resolution_merge(self):
        # two partial resolutions that refine each other
        p = profile("((a,b),c,d);((c,d),a,b);")
        t = buildg(p)
        assert t is not None
        assert all(displays(t, ti) for ti in p.trees)

    def test_conflict_through_chain(self):
        # pairwise compatible, jointly impossible
        assert buildg(profile("((a,b),c);((b,c),d);((d,a),c);")) is None

    def test_empty_profile_raises(self):
        from treecompat.phylo import Profile
        with pytest.raises(ValueError, match="empty"):
            buildg(Profile(trees=[], taxa=TaxonTable()))

    def test_check_only_matches_buildg(self):
        for p in random_profiles(seed=23, count=80, max_species=10,
                                 max_trees=4):
            assert check_only(p) == (buildg(p) is not None)

    def test_deep_caterpillar(self):
        # 3000-leaf comb: no recursion limits anywhere in the pipeline
        n = 3000
        text = "(" * (n - 1) + "s0" + \
            "".join(f",s{i})" for i in range(1, n)) + ";"
        p = profile(text)
        t = buildg(p)
        assert t is not None
        assert isomorphic(t, p.trees[0])


class TestStats:
    def test_m_p_frozen(self):
        # two 5-node, 4-edge trees
        assert profile("((a,b),c);((b,c),d);").m_p == 18

    def test_counters(self):
        p = profile("((a,b),c);((c,d),b);")
        t, stats = run_buildg(p)
        assert t is not None
        assert stats.m_p == 18
        assert stats.expansions >= 2
        assert stats.edge_deletions >= stats.splits
        assert stats.rounds >= 1
        assert stats.scans > 0

    def test_deletions_bounded_by_edges(self):
        for p in random_profiles(seed=5, count=30, max_species=12,
                                 max_trees=4):
            _, stats = run_buildg(p)
            n_edges = sum(t.n_edges + len(t.taxa_set) for t in p.trees)
            assert stats.edge_deletions <= n_edges


class TestDisplayGraph:
    def test_initial_metadata(self):
        # two cherries sharing species b: one component, three species
        # hubs, both roots marked and semi-universal
        p = profile("(a,b);(b,c);")
        h, table = build_hgraph(p)
        assert len(table) == 1
        info = next(iter(table.values()))
        assert info.count == 3
        assert info.semi == {0, 1}
        assert info.marked_vertices() == {h.offset[0] + p.trees[0].root,
                                          h.offset[1] + p.trees[1].root}

    def test_disjoint_trees_two_components(self):
        p = profile("(a,b);(c,d);")
        _, table = build_hgraph(p)
        counts = sorted(info.count for info in table.values())
        assert counts == [2, 2]

    def test_vertex_layout(self):
        p = profile("(a,b);(b,c);")
        h, _ = build_hgraph(p)
        assert h.describe(h.offset[1] + 1) == ("tree", 1, 1)
        assert h.describe(h.species_base + 2) == ("species", 2)
        assert h.is_species(h.species_base)
        assert not h.is_species(0)

    def test_edge_count(self):
        # display graph has one edge per tree edge plus one per leaf
        p = profile("((a,b),c);((c,d),b);")
        h, _ = build_hgraph(p)
        n_tree_edges = sum(t.n_edges for t in p.trees)
        n_leaves = sum(len(t.taxa_set) for t in p.trees)
        assert len(h.g._edge_level) == n_tree_edges + n_leaves


class TestOracleAgreement:
    def test_small_fuzz(self):
        for p in random_profiles(seed=99, count=120, max_species=12,
                                 max_trees=5):
            t = buildg(p)
            classic = build_classic(p)
            assert (t is None) == (classic is None)
            if t is not None:
                assert all(displays(t, ti) for ti in p.trees)
