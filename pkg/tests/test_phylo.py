"""Tree model: clusters, restriction, the display relation, triples."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecompat.phylo import (NO_TAXON, PhyloTree, Profile, components_of,
                              displays, isomorphic, make_triple, restrict,
                              triples_of, triplet_graph)
from treecompat.taxa import TaxonTable

from conftest import profile, tree


def ids(taxa, names):
    return [taxa.id_of(n) for n in names]


class TestPhyloTree:
    def test_from_nested(self):
        t = PhyloTree.from_nested([[0, 1], 2])
        assert t.n_nodes == 5
        assert t.n_edges == 4
        assert t.taxa_set == {0, 1, 2}

    def test_from_nested_contracts_singletons(self):
        assert isomorphic(PhyloTree.from_nested([[[0, 1]], [2]]),
                          PhyloTree.from_nested([[0, 1], 2]))

    def test_single_leaf(self):
        t = PhyloTree.from_nested(7)
        assert t.n_nodes == 1
        assert t.taxa_set == {7}

    def test_validation_rejects_unary(self):
        with pytest.raises(ValueError, match="single child"):
            PhyloTree([-1, 0], [[1], []], [NO_TAXON, 0], 0)

    def test_validation_rejects_untaxed_leaf(self):
        with pytest.raises(ValueError, match="no taxon"):
            PhyloTree([-1, 0, 0], [[1, 2], [], []],
                      [NO_TAXON, 0, NO_TAXON], 0)

    def test_cluster_of(self):
        t = PhyloTree.from_nested([[0, 1], [2, 3]])
        root_kids = t.children[t.root]
        assert {t.cluster_of(c) for c in root_kids} == \
            {frozenset({0, 1}), frozenset({2, 3})}
        assert t.cluster_of(t.root) == {0, 1, 2, 3}

    def test_cluster_set(self):
        t = PhyloTree.from_nested([[0, 1], 2])
        assert t.cluster_set() == {frozenset({0}), frozenset({1}),
                                   frozenset({2}), frozenset({0, 1}),
                                   frozenset({0, 1, 2})}

    def test_postorder_parents_last(self):
        t = PhyloTree.from_nested([[0, [1, 2]], 3])
        pos = {v: i for i, v in enumerate(t.postorder())}
        for v in range(t.n_nodes):
            if t.parent[v] != -1:
                assert pos[v] < pos[t.parent[v]]

    def test_deep_tree_iterative(self):
        # caterpillar with 5000 leaves: recursion-free traversals
        nested = 0
        for i in range(1, 5000):
            nested = [nested, i]
        t = PhyloTree.from_nested(nested)
        assert len(t.postorder()) == t.n_nodes
        assert t.cluster_of(t.root) == frozenset(range(5000))
        assert isomorphic(t, t.canonicalized())


class TestRestrict:
    def test_basic(self):
        t = tree("((a,b),(c,d));")
        # ids follow interning order a=0 b=1 c=2 d=3
        r = restrict(t, {0, 2})
        assert isomorphic(r, PhyloTree.from_nested([0, 2]))

    def test_contraction(self):
        t = tree("((a,b),c);")
        r = restrict(t, {0, 1})
        assert isomorphic(r, PhyloTree.from_nested([0, 1]))

    def test_to_single_leaf(self):
        t = tree("((a,b),c);")
        r = restrict(t, {2})
        assert r.n_nodes == 1

    def test_disjoint_raises(self):
        with pytest.raises(ValueError, match="disjoint"):
            restrict(tree("(a,b);"), {99})

    def test_cluster_characterization(self):
        t = tree("((a,(b,c)),(d,e));")
        keep = frozenset({0, 1, 3})
        r = restrict(t, keep)
        expect = {c & keep for c in t.cluster_set() if c & keep}
        assert r.cluster_set() == expect


class TestDisplays:
    def test_self(self):
        t = tree("((a,b),(c,d));")
        assert displays(t, t)

    def test_restriction_always_displayed(self):
        t = tree("((a,(b,c)),(d,(e,f)));")
        assert displays(t, restrict(t, {0, 2, 4}))

    def test_refinement(self):
        taxa = TaxonTable()
        host = tree("((a,b),c);", taxa)
        star = tree("(a,b,c);", TaxonTable())
        assert displays(host, star)       # resolved displays unresolved
        assert not displays(tree("(a,b,c);"), tree("((a,b),c);"))

    def test_conflict(self, taxa):
        assert not displays(tree("((a,b),c);", taxa),
                            tree("((b,c),a);", taxa))

    def test_missing_species_raises(self, taxa):
        with pytest.raises(ValueError, match="missing"):
            displays(tree("(a,b);", taxa), tree("(a,c);", taxa))

    def test_supertree_example(self):
        p = profile("((a,b),c);((c,d),b);")
        host = tree("((a,b),(c,d));", p.taxa)
        assert all(displays(host, t) for t in p.trees)


class TestTriples:
    def test_resolved_cherry(self):
        t = tree("((a,b),c);")
        assert triples_of(t) == {make_triple(0, 1, 2)}

    def test_star_has_none(self):
        assert triples_of(tree("(a,b,c);")) == set()

    def test_balanced_quartet(self):
        t = tree("((a,b),(c,d));")
        assert triples_of(t) == {
            make_triple(0, 1, 2), make_triple(0, 1, 3),
            make_triple(2, 3, 0), make_triple(2, 3, 1)}

    def test_count_binary(self):
        # a fully resolved tree induces one triple per 3-subset
        t = tree("(((a,b),(c,d)),(e,f));")
        assert len(triples_of(t)) == 20

    def test_normalization(self):
        assert make_triple(5, 2, 9) == make_triple(2, 5, 9)
        with pytest.raises(ValueError):
            make_triple(3, 3, 1)


class TestTripletGraph:
    def test_components_split(self):
        p = profile("((a,b),c);((c,d),b);")
        adj = triplet_graph(p, p.taxa_set)
        comps = {frozenset(c) for c in components_of(adj)}
        assert comps == {frozenset({0, 1}), frozenset({2, 3})}

    def test_incompatible_stays_connected(self):
        p = profile("((a,b),c);((b,c),a);")
        assert len(components_of(triplet_graph(p, p.taxa_set))) == 1

    def test_isolated_vertices_kept(self):
        p = profile("(a,b,c);")
        adj = triplet_graph(p, p.taxa_set)
        assert len(components_of(adj)) == 3


@st.composite
def tree_and_subset(draw):
    n = draw(st.integers(min_value=2, max_value=9))
    import random as _random
    rng = _random.Random(draw(st.integers(min_value=0, max_value=10 ** 9)))
    from treecompat.gen import _random_binary
    t = _random_binary(list(range(n)), rng)
    keep = draw(st.sets(st.integers(min_value=0, max_value=n - 1),
                        min_size=1, max_size=n))
    return t, keep


@given(tree_and_subset())
@settings(max_examples=200, deadline=None)
def test_restrict_preserves_display(pair):
    t, keep = pair
    assert displays(t, restrict(t, keep))


@given(tree_and_subset(), tree_and_subset())
@settings(max_examples=200, deadline=None)
def test_displays_iff_triples_subset(p1, p2):
    # on a common leaf set, display is equivalent to triple containment
    t1, _ = p1
    t2, _ = p2
    common = t1.taxa_set & t2.taxa_set
    if len(common) < 2:
        return
    a = restrict(t1, common)
    b = restrict(t2, common)
    assert displays(a, b) == (triples_of(b) <= triples_of(a))
