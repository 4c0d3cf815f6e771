"""Parser/serializer: grammar coverage, error reporting, round-trips."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treecompat.newick import (NewickError, parse_profile, parse_tree,
                               write_profile, write_tree)
from treecompat.phylo import PhyloTree, isomorphic
from treecompat.taxa import TaxonTable

from conftest import profile, tree


class TestParse:
    def test_cherry(self, taxa):
        t = parse_tree("(a,b);", taxa)
        assert t.taxa_set == {taxa.id_of("a"), taxa.id_of("b")}
        assert t.n_nodes == 3

    def test_single_leaf(self, taxa):
        t = parse_tree("a;", taxa)
        assert t.n_nodes == 1
        assert t.taxon[t.root] == taxa.id_of("a")

    def test_multifurcation(self, taxa):
        t = parse_tree("(a,b,c,d);", taxa)
        assert len(t.children[t.root]) == 4

    def test_unary_chain_contracted(self, taxa):
        t = parse_tree("(((a)),(b,c));", taxa)
        assert isomorphic(t, parse_tree("(a,(b,c));", TaxonTable()))

    def test_branch_lengths_discarded(self, taxa):
        t = parse_tree("((a:0.1,b:2e-3)inner:1.5,c:3);", taxa)
        assert isomorphic(t, parse_tree("((a,b),c);", TaxonTable()))

    def test_comments_skipped(self, taxa):
        t = parse_tree("([comment](a[x],b)[nested [brackets]],c);", taxa)
        assert isomorphic(t, parse_tree("((a,b),c);", TaxonTable()))

    def test_quoted_labels(self, taxa):
        t = parse_tree("('Homo sapiens','it''s',c);", taxa)
        assert "Homo sapiens" in taxa
        assert "it's" in taxa
        assert t.n_nodes == 4

    def test_whitespace_insensitive(self, taxa):
        t = parse_tree("  ( a ,\n\t( b , c ) ) ;\n", taxa)
        assert isomorphic(t, parse_tree("(a,(b,c));", TaxonTable()))

    def test_shared_taxon_table(self):
        p = profile("((a,b),c);((c,d),b);")
        assert p.k == 2
        assert len(p.taxa) == 4
        assert p.trees[0].taxa_set & p.trees[1].taxa_set


class TestParseErrors:
    @pytest.mark.parametrize("text", [
        "", ";", "();", "(a,b)", "(a,,b);", "((a,b);", "(a,b));",
        "(a,'b);", "(a,b)c d;", "(a,[b);",
    ])
    def test_malformed(self, text, taxa):
        with pytest.raises(NewickError):
            parse_profile(text, taxa)

    def test_duplicate_leaf_label(self, taxa):
        with pytest.raises(NewickError, match="duplicate"):
            parse_tree("((a,b),a);", taxa)

    def test_error_carries_position(self, taxa):
        with pytest.raises(NewickError) as ei:
            parse_tree("(a,,b);", taxa)
        assert ei.value.position is not None

    def test_error_carries_tree_index(self, taxa):
        with pytest.raises(NewickError) as ei:
            parse_profile("(a,b);(c,,d);", taxa)
        assert ei.value.tree_index == 1

    def test_parse_tree_rejects_multiple(self, taxa):
        with pytest.raises(NewickError, match="exactly one"):
            parse_tree("(a,b);(c,d);", taxa)

    def test_duplicate_across_trees_allowed(self, taxa):
        p = parse_profile("(a,b);(a,c);", taxa)
        assert p.k == 2


class TestWrite:
    def test_canonical_child_order(self, taxa):
        # canonical order is by minimum taxon id, i.e. interning order
        for name in "abc":
            taxa.intern(name)
        t = parse_tree("((c,b),a);", taxa)
        assert write_tree(t.canonicalized(), taxa) == "(a,(b,c));"

    def test_label_quoting(self, taxa):
        t = parse_tree("('a b','c''d');", taxa)
        out = write_tree(t, taxa)
        assert out == "('a b','c''d');"
        assert isomorphic(parse_tree(out, taxa), t)

    def test_profile_round_trip(self):
        p = profile("((a,b),c);((c,d),b);\n")
        out = write_profile(p)
        p2 = profile(out)
        assert p2.k == p.k
        assert all(isomorphic(a, b) for a, b in zip(p.trees, p2.trees))
        assert write_profile(p2) == out


@st.composite
def nested_trees(draw, max_leaves=8):
    n = draw(st.integers(min_value=1, max_value=max_leaves))
    leaves = list(range(n))

    def build(block):
        if len(block) == 1:
            return block[0]
        cuts = draw(st.integers(min_value=2, max_value=len(block)))
        idx = sorted(draw(st.sets(
            st.integers(min_value=1, max_value=len(block) - 1),
            min_size=cuts - 1, max_size=cuts - 1)))
        blocks, prev = [], 0
        for i in idx + [len(block)]:
            blocks.append(block[prev:i])
            prev = i
        return [build(b) for b in blocks]

    return PhyloTree.from_nested(build(leaves))


@given(nested_trees())
@settings(max_examples=150, deadline=None)
def test_round_trip_random(t):
    taxa = TaxonTable()
    for i in range(len(t.taxa_set)):
        taxa.intern(f"x{i}")
    text = write_tree(t, taxa)
    again = parse_tree(text, taxa)
    assert isomorphic(t, again)
    assert write_tree(again.canonicalized(), taxa) == \
        write_tree(t.canonicalized(), taxa)
