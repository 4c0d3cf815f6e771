"""Build a supertree from overlapping input trees, or prove none exists.

Walks through the core use case: parse a Newick profile, test
compatibility, print the merged supertree, and show what an
incompatible profile looks like.

Run: python3 demos/demo_supertree.py
"""

from treecompat import (TaxonTable, buildg, displays, parse_profile,
                        write_tree)

# Two studies resolved overlapping species sets.  Tree 1 knows about
# a, b, c; tree 2 about b, c, d.  Neither alone orders all four.
TEXT = "((a,b),c);((c,d),b);"

taxa = TaxonTable()
profile = parse_profile(TEXT, taxa)
print("input profile:")
for t in profile.trees:
    print("   ", write_tree(t, taxa))

supertree = buildg(profile)
print("\nsupertree:", write_tree(supertree, taxa))
for i, t in enumerate(profile.trees):
    print(f"  displays input {i + 1}:", displays(supertree, t))

# Flip one grouping and the profile becomes jointly unsatisfiable:
# ab|c and bc|a cannot hold in the same rooted tree.
conflict = parse_profile("((a,b),c);((b,c),a);", TaxonTable())
print("\nconflicting profile -> supertree is", buildg(conflict))
