"""Random profiles and the slow baselines that keep the fast path honest.

Generates compatible-by-construction profiles at both degree extremes,
perturbs one into unknown territory, and cross-checks the fast verdict
against the classic triplet-graph recursion and exhaustive search.

Run: python3 demos/demo_generators_and_oracles.py
"""

from treecompat import (GenConfig, brute_force_compatible, build_classic,
                        buildg, gen_compatible, gen_perturbed,
                        write_profile)

# Compatible by construction: every tree is a restriction of one hidden
# base supertree.
cfg = GenConfig(seed=7, n_species=8, k_trees=3, coverage=0.6,
                resolution="binary")
p = gen_compatible(cfg)
print("generated profile (binary shape):")
print(write_profile(p))
print("fast verdict:   ", buildg(p) is not None)
print("classic verdict:", build_classic(p) is not None)
print("brute force:    ", brute_force_compatible(
    gen_compatible(GenConfig(seed=7, n_species=5, k_trees=3))))

# Star-heavy trees keep nearly all leaves as direct children of a few
# internal nodes -- the unresolved extreme.
star = gen_compatible(GenConfig(seed=7, n_species=30, k_trees=2,
                                coverage=1.0, resolution="star"))
degrees = [len(ch) for t in star.trees for ch in t.children if ch]
print("\nstar shape max child count:", max(degrees))

# Leaf-label swaps may or may not break compatibility; the three
# deciders always agree on the verdict.
for swaps in (0, 1, 2, 3):
    q = gen_perturbed(GenConfig(seed=12, n_species=10, k_trees=4,
                                perturb=swaps))
    fast = buildg(q) is not None
    slow = build_classic(q) is not None
    print(f"perturb={swaps}: fast={fast} classic={slow} agree={fast == slow}")
