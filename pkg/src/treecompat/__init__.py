"""treecompat: near-linear rooted tree compatibility and supertrees.

Decides whether a collection of rooted phylogenetic trees (a *profile*)
can be merged into a single supertree displaying all of them, and builds
such a supertree when one exists.  The core runs in O(M log^2 M) time
for a profile of total size M, backed by a fully dynamic graph
connectivity structure, and is accompanied by slow trusted oracles for
validation, seeded profile generators, and a benchmark harness.
"""

from .buildg import BuildStats, buildg, check_only, run_buildg
from .dynconn import DynGraph, SplitReport
from .gen import GenConfig, gen_compatible, gen_perturbed
from .newick import (NewickDocument, NewickError, parse_profile, parse_tree,
                     write_profile, write_tree)
from .oracle import (NaiveConnectivity, brute_force_compatible, build_classic,
                     enumerate_trees)
from .phylo import (NO_TAXON, PhyloTree, Profile, RootedTriple, displays,
                    isomorphic, restrict, triples_of, triplet_graph)
from .taxa import TaxonTable

__version__ = "0.1.0"

__all__ = [
    "BuildStats", "buildg", "check_only", "run_buildg",
    "DynGraph", "SplitReport",
    "GenConfig", "gen_compatible", "gen_perturbed",
    "NewickDocument", "NewickError", "parse_profile", "parse_tree",
    "write_profile", "write_tree",
    "NaiveConnectivity", "brute_force_compatible", "build_classic",
    "enumerate_trees",
    "NO_TAXON", "PhyloTree", "Profile", "RootedTriple", "displays",
    "isomorphic", "restrict", "triples_of", "triplet_graph",
    "TaxonTable",
    "__version__",
]
