"""Shared helpers: parse profiles from literals, random tree strategies."""

from __future__ import annotations

import random

import pytest

from treecompat.gen import GenConfig, gen_compatible, gen_perturbed
from treecompat.newick import parse_profile, parse_tree
from treecompat.phylo import PhyloTree, Profile
from treecompat.taxa import TaxonTable


def profile(text: str) -> Profile:
    """Profile from a Newick literal, fresh taxon table."""
    return parse_profile(text, TaxonTable())


def tree(text: str, taxa: TaxonTable | None = None) -> PhyloTree:
    return parse_tree(text, taxa if taxa is not None else TaxonTable())


def random_profiles(seed: int, count: int, max_species: int, max_trees: int,
                    min_species: int = 3):
    """Stream of seeded random profiles mixing shapes and perturbations."""
    rng = random.Random(seed)
    for _ in range(count):
        cfg = GenConfig(seed=rng.getrandbits(48),
                        n_species=rng.randint(min_species, max_species),
                        k_trees=rng.randint(1, max_trees),
                        coverage=rng.uniform(0.45, 1.0),
                        resolution=rng.choice(("binary", "star", "mixed")),
                        perturb=rng.choice((0, 0, 0, 1, 1, 2, 3)))
        yield gen_perturbed(cfg) if cfg.perturb else gen_compatible(cfg)


@pytest.fixture
def taxa():
    return TaxonTable()
