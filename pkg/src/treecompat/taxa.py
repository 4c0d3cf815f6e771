"""Interning table mapping species names to dense integer ids.

A single :class:`TaxonTable` is shared by every tree of a profile, so that
identical labels across trees refer to the same species.  The table is the
only mutable object in the parsing pipeline; use one table per profile and
do not share it across threads without external locking.
"""

from __future__ import annotations


class TaxonTable:
    """Bijection between species names and ids ``0..len(table)-1``."""

    __slots__ = ("_names", "_index")

    def __init__(self):
        self._names: list[str] = []
        self._index: dict[str, int] = {}

    def intern(self, name: str) -> int:
        """Return the id for *name*, assigning a fresh one if unseen."""
        idx = self._index.get(name)
        if idx is None:
            idx = len(self._names)
            self._index[name] = idx
            self._names.append(name)
        return idx

    def id_of(self, name: str) -> int:
        """Return the id for *name*; raises KeyError if not interned."""
        return self._index[name]

    def name_of(self, taxon: int) -> str:
        return self._names[taxon]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    def names(self) -> list[str]:
        return list(self._names)
