"""Fully dynamic graph connectivity (Holm–de Lichtenberg–Thorup).

The structure maintains a hierarchy of spanning forests F_0 ⊇ F_1 ⊇ ...
where every edge carries a level and F_i spans the edges of level >= i.
Each forest tree is an Euler tour stored in a treap ordered by implicit
position; the tour holds one self-loop node per vertex plus two arc
nodes per tree edge.  Deleting a tree edge at level l triggers the usual
replacement search: walk levels l..0, promote the smaller side's tree
edges, then scan its level-i non-tree edges for a reconnecting edge.
Amortized cost per update is O(log^2 n); components at level i never
exceed ⌊n / 2^i⌋ vertices.

Aggregates maintained per treap subtree:

* ``na``     -- number of self-loop nodes (vertex count of a component);
* ``agg_adj``-- some vertex below has non-tree edges at this level;
* ``agg_lvl``-- some arc below represents a tree edge of exactly this
  level (drives promotion enumeration).

The vertex set is fixed at construction.  Single writer; queries must
not race with updates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator


class _Node:
    """One Euler-tour position: a vertex self-loop (a == b) or an arc."""

    __slots__ = ("prio", "left", "right", "parent", "a", "b",
                 "n", "na", "val_adj", "agg_adj", "val_lvl", "agg_lvl")

    def __init__(self, a: int, b: int, prio: int):
        self.prio = prio
        self.left = None
        self.right = None
        self.parent = None
        self.a = a
        self.b = b
        self.n = 1
        self.na = 1 if a == b else 0
        self.val_adj = False
        self.agg_adj = False
        self.val_lvl = False
        self.agg_lvl = False


def _update(x: _Node):
    # aggregate recomputation; inlined in the hot loops below
    n = 1
    na = 1 if x.a == x.b else 0
    aa = x.val_adj
    al = x.val_lvl
    l = x.left
    if l is not None:
        n += l.n
        na += l.na
        aa = aa or l.agg_adj
        al = al or l.agg_lvl
    r = x.right
    if r is not None:
        n += r.n
        na += r.na
        aa = aa or r.agg_adj
        al = al or r.agg_lvl
    x.n = n
    x.na = na
    x.agg_adj = aa
    x.agg_lvl = al


def _pull(x: _Node):
    while x is not None:
        n = 1
        na = 1 if x.a == x.b else 0
        aa = x.val_adj
        al = x.val_lvl
        l = x.left
        if l is not None:
            n += l.n
            na += l.na
            aa = aa or l.agg_adj
            al = al or l.agg_lvl
        r = x.right
        if r is not None:
            n += r.n
            na += r.na
            aa = aa or r.agg_adj
            al = al or r.agg_lvl
        x.n = n
        x.na = na
        x.agg_adj = aa
        x.agg_lvl = al
        x = x.parent


def _root(x: _Node) -> _Node:
    while x.parent is not None:
        x = x.parent
    return x


def _merge(a, b):
    """Concatenate two detached treaps; iterative along the touch spine."""
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        root = cur = a
        a = a.right
        dir_right = True
    else:
        root = cur = b
        b = b.left
        dir_right = False
    while a is not None and b is not None:
        if a.prio > b.prio:
            nxt = a
            a = a.right
            nxt_right = True
        else:
            nxt = b
            b = b.left
            nxt_right = False
        if dir_right:
            cur.right = nxt
        else:
            cur.left = nxt
        nxt.parent = cur
        cur = nxt
        dir_right = nxt_right
    rem = a if a is not None else b
    if dir_right:
        cur.right = rem
    else:
        cur.left = rem
    if rem is not None:
        rem.parent = cur
    x = cur
    while True:
        n = 1
        na = 1 if x.a == x.b else 0
        aa = x.val_adj
        al = x.val_lvl
        l = x.left
        if l is not None:
            n += l.n
            na += l.na
            aa = aa or l.agg_adj
            al = al or l.agg_lvl
        r = x.right
        if r is not None:
            n += r.n
            na += r.na
            aa = aa or r.agg_adj
            al = al or r.agg_lvl
        x.n = n
        x.na = na
        x.agg_adj = aa
        x.agg_lvl = al
        if x is root:
            return root
        x = x.parent


def _split_before(x: _Node):
    """Split the treap containing *x* into (prefix, suffix starting at x)."""
    left_acc = x.left
    if left_acc is not None:
        left_acc.parent = None
        x.left = None
    right_acc = x
    _update(x)
    cur = x
    p = x.parent
    x.parent = None
    while p is not None:
        gp = p.parent
        p.parent = None
        if p.right is cur:
            p.right = left_acc
            if left_acc is not None:
                left_acc.parent = p
            left_acc = p
        else:
            p.left = right_acc
            if right_acc is not None:
                right_acc.parent = p
            right_acc = p
        _update(p)
        cur = p
        p = gp
    return left_acc, right_acc


def _split_after(x: _Node):
    """Split into (prefix ending at x, suffix)."""
    right_acc = x.right
    if right_acc is not None:
        right_acc.parent = None
        x.right = None
    left_acc = x
    _update(x)
    cur = x
    p = x.parent
    x.parent = None
    while p is not None:
        gp = p.parent
        p.parent = None
        if p.right is cur:
            p.right = left_acc
            if left_acc is not None:
                left_acc.parent = p
            left_acc = p
        else:
            p.left = right_acc
            if right_acc is not None:
                right_acc.parent = p
            right_acc = p
        _update(p)
        cur = p
        p = gp
    return left_acc, right_acc


def _index(x: _Node) -> int:
    idx = x.left.n if x.left is not None else 0
    while x.parent is not None:
        p = x.parent
        if p.right is x:
            idx += (p.left.n if p.left is not None else 0) + 1
        x = p
    return idx


def _first(t: _Node) -> _Node:
    while t.left is not None:
        t = t.left
    return t


def _find_flag(t: _Node, adj: bool) -> _Node:
    """Descend to some node with the requested flag set."""
    while True:
        if (t.val_adj if adj else t.val_lvl):
            return t
        l = t.left
        if l is not None and (l.agg_adj if adj else l.agg_lvl):
            t = l
            continue
        t = t.right


@dataclass
class SplitReport:
    """Outcome of a component-splitting deletion."""
    smaller: _Node          # component handle (treap root) of smaller side
    larger: _Node
    smaller_size: int


def _ck(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class DynGraph:
    """Fully dynamic connectivity over a fixed vertex set ``0..n-1``."""

    def __init__(self, n: int, seed: int = 0x5DEECE66D):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self._levels = max(1, n.bit_length())
        self._rand = random.Random(seed).getrandbits
        # per level: vertex -> self-loop node (created lazily)
        self._loops: list[dict[int, _Node]] = [dict()
                                               for _ in range(self._levels + 1)]
        # per level: canonical edge -> (arc, arc) for tree edges in F_i
        self._arcs: list[dict[tuple[int, int], tuple[_Node, _Node]]] = \
            [dict() for _ in range(self._levels + 1)]
        # per level: vertex -> set of non-tree neighbors at exactly level i
        self._adj: list[dict[int, set[int]]] = \
            [dict() for _ in range(self._levels + 1)]
        self._edge_level: dict[tuple[int, int], int] = {}
        self._tree_edges: set[tuple[int, int]] = set()

    # -- internal helpers ------------------------------------------------

    def _loop(self, v: int, i: int) -> _Node:
        node = self._loops[i].get(v)
        if node is None:
            node = _Node(v, v, self._rand(30))
            self._loops[i][v] = node
        return node

    def _reroot(self, x: _Node) -> _Node:
        t = _root(x)
        if _first(t) is x:
            return t
        left, right = _split_before(x)
        return _merge(right, left)

    def _link(self, u: int, v: int, i: int, mark: bool):
        tu = self._reroot(self._loop(u, i))
        tv = self._reroot(self._loop(v, i))
        e1 = _Node(u, v, self._rand(30))
        e2 = _Node(v, u, self._rand(30))
        e1.val_lvl = mark
        _update(e1)
        self._arcs[i][_ck(u, v)] = (e1, e2)
        _merge(_merge(_merge(tu, e1), tv), e2)

    def _cut(self, u: int, v: int, i: int):
        e1, e2 = self._arcs[i].pop(_ck(u, v))
        if _index(e2) < _index(e1):
            e1, e2 = e2, e1
        before, _rest = _split_before(e1)
        _mid, after = _split_after(e2)
        # between the two arcs lies the detached side's tour; strip the
        # arc nodes off both ends and leave it as its own treap
        _split_after(e1)
        _split_before(e2)
        _merge(before, after)

    def _adj_add(self, x: int, y: int, i: int):
        s = self._adj[i].get(x)
        if s is None:
            self._adj[i][x] = {y}
            node = self._loop(x, i)
            node.val_adj = True
            _pull(node)
        else:
            s.add(y)

    def _adj_remove(self, x: int, y: int, i: int):
        s = self._adj[i][x]
        s.remove(y)
        if not s:
            del self._adj[i][x]
            node = self._loops[i][x]
            node.val_adj = False
            _pull(node)

    def _clear_lvl_mark(self, e1: _Node, e2: _Node):
        if e1.val_lvl:
            e1.val_lvl = False
            _pull(e1)
        if e2.val_lvl:
            e2.val_lvl = False
            _pull(e2)

    # -- public operations -----------------------------------------------

    def insert_edge(self, u: int, v: int) -> bool:
        """Insert edge (u, v) at level 0; True iff two components merged."""
        self._check_pair(u, v)
        key = _ck(u, v)
        if key in self._edge_level:
            raise ValueError(f"edge {key} already present")
        self._edge_level[key] = 0
        if self.connected(u, v):
            self._adj_add(u, v, 0)
            self._adj_add(v, u, 0)
            return False
        self._tree_edges.add(key)
        self._link(u, v, 0, mark=True)
        return True

    def delete_edge(self, u: int, v: int) -> SplitReport | None:
        """Remove edge (u, v); report the split if no replacement exists."""
        self._check_pair(u, v)
        key = _ck(u, v)
        level = self._edge_level.pop(key, None)
        if level is None:
            raise ValueError(f"edge {key} not present")
        if key not in self._tree_edges:
            self._adj_remove(u, v, level)
            self._adj_remove(v, u, level)
            return None
        self._tree_edges.remove(key)
        for i in range(level, -1, -1):
            self._cut(u, v, i)
        if self._replace(u, v, level):
            return None
        ru = _root(self._loops[0].get(u) or self._loop(u, 0))
        rv = _root(self._loops[0].get(v) or self._loop(v, 0))
        if ru.na <= rv.na:
            return SplitReport(smaller=ru, larger=rv, smaller_size=ru.na)
        return SplitReport(smaller=rv, larger=ru, smaller_size=rv.na)

    def _replace(self, u: int, v: int, level: int) -> bool:
        loops = self._loops
        for i in range(level, -1, -1):
            ru = _root(loops[i][u])
            rv = _root(loops[i][v])
            if ru.na > rv.na:
                small_root = rv
            else:
                small_root = ru
            # Promote the smaller side's level-i tree edges to level i+1.
            # Flag updates never rotate the treap, so small_root stays valid.
            while small_root.agg_lvl:
                arc = _find_flag(small_root, adj=False)
                a, b = arc.a, arc.b
                ekey = _ck(a, b)
                pair = self._arcs[i][ekey]
                self._clear_lvl_mark(*pair)
                self._edge_level[ekey] = i + 1
                self._link(a, b, i + 1, mark=True)
            # Scan level-i non-tree edges incident to the smaller side.
            while small_root.agg_adj:
                node = _find_flag(small_root, adj=True)
                x = node.a
                for y in tuple(self._adj[i][x]):
                    if _root(loops[i][y]) is small_root:
                        # both endpoints small side: promote
                        self._adj_remove(x, y, i)
                        self._adj_remove(y, x, i)
                        self._edge_level[_ck(x, y)] = i + 1
                        self._adj_add(x, y, i + 1)
                        self._adj_add(y, x, i + 1)
                    else:
                        # reconnects the two sides: becomes a tree edge
                        self._adj_remove(x, y, i)
                        self._adj_remove(y, x, i)
                        self._tree_edges.add(_ck(x, y))
                        for j in range(i + 1):
                            self._link(x, y, j, mark=(j == i))
                        return True
        return False

    def connected(self, u: int, v: int) -> bool:
        self._check_pair(u, v, allow_equal=True)
        if u == v:
            return True
        nu = self._loops[0].get(u)
        nv = self._loops[0].get(v)
        if nu is None or nv is None:
            return False
        return _root(nu) is _root(nv)

    def component_size(self, u: int) -> int:
        self._check_vertex(u)
        node = self._loops[0].get(u)
        return _root(node).na if node is not None else 1

    def iter_component(self, u: int) -> Iterator[int]:
        """Yield each vertex of u's component exactly once."""
        self._check_vertex(u)
        node = self._loops[0].get(u)
        if node is None:
            yield u
            return
        yield from self.iter_handle(_root(node))

    def iter_handle(self, handle: _Node) -> Iterator[int]:
        """Iterate the vertices of the component with the given handle."""
        stack = [handle]
        while stack:
            x = stack.pop()
            if x.a == x.b:
                yield x.a
            if x.left is not None:
                stack.append(x.left)
            if x.right is not None:
                stack.append(x.right)

    def component_handle(self, u: int):
        """Transient component key: equal iff same component; invalidated
        by the next update."""
        self._check_vertex(u)
        node = self._loops[0].get(u)
        return _root(node) if node is not None else ("isolated", u)

    # -- validation ------------------------------------------------------

    def _check_vertex(self, u: int):
        if not 0 <= u < self.n:
            raise IndexError(f"vertex {u} out of range")

    def _check_pair(self, u: int, v: int, allow_equal: bool = False):
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v and not allow_equal:
            raise ValueError("self-loops not supported")

    def check_level_invariant(self):
        """Debug walk: components of F_i have at most ⌊n / 2^i⌋ vertices."""
        for i in range(self._levels + 1):
            seen: set[int] = set()
            for node in self._loops[i].values():
                r = _root(node)
                if id(r) in seen:
                    continue
                seen.add(id(r))
                if i > 0 and r.na > self.n // (1 << i):
                    raise AssertionError(
                        f"level {i} component of size {r.na} exceeds "
                        f"{self.n // (1 << i)}")
