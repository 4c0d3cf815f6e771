"""Newick parsing and serialization.

Accepted dialect: quoted labels ('...', with '' escaping), branch
lengths, internal-node labels, and [bracketed] comments.  Annotations
are parsed and discarded; the compatibility machinery is shape-only.
Unary internal chains are contracted silently, so every internal node
of a parsed tree has at least two children.

Serialization is canonical: children are ordered by the minimum taxon
id in their clusters, so parse-write round trips are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .phylo import NO_TAXON, PhyloTree, Profile
from .taxa import TaxonTable

_SPECIAL = set("()[]:;, \t\r\n'")


class NewickError(ValueError):
    """Malformed Newick input; carries a character position."""

    def __init__(self, message: str, position: int | None = None,
                 tree_index: int | None = None):
        self.message = message
        self.position = position
        self.tree_index = tree_index
        loc = ""
        if tree_index is not None:
            loc += f" (tree {tree_index + 1}"
            loc += f", position {position})" if position is not None else ")"
        elif position is not None:
            loc += f" (position {position})"
        super().__init__(message + loc)


@dataclass
class NewickDocument:
    """Raw semicolon-terminated tree descriptions from one source."""
    trees: list[str]
    source_name: str = "<string>"


class _Scanner:
    def __init__(self, text: str, base: int = 0):
        self.text = text
        self.i = 0
        self.base = base  # offset for error positions

    def err(self, msg: str) -> NewickError:
        return NewickError(msg, position=self.base + self.i)

    def skip_space(self):
        text, n = self.text, len(self.text)
        while self.i < n:
            ch = text[self.i]
            if ch in " \t\r\n":
                self.i += 1
            elif ch == "[":
                depth = 1
                self.i += 1
                while self.i < n and depth:
                    if text[self.i] == "[":
                        depth += 1
                    elif text[self.i] == "]":
                        depth -= 1
                    self.i += 1
                if depth:
                    raise self.err("unterminated comment")
            else:
                return

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.i += 1
        return ch

    def label(self) -> str:
        """Read a (possibly quoted) label; empty string if none present."""
        self.skip_space()
        text, n = self.text, len(self.text)
        if self.i < n and text[self.i] == "'":
            self.i += 1
            out = []
            while True:
                if self.i >= n:
                    raise self.err("unterminated quoted label")
                ch = text[self.i]
                if ch == "'":
                    if self.i + 1 < n and text[self.i + 1] == "'":
                        out.append("'")
                        self.i += 2
                    else:
                        self.i += 1
                        return "".join(out)
                else:
                    out.append(ch)
                    self.i += 1
        start = self.i
        while self.i < n and text[self.i] not in _SPECIAL and text[self.i] != "[":
            self.i += 1
        return text[start:self.i]

    def branch_length(self):
        if self.peek() == ":":
            self.i += 1
            self.skip_space()
            text, n = self.text, len(self.text)
            start = self.i
            while self.i < n and (text[self.i].isdigit()
                                  or text[self.i] in "+-.eE"):
                self.i += 1
            if self.i == start:
                raise self.err("missing branch length after ':'")


def _subtree_iterative(sc: _Scanner, taxa: TaxonTable,
                       seen_labels: set[str]):
    # Nesting depth can exceed Python's recursion limit on caterpillar
    # inputs, so the descent runs on an explicit stack.
    def leaf():
        name = sc.label()
        if not name:
            raise sc.err("empty leaf label")
        if name in seen_labels:
            raise sc.err(f"duplicate leaf label {name!r} within one tree")
        seen_labels.add(name)
        sc.branch_length()
        return taxa.intern(name)

    # stack holds children-lists of currently open '(' groups
    stack: list[list] = []
    current = None
    while True:
        ch = sc.peek()
        if ch == "(":
            sc.take()
            stack.append([])
            continue
        current = leaf()
        # close as many groups as possible
        while True:
            stack and stack[-1].append(current)
            if not stack:
                return current
            ch = sc.peek()
            if ch == ",":
                sc.take()
                break
            if ch == ")":
                sc.take()
                sc.label()
                sc.branch_length()
                kids = stack.pop()
                current = kids[0] if len(kids) == 1 else kids
                if not stack:
                    return current
                # re-enter loop to append to parent and read separator
                continue
            raise sc.err("expected ')' or ','")


def _split_documents(text: str, source_name: str) -> NewickDocument:
    """Split on top-level semicolons, respecting quotes and comments."""
    trees: list[str] = []
    buf_start = 0
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "'":
            i += 1
            while i < n:
                if text[i] == "'":
                    if i + 1 < n and text[i + 1] == "'":
                        i += 2
                        continue
                    break
                i += 1
            if i >= n:
                raise NewickError("unterminated quoted label", position=i)
            i += 1
        elif ch == "[":
            depth = 1
            i += 1
            while i < n and depth:
                if text[i] == "[":
                    depth += 1
                elif text[i] == "]":
                    depth -= 1
                i += 1
            if depth:
                raise NewickError("unterminated comment", position=i)
        elif ch == ";":
            trees.append(text[buf_start:i])
            buf_start = i + 1
            i += 1
        else:
            i += 1
    tail = text[buf_start:].strip()
    if tail:
        raise NewickError("trailing text without terminating ';'",
                          position=len(text))
    return NewickDocument(trees=trees, source_name=source_name)


def parse_tree(text: str, taxa: TaxonTable) -> PhyloTree:
    """Parse a single semicolon-terminated Newick tree.

    Leaf labels are interned into *taxa*; branch lengths, internal labels
    and comments are discarded; unary chains are contracted.
    """
    doc = _split_documents(text, "<string>")
    if len(doc.trees) != 1:
        raise NewickError(f"expected exactly one tree, found {len(doc.trees)}")
    return _parse_body(doc.trees[0], taxa)


def _parse_body(body: str, taxa: TaxonTable, base: int = 0) -> PhyloTree:
    sc = _Scanner(body, base)
    seen: set[str] = set()
    nested = _subtree_iterative(sc, taxa, seen)
    sc.skip_space()
    if sc.i != len(body):
        raise sc.err("unexpected trailing characters in tree")
    return PhyloTree.from_nested(nested)


def parse_profile(text: str, taxa: TaxonTable,
                  source_name: str = "<string>") -> Profile:
    """Parse one or more trees, sharing taxon ids across trees."""
    doc = _split_documents(text, source_name)
    if not doc.trees:
        raise NewickError(f"no trees in {source_name}")
    trees = []
    offset = 0
    for idx, body in enumerate(doc.trees):
        try:
            trees.append(_parse_body(body, taxa, base=offset))
        except NewickError as e:
            raise NewickError(e.message, position=e.position,
                              tree_index=idx) from None
        offset += len(body) + 1
    return Profile(trees=trees, taxa=taxa)


def _format_label(name: str) -> str:
    if name and not any(c in _SPECIAL or c == "[" for c in name):
        return name
    return "'" + name.replace("'", "''") + "'"


def write_tree(t: PhyloTree, taxa: TaxonTable) -> str:
    """Canonical Newick for *t*: children ordered by minimum taxon id."""
    m = t.min_taxon_below()
    out: list[str] = []
    # explicit stack of (node, iterator over sorted children, opened?)
    OPEN, CLOSE, LEAF = 0, 1, 2
    stack: list[tuple[int, int]] = [(OPEN, t.root)]
    while stack:
        op, v = stack.pop()
        if op == CLOSE:
            out.append(")")
            continue
        if op == LEAF:
            out.append(",")
            continue
        ch = t.children[v]
        if not ch:
            out.append(_format_label(taxa.name_of(t.taxon[v])))
        else:
            out.append("(")
            stack.append((CLOSE, v))
            ordered = sorted(ch, key=lambda c: m[c])
            rev: list[tuple[int, int]] = []
            for j, c in enumerate(ordered):
                if j:
                    rev.append((LEAF, -1))
                rev.append((OPEN, c))
            stack.extend(reversed(rev))
    return "".join(out) + ";"


def write_profile(p: Profile) -> str:
    return "\n".join(write_tree(t, p.taxa) for t in p.trees) + "\n"
