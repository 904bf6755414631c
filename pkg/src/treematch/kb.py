"""Weighted directed graph of head -> dependent co-occurrence counts.

Nodes are lowercase lemmas, edges carry the number of times the
dependency relation was seen. Built by merging parse trees; queried for
dependents and connection strengths during disambiguation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .corpus import CONTENT_POS, ParseTree


class KbFormatError(ValueError):
    """Malformed TMKB file."""


@dataclass
class KbStats:
    node_count: int
    edge_count: int  # distinct directed (head, dependent) pairs
    total_weight: int
    avg_connections: float  # mean in-degree + out-degree per node
    avg_dependents: float  # mean out-degree per node


class KnowledgeBase:
    """Mutable while building, treated as immutable once queried."""

    def __init__(self) -> None:
        self.nodes: set[str] = set()
        self._adj: dict[str, dict[str, int]] = {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return self.nodes == other.nodes and self._adj == other._adj

    def __repr__(self) -> str:
        return f"KnowledgeBase(nodes={len(self.nodes)}, edges={self.edge_count})"

    def add_edge(self, head: str, dependent: str, count: int = 1) -> None:
        if count < 1:
            raise ValueError(f"edge count must be >= 1, got {count}")
        self.nodes.add(head)
        self.nodes.add(dependent)
        dependents = self._adj.setdefault(head, {})
        dependents[dependent] = dependents.get(dependent, 0) + count

    def merge_tree(self, tree: ParseTree, content_pos: frozenset[str] = CONTENT_POS) -> None:
        """Count every head -> dependent edge between two content words."""
        nodes = tree.nodes
        for node in nodes:
            if node.head == 0:
                continue
            head = nodes[node.head - 1]
            if node.is_content(content_pos) and head.is_content(content_pos):
                self.add_edge(head.lemma, node.lemma)

    def merge(self, other: KnowledgeBase) -> None:
        """Fold another graph in: union of nodes, edge counts summed."""
        self.nodes |= other.nodes
        for head, dependents in other._adj.items():
            for dependent, count in dependents.items():
                self.add_edge(head, dependent, count)

    def copy(self) -> KnowledgeBase:
        out = KnowledgeBase()
        out.merge(self)
        return out

    def dependents_of(self, head: str) -> dict[str, int]:
        """All dependents of a head lemma with counts; empty when unknown."""
        return dict(self._adj.get(head, ()))

    def connection_strength(self, head: str, dependent: str, mode: str = "normalized") -> float:
        """Association of a head -> dependent pair.

        ``raw`` is the edge count (0 when absent); ``normalized`` divides
        by the head's total outgoing count, so values sit in [0, 1].
        """
        if mode not in ("raw", "normalized"):
            raise ValueError(f"unknown strength mode {mode!r}")
        dependents = self._adj.get(head)
        if not dependents:
            return 0.0
        count = dependents.get(dependent, 0)
        if not count:
            return 0.0
        if mode == "raw":
            return float(count)
        return count / sum(dependents.values())

    def edge_items(self) -> Iterator[tuple[str, str, int]]:
        for head, dependents in self._adj.items():
            for dependent, count in dependents.items():
                yield head, dependent, count

    @property
    def edge_count(self) -> int:
        return sum(len(d) for d in self._adj.values())

    @property
    def total_weight(self) -> int:
        return sum(count for _, _, count in self.edge_items())

    def stats(self) -> KbStats:
        n = len(self.nodes)
        e = self.edge_count
        if n == 0:
            return KbStats(0, 0, 0, 0.0, 0.0)
        # every edge adds one out-degree at its head and one in-degree at
        # its dependent, so the degree sum is 2e
        return KbStats(n, e, self.total_weight, 2 * e / n, e / n)


def build_kb(trees: Iterable[ParseTree]) -> KnowledgeBase:
    kb = KnowledgeBase()
    for tree in trees:
        kb.merge_tree(tree)
    return kb


def merge_kb(a: KnowledgeBase, b: KnowledgeBase) -> KnowledgeBase:
    """Combine two graphs into a fresh one; commutative edge-for-edge."""
    out = KnowledgeBase()
    out.merge(a)
    out.merge(b)
    return out


def prune_kb(kb: KnowledgeBase, min_count: int) -> KnowledgeBase:
    """Drop edges below min_count, then nodes left without any edge."""
    out = KnowledgeBase()
    for head, dependent, count in kb.edge_items():
        if count >= min_count:
            out.add_edge(head, dependent, count)
    return out


def dumps_kb(kb: KnowledgeBase) -> str:
    """Serialize deterministically: identical graphs give identical bytes."""
    lines = ["TMKB 1"]
    lemmas = sorted(kb.nodes)
    ids = {lemma: i for i, lemma in enumerate(lemmas, start=1)}
    for i, lemma in enumerate(lemmas, start=1):
        lines.append(f"NODE {i} {lemma}")
    edges = sorted((ids[h], ids[d], c) for h, d, c in kb.edge_items())
    for head_id, dep_id, count in edges:
        lines.append(f"EDGE {head_id} {dep_id} {count}")
    return "\n".join(lines) + "\n"


def save_kb(kb: KnowledgeBase, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_kb(kb))


def loads_kb(text: str) -> KnowledgeBase:
    lines = text.splitlines()
    if not lines or lines[0] != "TMKB 1":
        raise KbFormatError("line 1: unsupported format version (expected 'TMKB 1')")
    kb = KnowledgeBase()
    lemma_by_id: dict[int, str] = {}
    lemmas_seen: set[str] = set()
    edges_seen: set[tuple[int, int]] = set()
    in_edges = False
    for line_number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if line.startswith("NODE "):
            if in_edges:
                raise KbFormatError(f"line {line_number}: NODE line after EDGE lines")
            parts = line.split(" ", 2)
            if len(parts) != 3 or not parts[2]:
                raise KbFormatError(f"line {line_number}: expected 'NODE <id> <lemma>'")
            try:
                node_id = int(parts[1])
            except ValueError:
                raise KbFormatError(
                    f"line {line_number}: non-numeric node id {parts[1]!r}"
                ) from None
            if node_id != len(lemma_by_id) + 1:
                raise KbFormatError(
                    f"line {line_number}: node ids must ascend from 1, got {node_id}"
                )
            lemma = parts[2]
            if lemma in lemmas_seen:
                raise KbFormatError(f"line {line_number}: duplicate node lemma {lemma!r}")
            lemmas_seen.add(lemma)
            lemma_by_id[node_id] = lemma
            kb.nodes.add(lemma)
        elif line.startswith("EDGE "):
            in_edges = True
            parts = line.split()
            if len(parts) != 4:
                raise KbFormatError(
                    f"line {line_number}: expected 'EDGE <head_id> <dep_id> <count>'"
                )
            try:
                head_id, dep_id, count = (int(p) for p in parts[1:])
            except ValueError:
                raise KbFormatError(f"line {line_number}: non-numeric edge field") from None
            for node_id in (head_id, dep_id):
                if node_id not in lemma_by_id:
                    raise KbFormatError(
                        f"line {line_number}: edge references undeclared node id {node_id}"
                    )
            if count < 1:
                raise KbFormatError(f"line {line_number}: edge count must be >= 1, got {count}")
            if (head_id, dep_id) in edges_seen:
                raise KbFormatError(
                    f"line {line_number}: duplicate edge {head_id} -> {dep_id}"
                )
            edges_seen.add((head_id, dep_id))
            kb.add_edge(lemma_by_id[head_id], lemma_by_id[dep_id], count)
        else:
            raise KbFormatError(f"line {line_number}: unrecognized line {line[:40]!r}")
    return kb


def load_kb(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as handle:
        return loads_kb(handle.read())
