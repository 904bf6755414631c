"""Independent oracles and seeded generators used by the tests.

Everything here deliberately avoids the library's own traversal and
scoring code paths: distances come from BFS over an undirected adjacency
map, levels from naive root walks, and scores from plain triple loops
over raw edge-count dictionaries.
"""

import random
from collections import deque

from treematch.corpus import CONTENT_POS, ParseNode, ParseTree
from treematch.kb import KnowledgeBase

ORACLE_LEMMAS = ["w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9"]


def bfs_distance(tree: ParseTree, a: int, b: int) -> int:
    adjacency = {node.index: set() for node in tree.nodes}
    for node in tree.nodes:
        if node.head != 0:
            adjacency[node.index].add(node.head)
            adjacency[node.head].add(node.index)
    queue = deque([(a, 0)])
    seen = {a}
    while queue:
        current, dist = queue.popleft()
        if current == b:
            return dist
        for neighbor in adjacency[current]:
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append((neighbor, dist + 1))
    raise AssertionError(f"no path between {a} and {b}")


def walk_level(tree: ParseTree, index: int) -> int:
    steps = 0
    current = index
    while tree.nodes[current - 1].head != 0:
        current = tree.nodes[current - 1].head
        steps += 1
    return steps if tree.virtual_root else steps + 1


def raw_counts(kb: KnowledgeBase) -> dict[tuple[str, str], int]:
    return {(h, d): c for h, d, c in kb.edge_items()}


def bf_strength(kb: KnowledgeBase, head: str, dep: str, mode: str) -> float:
    counts = raw_counts(kb)
    count = counts.get((head, dep), 0)
    if mode == "raw":
        return float(count)
    total = sum(c for (h, _), c in counts.items() if h == head)
    return count / total if count else 0.0


def _content(node: ParseNode) -> bool:
    return not node.excluded and node.pos in CONTENT_POS


def bf_tree_matching(sentence, target_index, gloss, kb, mode) -> float:
    score = 0.0
    for gloss_node in gloss.nodes:
        if not _content(gloss_node):
            continue
        for sent_node in sentence.nodes:
            if sent_node.index == target_index or not _content(sent_node):
                continue
            strength = bf_strength(kb, gloss_node.lemma, sent_node.lemma, mode)
            if not strength:
                continue
            w_s = 1.0 / bfs_distance(sentence, sent_node.index, target_index)
            w_g = 1.0 / walk_level(gloss, gloss_node.index)
            score += w_s * w_g * strength
    return score


def bf_node_matching(sentence, target_index, gloss) -> float:
    score = 0.0
    for gloss_node in gloss.nodes:
        if not _content(gloss_node):
            continue
        for sent_node in sentence.nodes:
            if sent_node.index == target_index or not _content(sent_node):
                continue
            if sent_node.lemma == gloss_node.lemma:
                w_s = 1.0 / bfs_distance(sentence, sent_node.index, target_index)
                w_g = 1.0 / walk_level(gloss, gloss_node.index)
                score += w_s * w_g
    return score


def random_tree(
    rng: random.Random,
    max_nodes: int,
    lemmas=ORACLE_LEMMAS,
    content_only: bool = False,
    sentence_id: str = "s",
) -> ParseTree:
    n = rng.randint(1, max_nodes)
    pos_pool = ["n", "v", "a", "r"] if content_only else ["n", "v", "a", "r", "d", "p"]
    nodes = []
    for index in range(1, n + 1):
        lemma = rng.choice(lemmas)
        pos = rng.choice(pos_pool)
        head = 0 if index == 1 else rng.randint(1, index - 1)
        nodes.append(ParseNode(index, lemma, lemma, pos, head))
    return ParseTree(nodes, sentence_id)


def random_kb(rng: random.Random, max_edges: int, lemmas=ORACLE_LEMMAS) -> KnowledgeBase:
    kb = KnowledgeBase()
    for _ in range(rng.randint(0, max_edges)):
        kb.add_edge(rng.choice(lemmas), rng.choice(lemmas), rng.randint(1, 9))
    return kb
