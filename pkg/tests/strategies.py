"""Hypothesis strategies shared across the property tests."""

import hypothesis.strategies as st

from treematch.corpus import ParseNode, ParseTree
from treematch.kb import KnowledgeBase

LEMMAS = [
    "apple", "bank", "cloud", "dog", "ember", "fox",
    "grain", "hill", "iris", "jade", "kelp", "lark",
]
ALL_POS = ["n", "v", "a", "r", "d", "p"]
CONTENT_ONLY = ["n", "v", "a", "r"]


@st.composite
def parse_trees(draw, max_nodes=12, min_nodes=1, content_only=False):
    """Random attachment trees: node i hangs off some earlier node."""
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pos_pool = CONTENT_ONLY if content_only else ALL_POS
    nodes = []
    for index in range(1, n + 1):
        lemma = draw(st.sampled_from(LEMMAS))
        pos = draw(st.sampled_from(pos_pool))
        head = 0 if index == 1 else draw(st.integers(1, index - 1))
        nodes.append(ParseNode(index, lemma.capitalize(), lemma, pos, head))
    return ParseTree(nodes, sentence_id="s")


@st.composite
def knowledge_bases(draw, max_edges=40):
    kb = KnowledgeBase()
    edges = draw(
        st.lists(
            st.tuples(
                st.sampled_from(LEMMAS),
                st.sampled_from(LEMMAS),
                st.integers(1, 9),
            ),
            max_size=max_edges,
        )
    )
    for head, dependent, count in edges:
        kb.add_edge(head, dependent, count)
    return kb
