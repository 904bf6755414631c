import io

import pytest
from hypothesis import given, settings

import strategies
import support
from treematch.corpus import (
    CorpusFormatError,
    TreeStructureError,
    extract_sentences,
    format_conll,
    parse_conll,
    read_conll,
)

CHAIN = """\
1\tComputer\tcomputer\tn\t2
2\tprogrammers\tprogrammer\tn\t3
3\twrite\twrite\tv\t0
"""


class TestExtractSentences:
    def test_keeps_only_sentences_with_a_target(self):
        result = extract_sentences("Rain fell. The bank closed!", {"bank"})
        assert result == [("The bank closed", {"bank"})]

    def test_no_match_gives_empty_list(self):
        assert extract_sentences("No match here.", {"bank"}) == []

    def test_empty_targets_keeps_everything(self):
        result = extract_sentences("A? B! C.", set())
        assert [s for s, _ in result] == ["A", "B", "C"]
        assert all(m == set() for _, m in result)

    def test_empty_input(self):
        assert extract_sentences("", {"bank"}) == []

    def test_control_characters_become_spaces(self):
        result = extract_sentences("The\tbank\x00closed.", {"bank"})
        assert result == [("The bank closed", {"bank"})]

    def test_token_punctuation_is_trimmed_for_matching(self):
        result = extract_sentences('She said "bank", twice.', {"bank"})
        assert result[0][1] == {"bank"}


class TestReadConll:
    def test_chain_fixture(self):
        (tree,) = parse_conll(CHAIN)
        assert [n.lemma for n in tree.nodes] == ["computer", "programmer", "write"]
        assert [n.head for n in tree.nodes] == [2, 3, 0]
        assert tree.root_index() == 3

    def test_self_loop_is_a_structural_error(self):
        text = "1\ta\ta\tn\t2\n2\tb\tb\tn\t2\n"
        with pytest.raises(TreeStructureError):
            parse_conll(text)

    def test_cycle_is_a_structural_error(self):
        text = "1\tr\tr\tv\t0\n2\ta\ta\tn\t3\n3\tb\tb\tn\t2\n"
        with pytest.raises(TreeStructureError, match="cycle"):
            parse_conll(text)

    def test_multiple_roots_rejected(self):
        text = "1\ta\ta\tn\t0\n2\tb\tb\tn\t0\n"
        with pytest.raises(TreeStructureError, match="root"):
            parse_conll(text)

    def test_two_blocks_give_two_trees(self):
        text = "1\ta\ta\tn\t0\n\n1\tb\tb\tn\t0\n"
        trees = parse_conll(text)
        assert len(trees) == 2

    def test_lemma_underscore_falls_back_to_lowercased_form(self):
        (tree,) = parse_conll("1\tBanks\t_\tn\t0\n")
        assert tree.nodes[0].lemma == "banks"

    def test_sentence_id_comment(self):
        (tree,) = parse_conll("# sentence_id = doc7\n1\ta\ta\tn\t0\n")
        assert tree.sentence_id == "doc7"

    def test_default_sentence_id_is_block_ordinal(self):
        trees = parse_conll("1\ta\ta\tn\t0\n\n1\tb\tb\tn\t0\n")
        assert [t.sentence_id for t in trees] == ["1", "2"]

    def test_non_numeric_head_names_the_line(self):
        text = "1\ta\ta\tn\t0\n2\tb\tb\tn\tx\n"
        with pytest.raises(CorpusFormatError, match="line 2"):
            parse_conll(text)

    def test_index_gap_rejected(self):
        text = "1\ta\ta\tn\t0\n3\tb\tb\tn\t1\n"
        with pytest.raises(CorpusFormatError, match="expected 2"):
            parse_conll(text)

    def test_optional_deprel_column_is_dropped(self):
        (tree,) = parse_conll("1\ta\ta\tn\t2\tnsubj\n2\tb\tb\tv\t0\troot\n")
        assert len(tree.nodes) == 2

    def test_reads_from_a_stream(self):
        trees = read_conll(io.StringIO(CHAIN))
        assert len(trees) == 1


class TestTreeMeasures:
    def test_distance_zero_on_same_node(self):
        (tree,) = parse_conll(CHAIN)
        assert tree.distance(2, 2) == 0

    def test_distance_one_for_head_and_dependent(self):
        (tree,) = parse_conll(CHAIN)
        assert tree.distance(1, 2) == 1

    def test_distance_two_over_the_chain(self):
        (tree,) = parse_conll(CHAIN)
        assert tree.distance(3, 1) == 2

    def test_distance_invalid_index(self):
        (tree,) = parse_conll(CHAIN)
        with pytest.raises(IndexError):
            tree.distance(1, 9)

    def test_root_level_is_one(self):
        (tree,) = parse_conll(CHAIN)
        assert tree.level(3) == 1
        assert tree.level(2) == 2
        assert tree.level(1) == 3

    def test_level_invalid_index(self):
        (tree,) = parse_conll(CHAIN)
        with pytest.raises(IndexError):
            tree.level(0)

    def test_content_nodes_filter_pos(self):
        (tree,) = parse_conll("1\tThe\tthe\td\t2\n2\tbank\tbank\tn\t3\n3\tclosed\tclose\tv\t0\n")
        assert tree.content_nodes() == [2, 3]

    def test_all_function_words_give_no_content(self):
        (tree,) = parse_conll("1\tof\tof\tp\t2\n2\tin\tin\tp\t0\n")
        assert tree.content_nodes() == []


@given(tree=strategies.parse_trees(max_nodes=12))
@settings(max_examples=150)
def test_distance_matches_bfs_and_is_a_metric(tree):
    n = len(tree.nodes)
    dist = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            d = tree.distance(a, b)
            dist[a, b] = d
            assert d == support.bfs_distance(tree, a, b)
            assert (d == 0) == (a == b)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            assert dist[a, b] == dist[b, a]
            for c in range(1, n + 1):
                assert dist[a, c] <= dist[a, b] + dist[b, c]


@given(tree=strategies.parse_trees(max_nodes=12))
def test_level_is_root_distance_plus_one(tree):
    root = tree.root_index()
    for node in tree.nodes:
        assert tree.level(node.index) == tree.distance(root, node.index) + 1


@given(trees=strategies.parse_trees(max_nodes=8))
def test_conll_round_trip_is_lossless(trees):
    parsed = parse_conll(format_conll([trees]))
    assert len(parsed) == 1
    for original, reread in zip(trees.nodes, parsed[0].nodes):
        assert (original.index, original.lemma, original.pos, original.head) == (
            reread.index,
            reread.lemma,
            reread.pos,
            reread.head,
        )
