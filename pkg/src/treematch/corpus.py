"""Plain-text sentence extraction and the dependency parse-tree model.

Parsed sentences arrive in a tab-separated CoNLL-style block format
produced by an external dependency parser; this module reads, validates,
and measures them. It never parses natural language itself.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from typing import Iterable

# POS tags that count as content words: noun, verb, adjective, adverb.
CONTENT_POS = frozenset({"n", "v", "a", "r"})

_POS_ALIASES = {
    "noun": "n",
    "verb": "v",
    "adj": "a",
    "adjective": "a",
    "adv": "r",
    "adverb": "r",
}

_CONTROL_CHARS = re.compile(r"[\x00-\x1f\x7f-\x9f]")
_SENTENCE_BREAK = re.compile(r"[.!?]")
_SENT_ID_COMMENT = re.compile(r"#\s*sentence_id\s*=\s*(.+)")


class CorpusFormatError(ValueError):
    """Malformed CoNLL input: bad field counts or non-numeric columns."""


class TreeStructureError(CorpusFormatError):
    """Token block that does not describe a single rooted tree."""


def normalize_pos(tag: str) -> str:
    """Map long-form POS names onto the single-letter tag set."""
    tag = tag.strip().lower()
    return _POS_ALIASES.get(tag, tag)


def normalize_token(token: str) -> str:
    """Lowercase a token and trim surrounding punctuation."""
    return token.lower().strip(string.punctuation)


@dataclass
class ParseNode:
    index: int  # 1-based token position
    surface: str
    lemma: str  # stored lowercase
    pos: str  # tags outside CONTENT_POS are carried but never score
    head: int  # index of the head token, 0 for the root
    excluded: bool = False  # virtual roots and POS-filtered gloss nodes

    def is_content(self, content_pos: frozenset[str] = CONTENT_POS) -> bool:
        return not self.excluded and self.pos in content_pos


@dataclass
class ParseTree:
    """One dependency-parsed sentence.

    Treated as immutable after construction; concurrent reads are safe.
    ``virtual_root`` marks synthetic roots that sit below level 1 and are
    excluded from all scoring.
    """

    nodes: list[ParseNode]
    sentence_id: str = ""
    virtual_root: bool = False

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, index: int) -> ParseNode:
        if not 1 <= index <= len(self.nodes):
            raise IndexError(f"node index {index} outside 1..{len(self.nodes)}")
        return self.nodes[index - 1]

    def root_index(self) -> int:
        for node in self.nodes:
            if node.head == 0:
                return node.index
        raise TreeStructureError(f"sentence {self.sentence_id!r} has no root")

    def level(self, index: int) -> int:
        """Depth-based level: the root is level 1, each child one deeper.

        Trees with a virtual root start at level 0 instead, so the real
        tokens hanging off it sit at level 1.
        """
        depth = 0
        current = index
        while (head := self.node(current).head) != 0:
            current = head
            depth += 1
            if depth > len(self.nodes):
                raise TreeStructureError(
                    f"sentence {self.sentence_id!r}: head cycle at node {index}"
                )
        return depth if self.virtual_root else depth + 1

    def distance(self, a: int, b: int) -> int:
        """Number of edges on the undirected path between two nodes."""
        self.node(a)
        self.node(b)
        if a == b:
            return 0
        steps_from_a = {}
        current, steps = a, 0
        while True:
            steps_from_a[current] = steps
            head = self.node(current).head
            if head == 0:
                break
            current, steps = head, steps + 1
        current, steps = b, 0
        while current not in steps_from_a:
            head = self.node(current).head
            if head == 0:
                raise TreeStructureError(
                    f"sentence {self.sentence_id!r}: nodes {a} and {b} are disconnected"
                )
            current, steps = head, steps + 1
        return steps_from_a[current] + steps

    def content_nodes(self, content_pos: frozenset[str] = CONTENT_POS) -> list[int]:
        """Indices of unexcluded content-POS nodes, in token order."""
        return [n.index for n in self.nodes if n.is_content(content_pos)]

    def validate(self) -> None:
        """Check indices run 1..n, exactly one root exists, and no cycles."""
        n = len(self.nodes)
        roots = 0
        for position, node in enumerate(self.nodes, start=1):
            if node.index != position:
                raise TreeStructureError(
                    f"node index {node.index} at position {position}; indices must run 1..{n}"
                )
            if not 0 <= node.head <= n:
                raise TreeStructureError(
                    f"node {node.index} has head {node.head} outside 0..{n}"
                )
            if node.head == node.index:
                raise TreeStructureError(f"node {node.index} is its own head")
            if node.head == 0:
                roots += 1
        if roots != 1:
            raise TreeStructureError(f"expected exactly one root, found {roots}")
        for node in self.nodes:
            current, steps = node.index, 0
            while self.nodes[current - 1].head != 0:
                current = self.nodes[current - 1].head
                steps += 1
                if steps > n:
                    raise TreeStructureError(f"head cycle involving node {node.index}")


def extract_sentences(
    raw: str, targets: set[str]
) -> list[tuple[str, set[str]]]:
    """Split raw text on end punctuation and keep sentences naming a target.

    Control characters are replaced by spaces and whitespace runs are
    collapsed. A sentence matches when any of its tokens, lowercased and
    stripped of surrounding punctuation, is in ``targets``. An empty
    target set keeps every non-empty sentence.
    """
    cleaned = _CONTROL_CHARS.sub(" ", raw)
    results = []
    for chunk in _SENTENCE_BREAK.split(cleaned):
        sentence = " ".join(chunk.split())
        if not sentence:
            continue
        if not targets:
            results.append((sentence, set()))
            continue
        matched = {
            tok
            for tok in (normalize_token(t) for t in sentence.split())
            if tok in targets
        }
        if matched:
            results.append((sentence, matched))
    return results


def read_conll(lines: Iterable[str]) -> list[ParseTree]:
    """Read blank-line-separated token blocks into validated parse trees.

    Lines are ``INDEX FORM LEMMA POS HEAD [DEPREL]``, tab-separated.
    A lemma of ``_`` falls back to the lowercased form; relation labels
    are accepted and dropped. ``#`` comment lines may carry
    ``sentence_id = <id>``; blocks without one get their 1-based ordinal.
    """
    trees = []
    block: list[tuple[int, str]] = []
    sentence_id = None
    block_number = 0

    def finish_block() -> None:
        nonlocal block, sentence_id, block_number
        if not block:
            return
        block_number += 1
        trees.append(_parse_block(block, sentence_id, block_number))
        block = []
        sentence_id = None

    for line_number, raw_line in enumerate(lines, start=1):
        line = raw_line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped:
            finish_block()
            continue
        if stripped.startswith("#"):
            match = _SENT_ID_COMMENT.match(stripped)
            if match:
                sentence_id = match.group(1).strip()
            continue
        block.append((line_number, line))
    finish_block()
    return trees


def _parse_block(
    block: list[tuple[int, str]], sentence_id: str | None, block_number: int
) -> ParseTree:
    nodes = []
    for expected_index, (line_number, line) in enumerate(block, start=1):
        fields = line.split("\t")
        if len(fields) not in (5, 6):
            raise CorpusFormatError(
                f"line {line_number}: expected 5 or 6 tab-separated fields, got {len(fields)}"
            )
        index_s, form, lemma, pos, head_s = fields[:5]
        try:
            index = int(index_s)
        except ValueError:
            raise CorpusFormatError(
                f"line {line_number}: non-numeric index {index_s!r}"
            ) from None
        try:
            head = int(head_s)
        except ValueError:
            raise CorpusFormatError(
                f"line {line_number}: non-numeric head {head_s!r}"
            ) from None
        if index != expected_index:
            raise CorpusFormatError(
                f"line {line_number}: node index {index}, expected {expected_index}"
            )
        lemma = (form if lemma == "_" else lemma).lower()
        nodes.append(ParseNode(index, form, lemma, pos.strip().lower(), head))
    tree = ParseTree(nodes, sentence_id if sentence_id is not None else str(block_number))
    try:
        tree.validate()
    except TreeStructureError as err:
        raise TreeStructureError(
            f"block {block_number} (sentence {tree.sentence_id!r}): {err}"
        ) from None
    return tree


def parse_conll(text: str) -> list[ParseTree]:
    return read_conll(text.splitlines())


def read_conll_file(path) -> list[ParseTree]:
    with open(path, encoding="utf-8") as handle:
        return read_conll(handle)


def format_conll(trees: Iterable[ParseTree]) -> str:
    """Serialize trees back to the block format (relation labels are gone)."""
    blocks = []
    for tree in trees:
        lines = []
        if tree.sentence_id:
            lines.append(f"# sentence_id = {tree.sentence_id}")
        for n in tree.nodes:
            lines.append(f"{n.index}\t{n.surface}\t{n.lemma}\t{n.pos}\t{n.head}")
        blocks.append("\n".join(lines))
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"
