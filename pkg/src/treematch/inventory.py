"""Sense inventory: ranked glosses per (lemma, pos), with optional gloss parses.

The inventory file is one tab-separated record per line::

    lemma<TAB>pos<TAB>sense_id<TAB>rank<TAB>gloss text

with pos in {n, v, a, r} and rank 1 marking the most frequent sense.
A companion ``<inventory>.glosstrees`` file may supply pre-parsed gloss
trees, one CoNLL block per ``SENSE <sense_id>`` header line.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .corpus import (
    CONTENT_POS,
    CorpusFormatError,
    ParseNode,
    ParseTree,
    normalize_pos,
    normalize_token,
    parse_conll,
)


class InventoryFormatError(ValueError):
    """Malformed inventory or glosstrees file."""


# Closed-class words dropped when building flat gloss trees from raw gloss
# text (no POS tags are available there). Everything else counts as content.
FUNCTION_WORDS = frozenset(
    """
    a an the this that these those which what whose who whom
    i you he she it we they me him her us them my your his its our their
    mine yours hers ours theirs myself yourself himself herself itself
    ourselves yourselves themselves one ones something anything nothing
    everything someone anyone everyone somebody anybody nobody everybody
    and or but nor so yet if because although though while whereas unless
    until since when whenever where wherever why how than whether as
    not no none neither either both each every all any some few many much
    more most other another such same own several enough less least
    of in on at by for with without within about against between among
    through during before after above below under over from to up down
    out off near beside besides beneath behind beyond across along around
    despite except inside outside onto upon toward towards underneath
    via per amid amidst atop unto
    am is are was were be been being do does did doing have has had having
    will would shall should may might must can could ought need dare
    there here then now just only also too very quite rather almost
    s t d ll m re ve don didn doesn hasn haven isn wasn weren won wouldn
    shouldn couldn
    """.split()
)


@dataclass
class Sense:
    sense_id: str
    rank: int  # 1 = most frequent
    gloss: str
    tree: ParseTree | None = None  # pre-parsed gloss, when the file supplies one


class SenseInventory:
    """Ranked senses keyed by (lowercase lemma, pos). Immutable after load."""

    def __init__(self) -> None:
        self._entries: dict[tuple[str, str], list[Sense]] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: tuple[str, str]) -> bool:
        lemma, pos = key
        return (lemma.lower(), normalize_pos(pos)) in self._entries

    def add_entry(self, lemma: str, pos: str, senses: list[Sense]) -> None:
        self._entries[(lemma.lower(), normalize_pos(pos))] = list(senses)

    def senses(self, lemma: str, pos: str) -> list[Sense]:
        """Rank-ordered senses; empty when the (lemma, pos) is unknown.

        Absence is a normal outcome, not an error: callers skip such words.
        """
        return list(self._entries.get((lemma.lower(), normalize_pos(pos)), ()))

    def keys(self):
        return self._entries.keys()


def load_inventory(path) -> SenseInventory:
    """Load an inventory file, attaching gloss trees from the companion file.

    Raises InventoryFormatError on malformed lines, duplicate ranks, or
    rank sequences that do not run 1..k without gaps.
    """
    staged: dict[tuple[str, str], dict[int, Sense]] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise InventoryFormatError(
                    f"{path}:{line_number}: expected 5 tab-separated fields, got {len(fields)}"
                )
            lemma, pos, sense_id, rank_s, gloss = fields
            lemma = lemma.strip().lower()
            if not lemma:
                raise InventoryFormatError(f"{path}:{line_number}: empty lemma")
            pos_tag = normalize_pos(pos)
            if pos_tag not in CONTENT_POS:
                raise InventoryFormatError(
                    f"{path}:{line_number}: pos must be one of n v a r, got {pos!r}"
                )
            if not sense_id.strip():
                raise InventoryFormatError(f"{path}:{line_number}: empty sense_id")
            try:
                rank = int(rank_s)
            except ValueError:
                raise InventoryFormatError(
                    f"{path}:{line_number}: non-numeric rank {rank_s!r}"
                ) from None
            if rank < 1:
                raise InventoryFormatError(
                    f"{path}:{line_number}: rank must be >= 1, got {rank}"
                )
            if not gloss.strip():
                raise InventoryFormatError(f"{path}:{line_number}: empty gloss")
            key = (lemma, pos_tag)
            ranks = staged.setdefault(key, {})
            if rank in ranks:
                raise InventoryFormatError(
                    f"{path}:{line_number}: duplicate rank {rank} for {lemma}/{pos_tag}"
                )
            ranks[rank] = Sense(sense_id.strip(), rank, gloss.strip())

    inventory = SenseInventory()
    for (lemma, pos_tag), ranks in staged.items():
        ordered = sorted(ranks)
        if ordered != list(range(1, len(ordered) + 1)):
            raise InventoryFormatError(
                f"{path}: ranks for {lemma}/{pos_tag} must run 1..{len(ordered)}"
                f" without gaps, got {ordered}"
            )
        inventory.add_entry(lemma, pos_tag, [ranks[r] for r in ordered])

    companion = f"{path}.glosstrees"
    try:
        handle = open(companion, encoding="utf-8")
    except FileNotFoundError:
        return inventory
    with handle:
        trees = _read_gloss_trees(handle, companion)
    _attach_gloss_trees(inventory, trees, companion)
    return inventory


def _read_gloss_trees(handle, path: str) -> dict[str, ParseTree]:
    trees: dict[str, ParseTree] = {}
    current_id: str | None = None
    block: list[str] = []

    def finish() -> None:
        nonlocal block
        if current_id is None or not block:
            block = []
            return
        try:
            parsed = parse_conll("\n".join(block) + "\n")
        except CorpusFormatError as err:
            raise InventoryFormatError(
                f"{path}: gloss tree for sense {current_id!r}: {err}"
            ) from None
        tree = parsed[0]
        tree.sentence_id = current_id
        if current_id in trees:
            raise InventoryFormatError(
                f"{path}: duplicate gloss tree for sense {current_id!r}"
            )
        trees[current_id] = tree
        block = []

    for line_number, raw in enumerate(handle, start=1):
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if stripped.startswith("SENSE "):
            finish()
            current_id = stripped[len("SENSE "):].strip()
            if not current_id:
                raise InventoryFormatError(f"{path}:{line_number}: empty sense id")
        elif not stripped:
            finish()
        elif stripped.startswith("#"):
            continue
        else:
            if current_id is None:
                raise InventoryFormatError(
                    f"{path}:{line_number}: token line outside a SENSE block"
                )
            block.append(line)
    finish()
    return trees


def _attach_gloss_trees(
    inventory: SenseInventory, trees: dict[str, ParseTree], path: str
) -> None:
    by_sense_id: dict[str, list[Sense]] = {}
    for key in inventory.keys():
        for sense in inventory.senses(*key):
            by_sense_id.setdefault(sense.sense_id, []).append(sense)
    for sense_id, tree in trees.items():
        owners = by_sense_id.get(sense_id)
        if not owners:
            raise InventoryFormatError(f"{path}: unknown sense id {sense_id!r}")
        for sense in owners:
            sense.tree = tree


def gloss_tree(sense: Sense, content_pos: frozenset[str] = CONTENT_POS) -> ParseTree:
    """Parse tree standing in for the sense's gloss.

    A pre-parsed tree is returned as-is except that nodes outside the
    content POS filter are marked excluded. Without one, a flat fallback
    is built: a virtual root (excluded from scoring) with every content
    word of the gloss as a level-1 child, in gloss order.
    """
    if sense.tree is not None:
        nodes = [
            replace(n, excluded=n.excluded or n.pos not in content_pos)
            for n in sense.tree.nodes
        ]
        return ParseTree(nodes, sense.tree.sentence_id, sense.tree.virtual_root)
    words = [
        w
        for w in (normalize_token(tok) for tok in sense.gloss.split())
        if w and w not in FUNCTION_WORDS
    ]
    nodes = [ParseNode(1, "", "", "", head=0, excluded=True)]
    for offset, word in enumerate(words, start=2):
        # untagged gloss tokens pass the content filter as nouns; only the
        # lemma is consulted downstream
        nodes.append(ParseNode(offset, word, word, "n", head=1))
    return ParseTree(nodes, sense.sense_id, virtual_root=True)
