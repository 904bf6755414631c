"""Seeded generators for synthetic corpora, inventories, and target lists.

Used by the benchmark scripts and the stress tests. Everything is driven
by one ``random.Random`` seed, so regeneration is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import ParseNode, ParseTree, format_conll

_POS_CHOICES = ["n", "n", "n", "v", "v", "a", "r", "d", "p"]


@dataclass
class SyntheticData:
    trees: list[ParseTree]
    inventory_text: str
    targets_text: str
    gold_text: str


def random_sentence_tree(
    rng: random.Random,
    vocab: list[tuple[str, str]],
    sentence_id: str,
    min_tokens: int = 4,
    max_tokens: int = 12,
) -> ParseTree:
    """Random attachment tree: token i hangs off a random earlier token."""
    n = rng.randint(min_tokens, max_tokens)
    nodes = []
    for index in range(1, n + 1):
        lemma, pos = rng.choice(vocab)
        head = 0 if index == 1 else rng.randint(1, index - 1)
        nodes.append(ParseNode(index, lemma, lemma, pos, head))
    return ParseTree(nodes, sentence_id)


def build(
    seed: int,
    sentences: int,
    targets: int,
    vocab_size: int = 300,
    ambiguous_lemmas: int = 120,
    senses_per_lemma: int = 3,
) -> SyntheticData:
    """Generate a coherent corpus + inventory + targets + gold quadruple.

    Glosses are plain text drawn from the same vocabulary, so the engine
    exercises the flat gloss-tree fallback end to end.
    """
    rng = random.Random(seed)
    vocab = [
        (f"lemma{i:03d}", rng.choice(_POS_CHOICES)) for i in range(vocab_size)
    ]
    content_vocab = [(l, p) for l, p in vocab if p in ("n", "v", "a", "r")]

    trees = [
        random_sentence_tree(rng, vocab, f"s{i:05d}") for i in range(sentences)
    ]

    covered = rng.sample(content_vocab, min(ambiguous_lemmas, len(content_vocab)))
    covered_set = set(covered)
    inventory_lines = []
    sense_ids: dict[tuple[str, str], list[str]] = {}
    for lemma, pos in covered:
        ids = []
        for rank in range(1, senses_per_lemma + 1):
            sense_id = f"{lemma}%{pos}#{rank}"
            gloss_words = [rng.choice(content_vocab)[0] for _ in range(rng.randint(4, 7))]
            inventory_lines.append(
                f"{lemma}\t{pos}\t{sense_id}\t{rank}\t{' '.join(gloss_words)}"
            )
            ids.append(sense_id)
        sense_ids[(lemma, pos)] = ids

    target_lines = []
    gold_lines = []
    made = 0
    while made < targets:
        tree = rng.choice(trees)
        candidates = [
            node for node in tree.nodes if (node.lemma, node.pos) in covered_set
        ]
        if not candidates:
            continue
        node = rng.choice(candidates)
        instance_id = f"i{made:05d}"
        target_lines.append(
            f"{instance_id}\t{tree.sentence_id}\t{node.index}\t{node.lemma}\t{node.pos}"
        )
        gold_lines.append(
            f"{instance_id} {rng.choice(sense_ids[(node.lemma, node.pos)])}"
        )
        made += 1

    return SyntheticData(
        trees=trees,
        inventory_text="\n".join(inventory_lines) + "\n",
        targets_text="\n".join(target_lines) + "\n",
        gold_text="\n".join(gold_lines) + "\n",
    )


def write(data: SyntheticData, outdir, corpus_shards: int = 4) -> dict[str, list[str] | str]:
    """Write the quadruple under outdir; the corpus is split into shards."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    shards = max(1, corpus_shards)
    corpus_paths = []
    per_shard = (len(data.trees) + shards - 1) // shards
    for shard in range(shards):
        chunk = data.trees[shard * per_shard : (shard + 1) * per_shard]
        if not chunk:
            continue
        path = outdir / f"corpus-{shard:02d}.conll"
        path.write_text(format_conll(chunk), encoding="utf-8")
        corpus_paths.append(str(path))
    document_path = outdir / "document.conll"
    document_path.write_text(format_conll(data.trees), encoding="utf-8")
    inventory_path = outdir / "inventory.tsv"
    inventory_path.write_text(data.inventory_text, encoding="utf-8")
    targets_path = outdir / "targets.tsv"
    targets_path.write_text(data.targets_text, encoding="utf-8")
    gold_path = outdir / "gold.key"
    gold_path.write_text(data.gold_text, encoding="utf-8")
    return {
        "corpus": corpus_paths,
        "document": str(document_path),
        "inventory": str(inventory_path),
        "targets": str(targets_path),
        "gold": str(gold_path),
    }
