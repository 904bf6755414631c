"""Sense scoring and selection.

Each candidate sense of a target word is scored two ways against the
target's sentence tree: a dependency score that routes gloss words
through the knowledge base to the sentence context, and a direct overlap
score over matching lemmas. A sense is chosen only when both scores
strictly agree; otherwise the rank-1 sense wins.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .corpus import CONTENT_POS, ParseTree
from .evaluation import AnswerKey
from .inventory import SenseInventory, gloss_tree
from .kb import KnowledgeBase


class TargetResolutionError(ValueError):
    """Target that cannot be matched to a sentence tree or token."""


@dataclass
class Target:
    instance_id: str
    sentence_id: str
    token_index: int
    lemma: str  # lowercase
    pos: str


@dataclass
class SenseScore:
    sense_id: str
    rank: int
    score_d: float  # dependency score through the knowledge base
    score_n: float  # direct lemma-overlap score


@dataclass
class SenseChoice:
    instance_id: str
    sense_id: str | None  # None only when reason == "skipped"
    reason: str  # "agreement" | "first_sense_fallback" | "skipped"
    per_sense: list[SenseScore] = field(default_factory=list)


def sentence_weights(
    tree: ParseTree, target_index: int, content_pos: frozenset[str] = CONTENT_POS
) -> dict[int, float]:
    """Weight 1/distance for every content node other than the target.

    The target itself is excluded: it is the word being replaced by its
    glosses, so it is not part of its own context.
    """
    tree.node(target_index)
    weights = {}
    for index in tree.content_nodes(content_pos):
        if index == target_index:
            continue
        weights[index] = 1.0 / tree.distance(index, target_index)
    return weights


def tree_matching(
    sentence: ParseTree,
    target_index: int,
    gloss: ParseTree,
    kb: KnowledgeBase,
    mode: str = "normalized",
) -> float:
    """Dependency score of one gloss against the sentence context.

    Sums w_sentence * w_gloss * strength over every (gloss word, sentence
    word) pair where the sentence word is a known dependent of the gloss
    word. Gloss words are weighted 1/level, sentence words 1/distance to
    the target. Accumulation is gloss-major in token order, so the result
    is reproducible bit-for-bit on one platform.
    """
    if mode not in ("raw", "normalized"):
        raise ValueError(f"unknown strength mode {mode!r}")
    weights = sentence_weights(sentence, target_index)
    score = 0.0
    for gloss_index in gloss.content_nodes():
        dependents = kb.dependents_of(gloss.node(gloss_index).lemma)
        if not dependents:
            continue
        gloss_weight = 1.0 / gloss.level(gloss_index)
        total = sum(dependents.values())
        for sentence_index, sentence_weight in weights.items():
            count = dependents.get(sentence.node(sentence_index).lemma, 0)
            if not count:
                continue
            strength = count / total if mode == "normalized" else float(count)
            score += sentence_weight * gloss_weight * strength
    return score


def node_matching(sentence: ParseTree, target_index: int, gloss: ParseTree) -> float:
    """Direct overlap score: sum of w_sentence * w_gloss over equal lemmas.

    Every matching (sentence word, gloss word) pair counts, target
    excluded. Independent of the knowledge base.
    """
    weights = sentence_weights(sentence, target_index)
    score = 0.0
    for gloss_index in gloss.content_nodes():
        gloss_lemma = gloss.node(gloss_index).lemma
        gloss_weight = 1.0 / gloss.level(gloss_index)
        for sentence_index, sentence_weight in weights.items():
            if sentence.node(sentence_index).lemma == gloss_lemma:
                score += sentence_weight * gloss_weight
    return score


def _strict_argmax(values: list[float]) -> int | None:
    """Index of the unique maximum, or None when the top value is tied."""
    best = max(values)
    if values.count(best) != 1:
        return None
    return values.index(best)


def disambiguate_word(
    sentence: ParseTree,
    target: Target,
    inventory: SenseInventory,
    kb: KnowledgeBase,
    strength_mode: str = "normalized",
    score_mode: str = "agreement",
) -> SenseChoice:
    """Score every sense of the target and apply the selection rule.

    With score_mode "agreement" a sense is chosen when it holds the strict
    maximum of both scores; "tree" and "node" consult a single score. Any
    tie (including all-zero scores) falls back to the rank-1 sense. A
    target absent from the inventory is skipped, producing no answer.
    """
    if score_mode not in ("agreement", "tree", "node"):
        raise ValueError(f"unknown score mode {score_mode!r}")
    senses = inventory.senses(target.lemma, target.pos)
    if not senses:
        return SenseChoice(target.instance_id, None, "skipped")
    scored = []
    for sense in senses:
        gloss = gloss_tree(sense)
        score_d = tree_matching(sentence, target.token_index, gloss, kb, strength_mode)
        score_n = node_matching(sentence, target.token_index, gloss)
        scored.append(SenseScore(sense.sense_id, sense.rank, score_d, score_n))
    best_d = _strict_argmax([s.score_d for s in scored])
    best_n = _strict_argmax([s.score_n for s in scored])
    if score_mode == "agreement":
        pick = best_d if best_d is not None and best_d == best_n else None
    elif score_mode == "tree":
        pick = best_d
    else:
        pick = best_n
    if pick is None:
        return SenseChoice(target.instance_id, scored[0].sense_id, "first_sense_fallback", scored)
    return SenseChoice(target.instance_id, scored[pick].sense_id, "agreement", scored)


_WORKER_STATE: dict = {}


def _pool_init(trees_by_id, inventory, kb, strength_mode, score_mode) -> None:
    _WORKER_STATE.update(
        trees=trees_by_id,
        inventory=inventory,
        kb=kb,
        strength_mode=strength_mode,
        score_mode=score_mode,
    )


def _pool_score(target: Target) -> SenseChoice:
    state = _WORKER_STATE
    return disambiguate_word(
        state["trees"][target.sentence_id],
        target,
        state["inventory"],
        state["kb"],
        state["strength_mode"],
        state["score_mode"],
    )


def disambiguate_document(
    trees: list[ParseTree],
    targets: list[Target],
    inventory: SenseInventory,
    kb: KnowledgeBase,
    strength_mode: str = "normalized",
    score_mode: str = "agreement",
    workers: int = 1,
) -> AnswerKey:
    """Disambiguate every target; skipped targets are omitted from the key.

    Results are emitted in input target order regardless of worker count.
    Raises TargetResolutionError when a target names an unknown sentence
    or a token index outside its tree.
    """
    trees_by_id: dict[str, ParseTree] = {}
    for tree in trees:
        if tree.sentence_id in trees_by_id:
            raise TargetResolutionError(f"duplicate sentence_id {tree.sentence_id!r}")
        trees_by_id[tree.sentence_id] = tree

    seen_instances = set()
    for target in targets:
        if target.instance_id in seen_instances:
            raise TargetResolutionError(f"duplicate instance_id {target.instance_id!r}")
        seen_instances.add(target.instance_id)
        tree = trees_by_id.get(target.sentence_id)
        if tree is None:
            raise TargetResolutionError(
                f"instance {target.instance_id}: unknown sentence_id {target.sentence_id!r}"
            )
        if not 1 <= target.token_index <= len(tree.nodes):
            raise TargetResolutionError(
                f"instance {target.instance_id}: token index {target.token_index}"
                f" outside sentence {target.sentence_id!r}"
            )

    if workers > 1 and len(targets) > 1:
        with multiprocessing.Pool(
            processes=workers,
            initializer=_pool_init,
            initargs=(trees_by_id, inventory, kb, strength_mode, score_mode),
        ) as pool:
            chunk = max(1, len(targets) // (workers * 4))
            choices = pool.map(_pool_score, targets, chunksize=chunk)
    else:
        choices = [
            disambiguate_word(
                trees_by_id[t.sentence_id], t, inventory, kb, strength_mode, score_mode
            )
            for t in targets
        ]

    entries = [(c.instance_id, c.sense_id) for c in choices if c.reason != "skipped"]
    return AnswerKey(entries)
