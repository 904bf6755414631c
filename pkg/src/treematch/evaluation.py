"""Answer keys, precision/recall scoring, and the two reference baselines."""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class KeyFormatError(ValueError):
    """Malformed key file or duplicate instance ids within one key."""


@dataclass
class AnswerKey:
    """Ordered (instance_id, sense_id) pairs; instance ids must be unique."""

    entries: list[tuple[str, str]] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen = set()
        for instance_id, _ in self.entries:
            if instance_id in seen:
                raise KeyFormatError(f"duplicate instance_id {instance_id!r}")
            seen.add(instance_id)

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[str, str]:
        return dict(self.entries)


@dataclass
class EvalReport:
    total: int  # gold instances
    attempted: int  # answers whose instance exists in gold
    correct: int
    precision: float  # correct / attempted, 0.0 when nothing was attempted
    recall: float  # correct / total
    spurious: list[str] = field(default_factory=list)  # answer ids absent from gold


def score_answers(gold: AnswerKey, answers: AnswerKey) -> EvalReport:
    """Exact sense_id match against gold; spurious ids are warned, not scored."""
    if not gold.entries:
        raise ValueError("gold key is empty")
    gold_map = gold.as_dict()
    attempted = 0
    correct = 0
    spurious = []
    for instance_id, sense_id in answers.entries:
        expected = gold_map.get(instance_id)
        if expected is None:
            spurious.append(instance_id)
            continue
        attempted += 1
        if sense_id == expected:
            correct += 1
    total = len(gold.entries)
    precision = correct / attempted if attempted else 0.0
    recall = correct / total
    return EvalReport(total, attempted, correct, precision, recall, spurious)


def mfs_baseline(targets, inventory) -> AnswerKey:
    """Answer every covered target with its rank-1 sense; skip the rest."""
    entries = []
    for target in targets:
        senses = inventory.senses(target.lemma, target.pos)
        if senses:
            entries.append((target.instance_id, senses[0].sense_id))
    return AnswerKey(entries)


def random_baseline(targets, inventory, seed: int) -> AnswerKey:
    """Uniform sense choice per covered target; same seed, same key."""
    rng = random.Random(seed)
    entries = []
    for target in targets:
        senses = inventory.senses(target.lemma, target.pos)
        if senses:
            entries.append((target.instance_id, rng.choice(senses).sense_id))
    return AnswerKey(entries)


def read_key(path) -> AnswerKey:
    """Read ``instance_id<SPACE>sense_id`` lines; # comments allowed."""
    entries = []
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise KeyFormatError(
                    f"{path}:{line_number}: expected 'instance_id sense_id'"
                )
            entries.append((parts[0], parts[1]))
    try:
        return AnswerKey(entries)
    except KeyFormatError as err:
        raise KeyFormatError(f"{path}: {err}") from None


def format_key(key: AnswerKey) -> str:
    return "".join(f"{iid} {sid}\n" for iid, sid in key.entries)


def write_key(key: AnswerKey, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_key(key))
