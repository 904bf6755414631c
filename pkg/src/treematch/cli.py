"""Command-line front end.

Subcommands: extract, build-kb, kb-stats, disambiguate, evaluate.
Exit codes: 0 success, 2 I/O or usage, 3 corpus/input format, 4 target
resolution, 5 key format.
"""

from __future__ import annotations

import argparse
import multiprocessing
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus as corpus_mod
from . import evaluation
from . import inventory as inventory_mod
from . import kb as kb_mod
from . import wsd


@dataclass
class RunConfig:
    strength_mode: str = "normalized"
    score_mode: str = "agreement"
    min_count_prune: int = 0
    worker_count: int = 0  # 0 = use available parallelism

    def workers(self) -> int:
        if self.worker_count > 0:
            return self.worker_count
        return os.cpu_count() or 1


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        strength_mode=getattr(args, "strength", "normalized"),
        score_mode=getattr(args, "score", "agreement"),
        min_count_prune=getattr(args, "prune", 0),
        worker_count=getattr(args, "workers", 0),
    )


def _read_word_list(path) -> set[str]:
    words = set()
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            word = raw.strip()
            if word and not word.startswith("#"):
                words.add(word.lower())
    return words


def read_targets(path) -> list[wsd.Target]:
    """Read target rows ``instance_id sentence_id token_index lemma pos``.

    A lemma of ``_`` is resolved later from the sentence tree.
    """
    targets = []
    with open(path, encoding="utf-8") as handle:
        for line_number, raw in enumerate(handle, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise wsd.TargetResolutionError(
                    f"{path}:{line_number}: expected 5 tab-separated fields, got {len(fields)}"
                )
            instance_id, sentence_id, token_s, lemma, pos = fields
            try:
                token_index = int(token_s)
            except ValueError:
                raise wsd.TargetResolutionError(
                    f"{path}:{line_number}: non-numeric token index {token_s!r}"
                ) from None
            if token_index < 1:
                raise wsd.TargetResolutionError(
                    f"{path}:{line_number}: token index must be >= 1, got {token_index}"
                )
            pos_tag = corpus_mod.normalize_pos(pos)
            if pos_tag not in corpus_mod.CONTENT_POS:
                raise wsd.TargetResolutionError(
                    f"{path}:{line_number}: pos must be one of n v a r, got {pos!r}"
                )
            targets.append(
                wsd.Target(instance_id, sentence_id, token_index, lemma.lower(), pos_tag)
            )
    return targets


def resolve_target_lemmas(
    targets: list[wsd.Target], trees: list[corpus_mod.ParseTree]
) -> list[wsd.Target]:
    """Fill in ``_`` lemmas from the parsed sentence tokens."""
    trees_by_id = {tree.sentence_id: tree for tree in trees}
    resolved = []
    for target in targets:
        if target.lemma != "_":
            resolved.append(target)
            continue
        tree = trees_by_id.get(target.sentence_id)
        if tree is None:
            raise wsd.TargetResolutionError(
                f"instance {target.instance_id}: unknown sentence_id {target.sentence_id!r}"
            )
        try:
            node = tree.node(target.token_index)
        except IndexError:
            raise wsd.TargetResolutionError(
                f"instance {target.instance_id}: token index {target.token_index}"
                f" outside sentence {target.sentence_id!r}"
            ) from None
        resolved.append(
            wsd.Target(
                target.instance_id,
                target.sentence_id,
                target.token_index,
                node.lemma,
                target.pos,
            )
        )
    return resolved


def _expand_corpus_paths(paths: list[str]) -> list[str]:
    """Explicit files as given; directories contribute their *.conll files."""
    files = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(str(p) for p in sorted(path.rglob("*.conll")) if p.is_file())
        else:
            files.append(str(path))
    return files


def _build_shard(paths: list[str]) -> kb_mod.KnowledgeBase:
    kb = kb_mod.KnowledgeBase()
    for path in paths:
        try:
            for tree in corpus_mod.read_conll_file(path):
                kb.merge_tree(tree)
        except corpus_mod.TreeStructureError as err:
            raise corpus_mod.TreeStructureError(f"{path}: {err}") from None
        except corpus_mod.CorpusFormatError as err:
            raise corpus_mod.CorpusFormatError(f"{path}: {err}") from None
    return kb


def format_stats(stats: kb_mod.KbStats) -> str:
    return (
        f"nodes {stats.node_count} edges {stats.edge_count}"
        f" weight {stats.total_weight}"
        f" avg_connections {stats.avg_connections:.3f}"
        f" avg_dependents {stats.avg_dependents:.3f}"
    )


def cmd_extract(args) -> int:
    targets = _read_word_list(args.targets)
    count = 0
    with open(args.out, "w", encoding="utf-8") as out:
        for input_path in args.inputs:
            raw = Path(input_path).read_text(encoding="utf-8")
            for sentence, matched in corpus_mod.extract_sentences(raw, targets):
                out.write(f"{sentence}\t{' '.join(sorted(matched))}\n")
                count += 1
    print(f"wrote {count} sentences to {args.out}")
    return 0


def cmd_build_kb(args) -> int:
    config = _config_from_args(args)
    files = _expand_corpus_paths(args.corpus)
    if not files:
        print("warning: no corpus files found", file=sys.stderr)
    workers = min(config.workers(), max(len(files), 1))
    kb = kb_mod.KnowledgeBase()
    if workers > 1 and len(files) > 1:
        shards = [files[i::workers] for i in range(workers)]
        shards = [s for s in shards if s]
        with multiprocessing.Pool(processes=len(shards)) as pool:
            for shard_kb in pool.map(_build_shard, shards):
                kb.merge(shard_kb)
    else:
        kb = _build_shard(files)
    if config.min_count_prune > 0:
        kb = kb_mod.prune_kb(kb, config.min_count_prune)
    kb_mod.save_kb(kb, args.out)
    print(format_stats(kb.stats()))
    return 0


def cmd_kb_stats(args) -> int:
    kb = kb_mod.load_kb(args.kb)
    print(format_stats(kb.stats()))
    return 0


def cmd_disambiguate(args) -> int:
    config = _config_from_args(args)
    kb = kb_mod.load_kb(args.kb)
    if config.min_count_prune > 0:
        kb = kb_mod.prune_kb(kb, config.min_count_prune)
    inventory = inventory_mod.load_inventory(args.inventory)
    trees = corpus_mod.read_conll_file(args.input)
    targets = resolve_target_lemmas(read_targets(args.targets), trees)
    key = wsd.disambiguate_document(
        trees,
        targets,
        inventory,
        kb,
        strength_mode=config.strength_mode,
        score_mode=config.score_mode,
        workers=config.workers(),
    )
    evaluation.write_key(key, args.out)
    print(f"answered {len(key)} skipped {len(targets) - len(key)}")
    return 0


def cmd_evaluate(args) -> int:
    gold = evaluation.read_key(args.gold)
    if args.mfs or args.random:
        if not args.targets or not args.inventory:
            print(
                "error: --mfs/--random need --targets and --inventory",
                file=sys.stderr,
            )
            return 2
        inventory = inventory_mod.load_inventory(args.inventory)
        targets = read_targets(args.targets)
        for target in targets:
            if target.lemma == "_":
                raise wsd.TargetResolutionError(
                    f"instance {target.instance_id}: baselines need explicit lemmas"
                )
        if args.mfs:
            answers = evaluation.mfs_baseline(targets, inventory)
        else:
            answers = evaluation.random_baseline(targets, inventory, args.seed)
    else:
        if not args.answers:
            print("error: answers file required unless --mfs/--random", file=sys.stderr)
            return 2
        answers = evaluation.read_key(args.answers)
    report = evaluation.score_answers(gold, answers)
    for instance_id in report.spurious:
        print(f"warning: instance {instance_id} not in gold", file=sys.stderr)
    print(
        f"precision {report.precision:.3f} recall {report.recall:.3f}"
        f" attempted {report.attempted} total {report.total}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treematch",
        description="Build dependency knowledge bases and disambiguate word senses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser(
        "extract", help="pull sentences containing target words out of raw text"
    )
    p_extract.add_argument("inputs", nargs="+", help="plain-text input files")
    p_extract.add_argument(
        "--targets", required=True, help="word list, one per line; empty file keeps all"
    )
    p_extract.add_argument("--out", required=True, help="output sentences file")
    p_extract.set_defaults(func=cmd_extract)

    p_build = sub.add_parser("build-kb", help="merge parsed sentences into a knowledge base")
    p_build.add_argument("corpus", nargs="+", help="CoNLL files, or directories of *.conll")
    p_build.add_argument("--out", required=True, help="output TMKB path")
    p_build.add_argument("--prune", type=int, default=0, help="drop edges seen fewer times")
    p_build.add_argument("--workers", type=int, default=0, help="0 = all cores")
    p_build.set_defaults(func=cmd_build_kb)

    p_stats = sub.add_parser("kb-stats", help="print node/edge statistics of a TMKB file")
    p_stats.add_argument("kb")
    p_stats.set_defaults(func=cmd_kb_stats)

    p_dis = sub.add_parser("disambiguate", help="choose a sense for every target word")
    p_dis.add_argument("--kb", required=True)
    p_dis.add_argument("--inventory", required=True)
    p_dis.add_argument("--input", required=True, help="CoNLL file with the sentences")
    p_dis.add_argument("--targets", required=True, help="target rows, tab-separated")
    p_dis.add_argument("--out", required=True, help="output answer key")
    p_dis.add_argument(
        "--strength", choices=["raw", "normalized"], default="normalized"
    )
    p_dis.add_argument(
        "--score", choices=["agreement", "tree", "node"], default="agreement"
    )
    p_dis.add_argument("--prune", type=int, default=0)
    p_dis.add_argument("--workers", type=int, default=0)
    p_dis.set_defaults(func=cmd_disambiguate)

    p_eval = sub.add_parser("evaluate", help="score an answer key against gold")
    p_eval.add_argument("gold")
    p_eval.add_argument("answers", nargs="?")
    p_eval.add_argument("--mfs", action="store_true", help="score the rank-1 baseline")
    p_eval.add_argument("--random", action="store_true", help="score a random baseline")
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--targets", help="target rows (baselines only)")
    p_eval.add_argument("--inventory", help="inventory file (baselines only)")
    p_eval.set_defaults(func=cmd_evaluate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except corpus_mod.CorpusFormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except inventory_mod.InventoryFormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except kb_mod.KbFormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except wsd.TargetResolutionError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except evaluation.KeyFormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
