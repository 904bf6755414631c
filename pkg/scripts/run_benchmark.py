#!/usr/bin/env python3
"""Time the full pipeline on a synthetic bundle: build, disambiguate, evaluate.

Example:
    python3 scripts/run_benchmark.py --sentences 10000 --targets 1000 --workers 4
"""

import argparse
import tempfile
import time
from pathlib import Path

from treematch import cli, synthetic


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", help="working directory (default: a temp dir)")
    parser.add_argument("--sentences", type=int, default=10_000)
    parser.add_argument("--targets", type=int, default=1_000)
    parser.add_argument("--seed", type=int, default=607)
    parser.add_argument("--workers", type=int, default=0, help="0 = all cores")
    parser.add_argument("--strength", choices=["raw", "normalized"], default="normalized")
    parser.add_argument("--score", choices=["agreement", "tree", "node"], default="agreement")
    args = parser.parse_args()

    workdir = Path(args.dir) if args.dir else Path(tempfile.mkdtemp(prefix="treematch-bench-"))
    print(f"working directory: {workdir}")

    started = time.perf_counter()
    data = synthetic.build(seed=args.seed, sentences=args.sentences, targets=args.targets)
    paths = synthetic.write(data, workdir, corpus_shards=8)
    generated = time.perf_counter()
    print(f"generate: {generated - started:.2f} s")

    kb_path = workdir / "kb.tmkb"
    code = cli.main(
        [
            "build-kb",
            *paths["corpus"],
            "--out",
            str(kb_path),
            "--workers",
            str(args.workers),
        ]
    )
    if code != 0:
        return code
    built = time.perf_counter()
    print(f"build-kb: {built - generated:.2f} s")

    answers_path = workdir / "answers.key"
    code = cli.main(
        [
            "disambiguate",
            "--kb",
            str(kb_path),
            "--inventory",
            paths["inventory"],
            "--input",
            paths["document"],
            "--targets",
            paths["targets"],
            "--out",
            str(answers_path),
            "--workers",
            str(args.workers),
            "--strength",
            args.strength,
            "--score",
            args.score,
        ]
    )
    if code != 0:
        return code
    disambiguated = time.perf_counter()
    print(f"disambiguate: {disambiguated - built:.2f} s")

    code = cli.main(["evaluate", paths["gold"], str(answers_path)])
    if code != 0:
        return code
    print(f"total: {time.perf_counter() - started:.2f} s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
