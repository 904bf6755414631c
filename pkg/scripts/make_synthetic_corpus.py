#!/usr/bin/env python3
"""Write a seeded synthetic corpus/inventory/targets/gold bundle to a directory.

Example:
    python3 scripts/make_synthetic_corpus.py --dir /tmp/synth --sentences 10000 --targets 1000
"""

import argparse

from treematch import synthetic


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", required=True, help="output directory")
    parser.add_argument("--sentences", type=int, default=10_000)
    parser.add_argument("--targets", type=int, default=1_000)
    parser.add_argument("--vocab", type=int, default=300)
    parser.add_argument("--shards", type=int, default=8, help="corpus file count")
    parser.add_argument("--seed", type=int, default=607)
    args = parser.parse_args()

    data = synthetic.build(
        seed=args.seed,
        sentences=args.sentences,
        targets=args.targets,
        vocab_size=args.vocab,
    )
    paths = synthetic.write(data, args.dir, corpus_shards=args.shards)
    for kind, value in paths.items():
        if isinstance(value, list):
            for path in value:
                print(f"{kind}\t{path}")
        else:
            print(f"{kind}\t{value}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
