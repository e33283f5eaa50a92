#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times vocabulary training and greedy encoding on a synthetic corpus and
verifies that both kernels produce identical output.

    python benchmarks/bench_kernels.py [--lines 8000] [--budget 4000]
"""

import argparse
import time
from collections import Counter

from hebtok import synth
from hebtok._kernel import load_compiled, load_pure
from hebtok.pretokenize import prefsuf_pretokenize
from hebtok.wordpiece import SPECIAL_TOKENS, seeded_affix_atoms


def prepare(n_lines: int, seed: int = 3):
    counts: Counter[str] = Counter()
    texts: list[str] = []
    for line in synth.sample_corpus(n_lines, seed=seed):
        for token in prefsuf_pretokenize(line):
            marked = token.marked()
            counts[marked] += 1
            texts.append(marked)
    atoms = set(seeded_affix_atoms())
    words = sorted(w for w in counts if len(w) >= 2 and w not in atoms)
    freqs = [counts[w] for w in words]
    return words, freqs, texts


def bench_train(kernel, words, freqs, budget):
    start = time.perf_counter()
    merges = kernel.train_merges(list(words), list(freqs), budget, 2, "##", set())
    return time.perf_counter() - start, merges


def bench_encode(kernel, texts, index):
    start = time.perf_counter()
    for text in texts:
        kernel.encode_word(text, index, "##", "[UNK]", 100)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lines", type=int, default=8000)
    parser.add_argument("--budget", type=int, default=4000, help="merge budget")
    args = parser.parse_args()

    kernels = [load_pure()]
    compiled = load_compiled()
    if compiled is not None:
        kernels.append(compiled)
    else:
        print("note: compiled kernel not built; benchmarking the fallback only")

    words, freqs, texts = prepare(args.lines)
    print(f"corpus: {args.lines} lines, {len(texts)} pre-tokens, {len(words)} unique trainables")

    results = {}
    merge_outputs = {}
    for kernel in kernels:
        train_time, merges = bench_train(kernel, words, freqs, args.budget)
        alphabet = sorted({c for w in words for c in w})
        index = {t: i for i, t in enumerate(
            [*SPECIAL_TOKENS, *alphabet, *("##" + c for c in alphabet), *merges]
        )}
        encode_time = bench_encode(kernel, texts, index)
        results[kernel.KERNEL_NAME] = (train_time, encode_time)
        merge_outputs[kernel.KERNEL_NAME] = merges

    if len(merge_outputs) == 2:
        pure_merges, fast_merges = merge_outputs["pure-python"], merge_outputs["cython"]
        assert pure_merges == fast_merges, "kernels disagree on merge output"
        print(f"kernels agree on all {len(pure_merges)} merges")

    print(f"\n{'kernel':<14} {'train (s)':>10} {'encode (s)':>11}")
    for name, (train_time, encode_time) in results.items():
        print(f"{name:<14} {train_time:>10.2f} {encode_time:>11.2f}")
    if len(results) == 2:
        pure_t, pure_e = results["pure-python"]
        fast_t, fast_e = results["cython"]
        print(f"{'speedup':<14} {pure_t / fast_t:>9.1f}x {pure_e / fast_e:>10.1f}x")


if __name__ == "__main__":
    main()
