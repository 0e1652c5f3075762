#!/usr/bin/env python3
"""Decoding success as the number of channels grows, up to and past the guaranteed threshold."""

import argparse

from seqrecon.reconstruct import ambiguity_witness, build_code, required_channels, simulate


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    code = build_code(args.q, args.n, args.d)
    threshold, source = required_channels(args.q, args.n, args.t, args.d)
    print(f"greedy code: {len(code)} words of length {args.n}, d_min {args.d}; threshold {threshold} ({source})")
    for channels in range(1, threshold + 1):
        rep = simulate(args.q, args.n, args.t, args.d, args.trials, args.seed, channels, code=code)
        print(f"  {channels:>2} channels: {rep.unique / rep.trials:6.1%} unique "
              f"({rep.ambiguous} ambiguous, {rep.eligible}/{rep.code_size} codewords eligible)")
    for channels in range(threshold - 1, 0, -1):
        hit = ambiguity_witness(code, args.t, channels)
        if hit:
            c1, c2, outs = hit
            print(f"largest confusable output set: {channels} outputs shared by {c1} and {c2}: {outs.strings()}")
            break
    else:
        print("no two codewords share an output")


if __name__ == "__main__":
    main()
