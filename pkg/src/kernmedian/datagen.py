"""Seeded synthetic dataset generators.

All generators are pure functions of (seed, parameters), draw from a named
64-bit-seeded PCG64 stream recorded in dataset metadata, and produce either
fully random objects or perturbed copies of one random base object.
"""

from __future__ import annotations

import numpy as np

from .domains.rankings import Ranking

GENERATOR_NAME = "numpy-pcg64"
DEFAULT_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _check_range(r, name):
    lo, hi = int(r[0]), int(r[1])
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid {name} range ({lo}, {hi})")
    return lo, hi


def _random_string(rng, length, alphabet):
    idx = rng.integers(0, len(alphabet), size=length)
    return "".join(alphabet[i] for i in idx)


def _perturb_string(rng, base: str, rate: float, alphabet: str) -> str:
    out = []
    for ch in base:
        if rng.random() < rate:
            op = int(rng.integers(0, 3))
            if op == 0:  # substitute with a different character
                pos = alphabet.index(ch) if ch in alphabet else -1
                pick = int(rng.integers(0, len(alphabet) - 1)) if pos >= 0 else int(
                    rng.integers(0, len(alphabet)))
                if pos >= 0 and pick >= pos:
                    pick += 1
                out.append(alphabet[pick])
            elif op == 1:  # insert before this position
                out.append(alphabet[int(rng.integers(0, len(alphabet)))])
                out.append(ch)
            # op == 2: delete (emit nothing)
        else:
            out.append(ch)
    return "".join(out)


def gen_strings(seed: int, count: int, len_range=(30, 50),
                alphabet: str = DEFAULT_ALPHABET, perturb_rate: float = 0.0,
                mode: str = "random") -> list[str]:
    """Random strings, or perturbed copies of one random base string.

    In "perturbed" mode every position of the base independently triggers a
    substitution, insertion or deletion (chosen uniformly) with probability
    perturb_rate; rate zero reproduces the base exactly.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    lo, hi = _check_range(len_range, "length")
    if not 0.0 <= perturb_rate < 1.0:
        raise ValueError("perturb_rate must lie in [0, 1)")
    if mode not in ("random", "perturbed"):
        raise ValueError(f"unknown mode {mode!r}")
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    rng = _rng(seed)
    if mode == "random":
        return [_random_string(rng, int(rng.integers(lo, hi + 1)), alphabet)
                for _ in range(count)]
    base = _random_string(rng, int(rng.integers(lo, hi + 1)), alphabet)
    return [_perturb_string(rng, base, perturb_rate, alphabet) for _ in range(count)]


def gen_clusterings(seed: int, count: int, m: int, k_range=(3, 10),
                    perturb_rate: float = 0.0, mode: str = "random") -> list[tuple]:
    """Random label vectors of length m, or perturbed copies of one base.

    Cluster counts are drawn per clustering from k_range. Perturbation
    switches each position to a different uniformly drawn label with
    probability perturb_rate (a no-op for single-cluster vectors).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    lo, hi = _check_range(k_range, "cluster count")
    if hi > m:
        raise ValueError("cluster count cannot exceed the vector length")
    if not 0.0 <= perturb_rate < 1.0:
        raise ValueError("perturb_rate must lie in [0, 1)")
    if mode not in ("random", "perturbed"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = _rng(seed)
    if mode == "random":
        out = []
        for _ in range(count):
            k = int(rng.integers(lo, hi + 1))
            out.append(tuple(int(x) for x in rng.integers(0, k, size=m)))
        return out
    k = int(rng.integers(lo, hi + 1))
    base = rng.integers(0, k, size=m)
    out = []
    for _ in range(count):
        labels = base.copy()
        if k > 1:
            for pos in range(m):
                if rng.random() < perturb_rate:
                    new = int(rng.integers(0, k - 1))
                    if new >= labels[pos]:
                        new += 1
                    labels[pos] = new
        out.append(tuple(int(x) for x in labels))
    return out


def gen_rankings(seed: int, count: int, m: int, tie_prob: float = 0.0) -> list[Ranking]:
    """Uniform random rankings of m items, with optional adjacent-tie merging."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    if not 0.0 <= tie_prob < 1.0:
        raise ValueError("tie_prob must lie in [0, 1)")
    rng = _rng(seed)
    width = len(str(m - 1)) if m > 1 else 1
    tokens = [f"i{idx:0{width}d}" for idx in range(m)]
    out = []
    for _ in range(count):
        perm = rng.permutation(m)
        buckets = [[tokens[int(perm[0])]]]
        for item in perm[1:]:
            if tie_prob > 0.0 and rng.random() < tie_prob:
                buckets[-1].append(tokens[int(item)])
            else:
                buckets.append([tokens[int(item)]])
        out.append(Ranking(buckets))
    return out


def dataset_metadata(domain: str, seed: int, params: dict) -> dict:
    """Sidecar metadata identifying the generator and its inputs."""
    return {
        "generator": GENERATOR_NAME,
        "domain": domain,
        "seed": int(seed),
        "params": params,
    }
