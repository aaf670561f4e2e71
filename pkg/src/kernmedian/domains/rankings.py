"""Ranking-with-ties space: generalized Kendall distance and a greedy
disagreement-moving weighted mean.

A ranking is an ordered sequence of tie buckets; item pairs tied in exactly
one of two rankings count half a disagreement, strictly reversed pairs a
full one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import _hot
from ..core import DomainAdapter


@dataclass(frozen=True)
class Ranking:
    """Ordered buckets of item tokens; items inside a bucket are tied."""

    buckets: tuple

    def __init__(self, buckets):
        canonical = tuple(tuple(sorted(bucket)) for bucket in buckets)
        if not canonical or any(len(b) == 0 for b in canonical):
            raise ValueError("buckets must be non-empty")
        seen = [item for bucket in canonical for item in bucket]
        if len(set(seen)) != len(seen):
            raise ValueError("items must be unique across buckets")
        object.__setattr__(self, "buckets", canonical)

    @classmethod
    def parse(cls, text: str) -> "Ranking":
        """Parse 'a>b=c>d' notation: '>' separates buckets, '=' ties."""
        buckets = []
        for part in text.strip().split(">"):
            items = [t for t in part.split("=") if t]
            if not items:
                raise ValueError(f"empty bucket in ranking {text!r}")
            buckets.append(items)
        return cls(buckets)

    def format(self) -> str:
        return ">".join("=".join(bucket) for bucket in self.buckets)

    @property
    def items(self) -> frozenset:
        return frozenset(item for bucket in self.buckets for item in bucket)

    def positions(self) -> dict:
        return {item: pos for pos, bucket in enumerate(self.buckets) for item in bucket}

    def __len__(self) -> int:
        return sum(len(b) for b in self.buckets)


def _aligned_positions(r1: Ranking, r2: Ranking):
    if r1.items != r2.items:
        raise ValueError("rankings must rank the same item set")
    universe = sorted(r1.items)
    p1 = r1.positions()
    p2 = r2.positions()
    a1 = np.array([p1[i] for i in universe], dtype=np.int64)
    a2 = np.array([p2[i] for i in universe], dtype=np.int64)
    return universe, a1, a2


def kendall_tau_gen(r1: Ranking, r2: Ranking) -> float:
    """Summed pairwise disagreements; multiples of 0.5 in presence of ties."""
    _, a1, a2 = _aligned_positions(r1, r2)
    return float(_hot.ranking_disagreements(a1, a2))


def _pair_disagreement(rel1: int, rel2: int) -> float:
    if rel1 == 0 or rel2 == 0:
        return 0.5 if rel1 != rel2 else 0.0
    return 1.0 if rel1 != rel2 else 0.0


def _item_disagreements(m: Ranking, target: Ranking) -> dict:
    """Per-item sum of pair disagreements between m and the target."""
    universe, am, at = _aligned_positions(m, target)
    rel_m = np.sign(am[:, None] - am[None, :])
    rel_t = np.sign(at[:, None] - at[None, :])
    tied_one = (rel_m == 0) ^ (rel_t == 0)
    opposite = rel_m * rel_t == -1
    per_item = opposite.sum(axis=1) + 0.5 * tied_one.sum(axis=1)
    return dict(zip(universe, per_item.astype(float)))


def _placements(buckets_without: list, item) -> list:
    """All reinsertion points for an item, scanned top-down.

    Alternates gap positions (new singleton bucket) and existing buckets
    (join as a tie), ending with the bottom gap.
    """
    options = []
    for pos in range(len(buckets_without)):
        options.append(("gap", pos))
        options.append(("join", pos))
    options.append(("gap", len(buckets_without)))
    return options


def _apply_placement(buckets_without: list, item, placement) -> Ranking:
    kind, pos = placement
    rebuilt = [list(b) for b in buckets_without]
    if kind == "join":
        rebuilt[pos].append(item)
    else:
        rebuilt.insert(pos, [item])
    return Ranking(rebuilt)


def _item_disagreement_for(candidate: Ranking, item, target: Ranking) -> float:
    pos_c = candidate.positions()
    pos_t = target.positions()
    total = 0.0
    pc = pos_c[item]
    pt = pos_t[item]
    for other in candidate.items:
        if other == item:
            continue
        rel_c = (pc > pos_c[other]) - (pc < pos_c[other])
        rel_t = (pt > pos_t[other]) - (pt < pos_t[other])
        total += _pair_disagreement(rel_c, rel_t)
    return total


def _improving_moves(m: Ranking, item, current_d2: float, current_d1: float,
                     r1: Ranking, r2: Ranking, from_r1: float):
    """Reinsertions of an item that strictly lower its disagreement with r2.

    Yields, in top-down scan order, tuples of the candidate ranking, its
    improvement toward r2, its distance from r1, and the move's geodesic
    damage: how much farther the sum of both distances strays from the
    direct distance. Moving one item only changes that item's pair
    relations, so both distance changes come from per-item recounts.
    """
    without = [list(b) for b in m.buckets]
    for bucket in without:
        if item in bucket:
            bucket.remove(item)
    without = [b for b in without if b]
    for placement in _placements(without, item):
        cand = _apply_placement(without, item, placement)
        d2 = _item_disagreement_for(cand, item, r2)
        if d2 >= current_d2 - 1e-12:
            continue
        d1 = _item_disagreement_for(cand, item, r1)
        improvement = current_d2 - d2
        after = from_r1 + (d1 - current_d1)
        damage = (d1 - current_d1) - improvement
        yield cand, improvement, after, damage


def ranking_weighted_mean(r1: Ranking, r2: Ranking, alpha: float) -> Ranking:
    """Ranking at ratio alpha between r1 and r2.

    Greedy: repeatedly take the item disagreeing most with r2 (ties to the
    lexicographically smallest token) and reposition it, including into or
    out of ties, at a placement with lower disagreement. Moves that stay on
    a geodesic between the endpoints are preferred; off-geodesic moves are
    taken only when unavoidable (locked tie groups), choosing minimal
    damage. Once every improving placement would cross the target ratio,
    the one landing closest to it is chosen and the search stops. At ratio
    one the transformation runs until the result orders items exactly like
    r2.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if r1.items != r2.items:
        raise ValueError("rankings must rank the same item set")
    total = kendall_tau_gen(r1, r2)
    target = alpha * total
    if target <= 0.0 or total == 0.0:
        return r1
    m = r1
    while True:
        remaining = kendall_tau_gen(m, r2)
        from_r1 = kendall_tau_gen(r1, m)
        if alpha >= 1.0:
            if remaining <= 0.0:
                break
        elif from_r1 >= target - 1e-9:
            break
        per_to_target = _item_disagreements(m, r2)
        per_from_start = _item_disagreements(m, r1)
        order = [it for it in sorted(per_to_target, key=lambda it: (-per_to_target[it], it))
                 if per_to_target[it] > 0.0]
        moved = False
        fallback = None
        crossing = None
        for rank, item in enumerate(order):
            clean = None
            for pos, (cand, gain, after, damage) in enumerate(
                    _improving_moves(m, item, per_to_target[item],
                                     per_from_start[item], r1, r2, from_r1)):
                eligible = alpha >= 1.0 or after < target - 1e-9
                if eligible:
                    key = (damage, -gain, pos)
                    if damage <= 1e-9:
                        if clean is None or key < clean[0]:
                            clean = (key, cand)
                    elif fallback is None or (damage, -gain, rank, pos) < fallback[0]:
                        fallback = ((damage, -gain, rank, pos), cand)
                elif alpha < 1.0:
                    key = (abs(after - target), damage, rank, pos)
                    if crossing is None or key < crossing[0]:
                        crossing = (key, cand)
            if clean is not None:
                # geodesic-preserving move for the most disagreeing item wins
                m = clean[1]
                moved = True
                break
        if moved:
            continue
        if fallback is not None:
            m = fallback[1]
            continue
        if crossing is not None:
            # every improving move crosses the target: land closest to it
            m = crossing[1]
        break
    return m


ADAPTER = DomainAdapter("ranking", kendall_tau_gen, ranking_weighted_mean)
