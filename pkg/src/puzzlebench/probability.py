"""Monty Hall and birthday-collision probabilities, exact and simulated.

Exact results use `fractions.Fraction` so probabilities stay reduced
rationals and complementary strategies sum to exactly 1. Simulations run on
the package's documented generator (see rng.py) and are reproducible per
seed; sharded runs derive one independent stream per shard.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidN
from .rng import SplitMix64, derive

DAYS = 365


class Strategy(enum.Enum):
    STAY = "STAY"
    SWITCH = "SWITCH"


class Outcome(enum.Enum):
    CAR = "CAR"
    GOAT = "GOAT"


class BirthdayFormula(enum.Enum):
    EXACT = "EXACT"
    APPROX = "APPROX"


@dataclass(frozen=True)
class MontyLeaf:
    """One root-to-leaf path of the Monty Hall decision tree."""

    path: str
    probability: Fraction
    if_stay: Outcome
    if_switch: Outcome


@dataclass(frozen=True)
class MontyTree:
    leaves: tuple[MontyLeaf, ...]

    def total(self) -> Fraction:
        return sum((leaf.probability for leaf in self.leaves), Fraction(0))


@dataclass(frozen=True)
class TrialConfig:
    trials: int
    seed: int
    shards: int = 1

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidN(f"trials must be >= 1, got {self.trials}")
        if self.shards < 1:
            raise InvalidN(f"shards must be >= 1, got {self.shards}")


def monty_tree() -> MontyTree:
    """The full decision tree with the contestant's pick fixed on door 1.

    Fixing the pick loses nothing by symmetry. The car is behind each door
    with probability 1/3; when it is behind the picked door the host
    chooses between the two goat doors uniformly, otherwise the reveal is
    forced.
    """
    third = Fraction(1, 3)
    half = Fraction(1, 2)
    leaves = (
        MontyLeaf("car 1, pick 1, host opens 2", third * half, Outcome.CAR, Outcome.GOAT),
        MontyLeaf("car 1, pick 1, host opens 3", third * half, Outcome.CAR, Outcome.GOAT),
        MontyLeaf("car 2, pick 1, host opens 3", third, Outcome.GOAT, Outcome.CAR),
        MontyLeaf("car 3, pick 1, host opens 2", third, Outcome.GOAT, Outcome.CAR),
    )
    return MontyTree(leaves=leaves)


def monty_exact(strategy: Strategy) -> Fraction:
    """Win probability of a strategy, summed over the tree's leaves."""
    tree = monty_tree()
    total = Fraction(0)
    for leaf in tree.leaves:
        outcome = leaf.if_stay if strategy is Strategy.STAY else leaf.if_switch
        if outcome is Outcome.CAR:
            total += leaf.probability
    return total


def _monty_trial(rng: SplitMix64, strategy: Strategy) -> bool:
    car = rng.randrange(3)
    pick = rng.randrange(3)
    goats = [d for d in range(3) if d != pick and d != car]
    host = goats[rng.randrange(len(goats))]
    if strategy is Strategy.SWITCH:
        pick = next(d for d in range(3) if d != pick and d != host)
    return pick == car


def monty_simulate(strategy: Strategy, cfg: TrialConfig) -> float:
    """Win rate over cfg.trials simulated games. Deterministic per config."""
    wins = 0
    per_shard = cfg.trials // cfg.shards
    leftover = cfg.trials - per_shard * cfg.shards
    for shard in range(cfg.shards):
        rng = SplitMix64(derive(cfg.seed, shard))
        count = per_shard + (1 if shard < leftover else 0)
        for _ in range(count):
            if _monty_trial(rng, strategy):
                wins += 1
    return wins / cfg.trials


def _require_positive(n: int) -> None:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")


def birthday_exact(n: int) -> float:
    """1 - prod_{i=1}^{n-1} (1 - i/365), clamped to 1 for n >= 366.

    The survival product is carried as an exact rational and converted to
    float once at the end.
    """
    _require_positive(n)
    if n > DAYS:
        return 1.0
    survival = Fraction(1)
    for i in range(1, n):
        survival *= Fraction(DAYS - i, DAYS)
    return float(1 - survival)


def birthday_approx(n: int) -> float:
    """1 - (364/365)^C(n,2), the pairwise-independence approximation."""
    _require_positive(n)
    pairs = n * (n - 1) // 2
    return 1.0 - math.pow(364 / DAYS, pairs)


def birthday_threshold(target: float, formula: BirthdayFormula) -> int:
    """Smallest n whose collision probability reaches the target.

    Both formulas are non-decreasing in n and reach 1 (exact) or approach
    it (approx), so an upward scan terminates for any target in (0, 1).
    """
    if not 0 < target < 1:
        raise InvalidN(f"target must be in (0, 1), got {target}")
    fn = birthday_exact if formula is BirthdayFormula.EXACT else birthday_approx
    n = 1
    while fn(n) < target:
        n += 1
    return n


def birthday_simulate(n: int, cfg: TrialConfig) -> float:
    """Fraction of trials in which n uniform draws from 365 days collide."""
    _require_positive(n)
    if n > DAYS:
        return 1.0
    collisions = 0
    per_shard = cfg.trials // cfg.shards
    leftover = cfg.trials - per_shard * cfg.shards
    for shard in range(cfg.shards):
        rng = SplitMix64(derive(cfg.seed, shard))
        count = per_shard + (1 if shard < leftover else 0)
        for _ in range(count):
            seen: set[int] = set()
            for _ in range(n):
                day = rng.randrange(DAYS)
                if day in seen:
                    collisions += 1
                    break
                seen.add(day)
    return collisions / cfg.trials
