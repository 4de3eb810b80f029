"""Random Steiner triple systems via Stinson-style hill climbing.

Randomness comes from a self-contained SplitMix64 generator so that a given
(v, seed) pair reproduces the same system on any platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sts import SteinerTripleSystem, admissible_order

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG (Steele/Lea/Flood).  Fixed algorithm, 64-bit state.

    next64: state += 0x9E3779B97F4A7C15; z = state;
            z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
            z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in 0..n-1 (rejection sampling, no modulo bias)."""
        limit = _MASK64 - (_MASK64 + 1) % n
        while True:
            x = self.next64()
            if x <= limit:
                return x % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


class HillClimbError(RuntimeError):
    """Raised when the switch-step budget is exhausted across all restarts."""

    def __init__(self, msg: str, iterations: int):
        super().__init__(msg)
        self.iterations = iterations


@dataclass(frozen=True)
class HillClimbConfig:
    v: int
    seed: int
    max_stagnation: int = 0  # 0 selects the default 100*v*v
    max_restarts: int = 16

    def stagnation_budget(self) -> int:
        return self.max_stagnation if self.max_stagnation > 0 else 100 * self.v * self.v


def _derived_seed(seed: int, attempt: int) -> int:
    rng = SplitMix64(seed)
    for _ in range(attempt):
        rng.next64()
    return rng.next64()


def _climb_once(v: int, seed: int, budget: int):
    """One hill-climbing attempt; returns a block list or None on stagnation.

    State: a partial system.  Each step picks a live point x (degree below
    (v-1)/2), two points not yet paired with x, adds the block {x, y, z} and,
    if the pair {y, z} was already covered, removes the conflicting block.
    The block count never decreases.
    """
    rng = SplitMix64(seed)
    target = v * (v - 1) // 6
    rmax = (v - 1) // 2
    empty = v
    table = [empty] * (v * v)
    deg = [0] * v
    blocks = set()
    best = 0
    stale = 0
    steps = 0
    while len(blocks) < target:
        if stale > budget:
            return None, steps
        steps += 1
        live = [p for p in range(v) if deg[p] < rmax]
        x = live[rng.below(len(live))]
        free = [p for p in range(v) if p != x and table[x * v + p] == empty]
        i = rng.below(len(free))
        j = rng.below(len(free) - 1)
        if j >= i:
            j += 1
        y, z = free[i], free[j]
        w = table[y * v + z]
        if w != empty:
            blocks.discard(tuple(sorted((y, z, w))))
            for a, b in ((y, z), (y, w), (z, w)):
                table[a * v + b] = empty
                table[b * v + a] = empty
            for p in (y, z, w):
                deg[p] -= 1
        blocks.add(tuple(sorted((x, y, z))))
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            table[a * v + b] = c
            table[b * v + a] = c
        for p in (x, y, z):
            deg[p] += 1
        if len(blocks) > best:
            best = len(blocks)
            stale = 0
        else:
            stale += 1
    return blocks, steps


def hill_climb(cfg: HillClimbConfig) -> SteinerTripleSystem:
    """Build a random STS(v); deterministic for a fixed (v, seed)."""
    if not admissible_order(cfg.v):
        raise ValueError(f"inadmissible order {cfg.v} (must be 1 or 3 mod 6)")
    budget = cfg.stagnation_budget()
    total_steps = 0
    for attempt in range(cfg.max_restarts + 1):
        seed = cfg.seed if attempt == 0 else _derived_seed(cfg.seed, attempt)
        blocks, steps = _climb_once(cfg.v, seed, budget)
        total_steps += steps
        if blocks is not None:
            return SteinerTripleSystem(cfg.v, blocks)
    raise HillClimbError(
        f"hill climb for v={cfg.v} seed={cfg.seed} exhausted "
        f"{cfg.max_restarts + 1} attempts ({total_steps} switch steps)",
        total_steps,
    )


def random_sts(v: int, seed: int) -> SteinerTripleSystem:
    return hill_climb(HillClimbConfig(v=v, seed=seed))
