"""
Seeded input generators.

All randomness comes from SplitMix64, written out here so any language can
reproduce the streams:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z ^ (z >> 31)

The i-th output (1-based) only depends on seed + i * gamma, which lets the
uniform generator compute whole blocks of the stream with numpy. A uniform
character is '(' when bit 63 of its output is clear and ')' otherwise.
"""
import enum
import logging

import numpy as np
from dataclasses import dataclass

from .core import Bin, Forest, Nul, ParenError, Tree, pr, prf

logger = logging.getLogger(__name__)

GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK = (1 << 64) - 1

_BLOCK = 1 << 20


class GenError(ParenError, ValueError):
    pass


class GenKind(str, enum.Enum):
    UNIFORM = "uniform"
    BALANCED = "balanced"
    FOREST = "forest"
    DEEP = "deep"
    FLAT = "flat"


@dataclass(frozen=True)
class GenSpec:
    kind: GenKind
    length: int
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", GenKind(self.kind))
        if self.length < 0:
            raise GenError(f"length must be non-negative, got {self.length}")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK
        z = ((z ^ (z >> 27)) * MIX2) & MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        # modulo bias is below 2^-40 for the bounds used here
        return self.next() % n

    def block(self, count: int) -> np.ndarray:
        """The next count outputs as a uint64 array; same values as calling next() count times."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self.state) + steps * np.uint64(GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
        z = z ^ (z >> np.uint64(31))
        self.state = (self.state + count * GAMMA) & MASK
        return z


def gen_uniform(spec: GenSpec) -> str:
    rng = SplitMix64(spec.seed)
    parts = []
    remaining = spec.length
    while remaining > 0:
        count = min(remaining, _BLOCK)
        high = rng.block(count) >> np.uint64(63)
        parts.append(np.where(high == 0, 0x28, 0x29).astype(np.uint8).tobytes())
        remaining -= count
    return b"".join(parts).decode("ascii")


_SPLIT, _LEFT, _RIGHT, _MIXED = range(4)


def _left_nodes(rng: SplitMix64, mode: int, below: int) -> int:
    """How many of the `below` nodes under a Bin go to its left subtree."""
    if mode == _MIXED:
        mode = rng.below(3)
    if mode == _LEFT and rng.below(4):
        return below
    if mode == _RIGHT and rng.below(4):
        return 0
    return rng.below(below + 1)


def _build_tree(rng: SplitMix64, nodes: int) -> Tree:
    mode = rng.below(4)

    tasks = [nodes]  # None marks "join the last two results"
    results = []
    while tasks:
        task = tasks.pop()
        if task is None:
            right = results.pop()
            results[-1] = Bin(results[-1], right)
        elif task == 0:
            results.append(Nul)
        else:
            left = _left_nodes(rng, mode, task - 1)
            tasks.append(None)
            tasks.append(task - 1 - left)
            tasks.append(left)
    return results[0]


def gen_tree(spec: GenSpec) -> Tree:
    """Random tree printing to spec.length characters.

    One shape mode is drawn per tree: uniform split of the nodes below each
    Bin, mostly-left spine, mostly-right spine, or a fresh choice among those
    three at every node. Not uniform over shapes.
    """
    if spec.length % 2:
        raise GenError(f"a tree prints to an even length, got {spec.length}")
    return _build_tree(SplitMix64(spec.seed), spec.length // 2)


def gen_forest(spec: GenSpec) -> Forest:
    """Random forest whose printed form has spec.length characters."""
    rng = SplitMix64(spec.seed)
    total = spec.length

    parity = total % 2
    separators = parity + 2 * rng.below((total - parity) // 2 + 1)
    nodes = (total - separators) // 2

    cuts = sorted(rng.below(nodes + 1) for _ in range(separators))
    bounds = [0] + cuts + [nodes]
    return Forest(_build_tree(rng, hi - lo) for lo, hi in zip(bounds, bounds[1:]))


def gen_adversarial(spec: GenSpec) -> str:
    n = spec.length
    if spec.kind == GenKind.DEEP:
        return "(" * (n // 2) + ")" * (n - n // 2)
    if spec.kind == GenKind.FLAT:
        return "()" * (n // 2) + ")" * (n % 2)
    raise GenError(f"{spec.kind.value} is not an adversarial kind")


def gen_string(spec: GenSpec) -> str:
    logger.debug("generating %s", spec)
    if spec.kind == GenKind.UNIFORM:
        return gen_uniform(spec)
    if spec.kind == GenKind.BALANCED:
        return pr(gen_tree(spec))
    if spec.kind == GenKind.FOREST:
        return prf(gen_forest(spec))
    return gen_adversarial(spec)
