"""
Linear-time longest balanced segment.

The input is swept once from right to left. The stack is the forest the
parser would hold for the current suffix, with each tree's printed length
alongside it; its top is the longest balanced prefix of that suffix. A '('
meeting a lone tree cannot extend anything, so the stack restarts at [Nul].
"""
import logging

from dataclasses import dataclass
from typing import List, Tuple

from .core import CLOSE, OPEN, Bin, DomainError, Nul, Tree, validate
from .oracle import Candidate, scanr

logger = logging.getLogger(__name__)

SizedEntry = Tuple[Tree, int]


@dataclass(frozen=True)
class SizedForest:
    """Non-empty stack of (tree, size) pairs, top first."""
    entries: Tuple[SizedEntry, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("a sized forest holds at least one entry")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def seed(cls) -> "SizedForest":
        return cls(((Nul, 0),))

    @property
    def head(self) -> SizedEntry:
        return self.entries[0]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(n for _, n in self.entries)

    def __len__(self):
        return len(self.entries)


def _step_into(c: str, trees: List[Tree], sizes: List[int]):
    # trees/sizes keep the top at the end
    if c == CLOSE:
        trees.append(Nul)
        sizes.append(0)
    elif c == OPEN:
        if len(trees) > 1:
            t = trees.pop()
            trees[-1] = Bin(t, trees[-1])
            m = sizes.pop()
            sizes[-1] += 2 + m
        else:
            trees[0] = Nul
            sizes[0] = 0
    else:
        raise DomainError(None, c)


def step(c: str, f: SizedForest) -> SizedForest:
    trees = [t for t, _ in reversed(f.entries)]
    sizes = [n for _, n in reversed(f.entries)]
    _step_into(c, trees, sizes)
    return SizedForest(tuple(zip(reversed(trees), reversed(sizes))))


class SweepState:
    """Stack, running best and position of a right-to-left sweep.

    Chunks must be fed in right-to-left order: the last chunk of the input first.
    """

    def __init__(self, length: int):
        self.trees: List[Tree] = [Nul]
        self.sizes: List[int] = [0]
        self.pos = length
        self.best_start = length
        self.best_length = 0
        self.best_tree: Tree = Nul

    @property
    def stack(self) -> SizedForest:
        return SizedForest(tuple(zip(reversed(self.trees), reversed(self.sizes))))

    @property
    def top(self) -> SizedEntry:
        return self.trees[-1], self.sizes[-1]

    @property
    def best(self) -> Candidate:
        return Candidate(self.best_start, self.best_length, self.best_tree)

    def feed(self, chunk: str):
        try:
            validate(chunk)
        except DomainError as e:
            raise DomainError(self.pos - len(chunk) + e.position, e.char) from None

        trees, sizes = self.trees, self.sizes
        pos = self.pos
        best_start, best_length, best_tree = self.best_start, self.best_length, self.best_tree

        for c in reversed(chunk):
            pos -= 1
            if c == CLOSE:
                trees.append(Nul)
                sizes.append(0)
            elif len(trees) > 1:
                t = trees.pop()
                trees[-1] = Bin(t, trees[-1])
                m = sizes.pop()
                sizes[-1] += 2 + m
            else:
                trees[0] = Nul
                sizes[0] = 0

            # >= so that the leftmost of equally long segments wins
            if sizes[-1] >= best_length:
                best_start, best_length, best_tree = pos, sizes[-1], trees[-1]

        self.pos = pos
        self.best_start, self.best_length, self.best_tree = best_start, best_length, best_tree


def lbp_linear(s: str) -> SizedEntry:
    """Longest balanced prefix and its length, as the head of foldr step [(Nul, 0)]."""
    validate(s)
    trees, sizes = [Nul], [0]
    for c in reversed(s):
        _step_into(c, trees, sizes)
    return trees[-1], sizes[-1]


def lbs_linear(s: str) -> Candidate:
    validate(s)
    logger.debug("lbs_linear over %d characters", len(s))

    state = SweepState(len(s))
    state.feed(s)
    return state.best


def lbsl_linear(s: str) -> int:
    """Length-only sweep; the stack holds sizes and no tree is built."""
    validate(s)
    logger.debug("lbsl_linear over %d characters", len(s))

    sizes = [0]
    best = 0
    for c in reversed(s):
        if c == CLOSE:
            sizes.append(0)
        elif len(sizes) > 1:
            m = sizes.pop()
            sizes[-1] += 2 + m
        else:
            sizes[0] = 0
        if sizes[-1] > best:
            best = sizes[-1]
    return best


def scan_trace(s: str) -> List[int]:
    """Longest balanced prefix length of every suffix, longest suffix first."""
    validate(s)
    return [f.head[1] for f in scanr(step, SizedForest.seed(), s)]
