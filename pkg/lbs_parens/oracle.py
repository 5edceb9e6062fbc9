"""
Reference answers computed the slow, obviously-correct way: enumerate every
segment (or prefix), parse each one, keep the largest tree.

The segment search is cubic, so everything here refuses inputs longer than
the configured ceiling.
"""
import itertools
import logging

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from .config import ORACLE
from .core import CLOSE, OPEN, Forest, Nul, ParenError, Tree, parse, parse_forest, size, step_m, validate

logger = logging.getLogger(__name__)

A = TypeVar("A")
B = TypeVar("B")


class OracleLimitError(ParenError):
    def __init__(self, length: int, limit: int):
        self.length = length
        self.limit = limit
        super().__init__(f"input of {length} characters is over the oracle ceiling of {limit}")


@dataclass(frozen=True)
class Candidate:
    """A balanced segment located in the input: s[start:start + length]."""
    start: int
    length: int
    tree: Optional[Tree] = None

    @property
    def end(self) -> int:
        return self.start + self.length

    def segment(self, s: str) -> str:
        return s[self.start:self.end]


@dataclass(frozen=True)
class TraceRow:
    prefix: str
    forest: Optional[Forest]


def check_ceiling(s: str, limit: Optional[int] = None) -> str:
    validate(s)
    ceiling = ORACLE.ceiling if limit is None else limit
    if len(s) > ceiling:
        raise OracleLimitError(len(s), ceiling)
    return s


def inits(xs: Sequence[A]) -> List[Sequence[A]]:
    return [xs[:i] for i in range(len(xs) + 1)]


def tails(xs: Sequence[A]) -> List[Sequence[A]]:
    return [xs[i:] for i in range(len(xs) + 1)]


def segments(xs: Sequence[A]) -> List[Sequence[A]]:
    """All inits of every tail: by start position, then by length."""
    return [seg for tail in tails(xs) for seg in inits(tail)]


def located_segments(xs: Sequence[A]) -> Iterator[Tuple[int, Sequence[A]]]:
    """segments(xs) in the same order, each paired with its start offset."""
    for start, tail in enumerate(tails(xs)):
        for seg in inits(tail):
            yield start, seg


def filt_just(xs: Iterable[Optional[A]]) -> List[A]:
    return [x for x in xs if x is not None]


def max_by(key: Callable[[A], B], xs: Iterable[A]) -> A:
    """The first element with the largest key."""
    best, best_key, seen = None, None, False
    for x in xs:
        k = key(x)
        if not seen or k > best_key:
            best, best_key, seen = x, k, True
    if not seen:
        raise ValueError("max_by of an empty sequence")
    return best


def foldr(op: Callable[[A, B], B], e: B, xs: Sequence[A]) -> B:
    acc = e
    for x in reversed(xs):
        acc = op(x, acc)
    return acc


def scanr(op: Callable[[A, B], B], e: B, xs: Sequence[A]) -> List[B]:
    """[foldr op e tail for tail in tails(xs)], computed in one pass."""
    acc = e
    out = [acc]
    for x in reversed(xs):
        acc = op(x, acc)
        out.append(acc)
    out.reverse()
    return out


def parse_forest_fold(s: str) -> Optional[Forest]:
    """parseF as a right fold of the monadic step over the seed [Nul]."""
    validate(s)

    def bind_step(c, forest):
        return None if forest is None else step_m(c, forest)

    return foldr(bind_step, Forest.of(Nul), s)


def lbs_spec(s: str, limit: Optional[int] = None) -> Candidate:
    check_ceiling(s, limit)
    logger.debug("lbs_spec over %d characters", len(s))

    parsed = ((start, parse(seg, checked=False)) for start, seg in located_segments(s))
    found = (Candidate(start, size(tree), tree) for start, tree in parsed if tree is not None)
    return max_by(lambda c: size(c.tree), found)


def lbp_spec(s: str, limit: Optional[int] = None) -> Tree:
    """Tree of the longest balanced prefix."""
    check_ceiling(s, limit)
    return max_by(size, filt_just(parse(p, checked=False) for p in inits(s)))


def lbsl_spec(s: str, limit: Optional[int] = None) -> int:
    return size(lbs_spec(s, limit).tree)


def lbsl_counter(s: str, limit: Optional[int] = None) -> int:
    """Longest balanced segment length from running sums, one scan per start."""
    check_ceiling(s, limit)

    n = len(s)
    best = 0
    for i in range(n):
        depth = 0
        for j in range(i, n):
            depth += 1 if s[j] == OPEN else -1
            if depth < 0:
                break
            if depth == 0 and j + 1 - i > best:
                best = j + 1 - i
    return best


def fig1_trace(s: str, limit: Optional[int] = None) -> List[Optional[Forest]]:
    """parseF of every prefix, shortest first."""
    check_ceiling(s, limit)
    return [parse_forest(p, checked=False) for p in inits(s)]


def forest_trace(s: str, limit: Optional[int] = None) -> List[TraceRow]:
    return [TraceRow(p, f) for p, f in zip(inits(s), fig1_trace(s, limit))]


def all_strings(max_len: int) -> Iterator[str]:
    """Every parenthesis string of length 0 to max_len, shorter first."""
    for n in range(max_len + 1):
        for chars in itertools.product(OPEN + CLOSE, repeat=n):
            yield "".join(chars)
