"""
Parse trees of the grammar S -> e | (S)S, forests of them, the printers and
their right-inverse parsers.

Every traversal here runs on an explicit work stack: inputs reach ten million
characters and a degenerate tree is as deep as half of that.
"""
import logging

import numpy as np
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Tuple, Union

logger = logging.getLogger(__name__)

OPEN = "("
CLOSE = ")"

_OPEN_BYTE = 0x28
_CLOSE_BYTE = 0x29


class ParenError(Exception):
    pass


class DomainError(ParenError, ValueError):
    """A character outside the parenthesis alphabet.

    position is None when the character was given on its own, as to step_m.
    """

    def __init__(self, position: Optional[int], char: str):
        self.position = position
        self.char = char
        where = "" if position is None else f" at position {position}"
        super().__init__(f"foreign character {char!r}{where}")


def first_foreign(codes: np.ndarray) -> int:
    """Offset of the first byte that is neither '(' nor ')', or -1."""
    bad = np.flatnonzero((codes != _OPEN_BYTE) & (codes != _CLOSE_BYTE))
    if bad.size:
        return int(bad[0])
    return -1


def foreign_error(s: str) -> DomainError:
    if not s.isascii():
        for i, c in enumerate(s):
            if c != OPEN and c != CLOSE:
                return DomainError(i, c)
    pos = first_foreign(np.frombuffer(s.encode("ascii"), dtype=np.uint8))
    return DomainError(pos, s[pos])


def validate(s: str) -> str:
    if s.count(OPEN) + s.count(CLOSE) != len(s):
        raise foreign_error(s)
    return s


def codes_of(s: str) -> np.ndarray:
    """s as a uint8 array of parenthesis bytes."""
    validate(s)
    return np.frombuffer(s.encode("ascii"), dtype=np.uint8)


class _Nul:
    __slots__ = ()

    def __repr__(self):
        return "Nul"

    def __reduce__(self):
        return "Nul"


Nul = _Nul()


class Bin(NamedTuple):
    left: "Tree"
    right: "Tree"

    # tuple's own comparison and hashing recurse in C and give out on deep trees
    def __eq__(self, other):
        if not isinstance(other, (Bin, _Nul)):
            return NotImplemented
        return tree_equal(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((Bin, pr(self)))

    def __repr__(self):
        return render(self)


Tree = Union[_Nul, Bin]


def tree_equal(a: Tree, b: Tree) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if x is Nul or y is Nul:
            return False
        stack.append((x[1], y[1]))
        stack.append((x[0], y[0]))
    return True


def pr(t: Tree) -> str:
    out = []
    stack = [t]
    while stack:
        x = stack.pop()
        if x is Nul:
            continue
        if x is CLOSE:
            out.append(CLOSE)
            continue
        out.append(OPEN)
        stack.append(x[1])
        stack.append(CLOSE)
        stack.append(x[0])
    return "".join(out)


def size(t: Tree) -> int:
    """Length of pr(t), counted without printing it."""
    bins = 0
    stack = [t]
    while stack:
        x = stack.pop()
        if x is Nul:
            continue
        bins += 1
        stack.append(x[0])
        stack.append(x[1])
    return 2 * bins


def render(t: Tree, abbreviated: bool = False) -> str:
    """Constructor notation, e.g. "Bin (Bin Nul Nul) Nul" or "B (B N N) N"."""
    nul, bin_ = ("N", "B") if abbreviated else ("Nul", "Bin")

    out = []
    stack = [(False, t)]
    while stack:
        item = stack.pop()
        if item.__class__ is str:
            out.append(item)
            continue

        wrapped, x = item
        if x is Nul:
            out.append(nul)
            continue

        if wrapped:
            out.append("(")
            stack.append(")")
        out.append(bin_ + " ")
        stack.append((True, x[1]))
        stack.append(" ")
        stack.append((True, x[0]))
    return "".join(out)


@dataclass(frozen=True)
class Forest:
    """Non-empty stack of trees; trees[0] is the top, i.e. the leftmost printed tree."""
    trees: Tuple[Tree, ...]

    def __post_init__(self):
        trees = tuple(self.trees)
        if not trees:
            raise ValueError("a forest holds at least one tree")
        object.__setattr__(self, "trees", trees)

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        return cls(trees)

    @property
    def head(self) -> Tree:
        return self.trees[0]

    def __len__(self):
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __repr__(self):
        return f"Forest({render_forest(self)})"


def render_forest(f: Forest, abbreviated: bool = True) -> str:
    return "[" + ", ".join(render(t, abbreviated) for t in f.trees) + "]"


def prf_concat(f: Forest) -> str:
    """Trees printed in order with one ')' between neighbours."""
    return CLOSE.join(pr(t) for t in f.trees)


def prf(f: Forest) -> str:
    """The inductive printer: [Nul] -> "", Nul:ts -> ')' : ts, Bin t u:ts -> '(' : t:u:ts."""
    stack = list(reversed(f.trees))
    out = []
    while True:
        top = stack.pop()
        if top is Nul:
            if not stack:
                break
            out.append(CLOSE)
        else:
            out.append(OPEN)
            stack.append(top[1])
            stack.append(top[0])
    return "".join(out)


def step_m(c: str, f: Forest) -> Optional[Forest]:
    """One right-to-left parser step; None when '(' meets a single tree."""
    if c == CLOSE:
        return Forest((Nul,) + f.trees)
    if c != OPEN:
        raise DomainError(None, c)
    if len(f.trees) < 2:
        return None
    t, u, *ts = f.trees
    return Forest((Bin(t, u), *ts))


def parse_forest(s: str, checked: bool = True) -> Optional[Forest]:
    """The unique forest printing to s, or None when s is not left-partially balanced.

    checked=False skips the alphabet check for callers that already did it.
    """
    if checked:
        validate(s)

    stack = [Nul]  # top at the end
    for c in reversed(s):
        if c == CLOSE:
            stack.append(Nul)
        elif len(stack) > 1:
            t = stack.pop()
            stack[-1] = Bin(t, stack[-1])
        else:
            return None

    stack.reverse()
    return Forest(stack)


def unwrap_m(f: Forest) -> Optional[Tree]:
    if len(f.trees) == 1:
        return f.trees[0]
    return None


def unwrap(f: Forest) -> Tree:
    tree = unwrap_m(f)
    return Nul if tree is None else tree


def parse(s: str, checked: bool = True) -> Optional[Tree]:
    f = parse_forest(s, checked)
    if f is None:
        return None
    return unwrap_m(f)


def is_balanced(s: str) -> bool:
    """Running sum check, independent of the parser."""
    codes = codes_of(s)
    if not codes.size:
        return True
    sums = np.cumsum(np.where(codes == _OPEN_BYTE, 1, -1), dtype=np.int64)
    return bool(sums.min() >= 0 and sums[-1] == 0)


if __name__ == "__main__":
    t1 = Bin(Nul, Nul)
    t2 = Bin(Nul, Bin(Nul, Nul))

    assert pr(t1) == "()"
    assert pr(t2) == "()()"
    assert pr(Bin(t2, t1)) == "(()())()"
    assert size(Bin(t2, t1)) == 8

    ts = Forest.of(Bin(Bin(Nul, Nul), Bin(Nul, Nul)), Nul, Bin(Nul, Nul))
    assert prf(ts) == prf_concat(ts) == "(())()))()"
    assert parse_forest(prf(ts)) == ts

    deep = "(" * 500_000 + ")" * 500_000
    assert pr(parse(deep)) == deep
    assert is_balanced(deep)
