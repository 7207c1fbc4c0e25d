"""Formal Lie monomials over the odd generators sigma_3, sigma_5, ...

A :class:`BracketWord` is a binary tree whose leaves are odd labels ``2k+1 >= 3``.
Every graded model here only knows how to bracket a generator with an
arbitrary element, so evaluation goes through :func:`nested_expansion`, which
rewrites any tree (via Jacobi and antisymmetry) as a combination of nested
words ``[a1,[a2,[...,ar]]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Tuple, Union

Tree = Union[int, Tuple["Tree", "Tree"]]
Seq = Tuple[int, ...]


class BracketSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _check_tree(t: Tree) -> None:
    if isinstance(t, int):
        if t < 3 or t % 2 == 0:
            raise ValueError(f"generator labels are odd integers >= 3, got {t}")
        return
    if not (isinstance(t, tuple) and len(t) == 2):
        raise ValueError(f"malformed bracket tree {t!r}")
    _check_tree(t[0])
    _check_tree(t[1])


@dataclass(frozen=True)
class BracketWord:
    tree: Tree

    def __post_init__(self):
        _check_tree(self.tree)

    @classmethod
    def nested(cls, labels: Seq) -> "BracketWord":
        """``[a1,[a2,[...,ar]]]``."""
        if not labels:
            raise ValueError("a bracket word needs at least one generator")
        t: Tree = labels[-1]
        for a in reversed(labels[:-1]):
            t = (a, t)
        return cls(t)

    @classmethod
    def parse(cls, text: str) -> "BracketWord":
        return cls(_Parser(text).parse())

    def leaves(self) -> Seq:
        out: List[int] = []

        def walk(t: Tree) -> None:
            if isinstance(t, int):
                out.append(t)
            else:
                walk(t[0])
                walk(t[1])

        walk(self.tree)
        return tuple(out)

    @property
    def degree(self) -> int:
        return len(self.leaves())

    @property
    def weight(self) -> int:
        return sum(self.leaves())

    def __str__(self) -> str:
        def fmt(t: Tree) -> str:
            if isinstance(t, int):
                return str(t)
            return f"[{fmt(t[0])},{fmt(t[1])}]"

        return fmt(self.tree)


class _Parser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def _skip(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def parse(self) -> Tree:
        t = self._node()
        self._skip()
        if self.i != len(self.s):
            raise BracketSyntaxError(f"unexpected trailing input {self.s[self.i:]!r}", self.i)
        return t

    def _node(self) -> Tree:
        self._skip()
        if self.i >= len(self.s):
            raise BracketSyntaxError("unexpected end of input", self.i)
        ch = self.s[self.i]
        if ch == "[":
            self.i += 1
            left = self._node()
            self._expect(",")
            right = self._node()
            self._expect("]")
            return (left, right)
        if ch.isdigit():
            j = self.i
            while self.i < len(self.s) and self.s[self.i].isdigit():
                self.i += 1
            label = int(self.s[j:self.i])
            if label < 3 or label % 2 == 0:
                raise BracketSyntaxError(f"generator label must be odd and >= 3, got {label}", j)
            return label
        raise BracketSyntaxError(f"unexpected character {ch!r}", self.i)

    def _expect(self, ch: str) -> None:
        self._skip()
        if self.i >= len(self.s) or self.s[self.i] != ch:
            raise BracketSyntaxError(f"expected {ch!r}", self.i)
        self.i += 1


# -- nested expansion --------------------------------------------------------

def _add(acc: Dict[Seq, int], seq: Seq, c: int) -> None:
    if len(seq) >= 2 and seq[-1] == seq[-2]:
        return  # [a,a] = 0 at the core
    v = acc.get(seq, 0) + c
    if v:
        acc[seq] = v
    else:
        acc.pop(seq, None)


@lru_cache(maxsize=None)
def _bracket_nested(s: Seq, t: Seq) -> Tuple[Tuple[Seq, int], ...]:
    """``[nest(s), nest(t)]`` as a combination of nested words."""
    acc: Dict[Seq, int] = {}
    if len(s) == 1:
        _add(acc, s + t, 1)
    else:
        x, rest = s[:1], s[1:]
        # [[x, R], Y] = [x, [R, Y]] - [R, [x, Y]]
        for seq, c in _bracket_nested(rest, t):
            _add(acc, x + seq, c)
        if not (len(t) == 1 and t == x):
            for seq, c in _bracket_nested(rest, x + t):
                _add(acc, seq, -c)
    return tuple(sorted(acc.items()))


def nested_expansion(word: Union[BracketWord, Tree]) -> Dict[Seq, int]:
    """Integer combination of nested words equal to ``word`` in any Lie algebra."""
    tree = word.tree if isinstance(word, BracketWord) else word

    def go(t: Tree) -> Dict[Seq, int]:
        if isinstance(t, int):
            return {(t,): 1}
        left, right = go(t[0]), go(t[1])
        acc: Dict[Seq, int] = {}
        for s, cs in left.items():
            for u, cu in right.items():
                for seq, c in _bracket_nested(s, u):
                    _add(acc, seq, cs * cu * c)
        return acc

    return go(tree)


# -- enumeration -------------------------------------------------------------

def odd_compositions(weight: int, degree: int) -> Iterator[Seq]:
    """Tuples of ``degree`` odd parts ``>= 3`` summing to ``weight``, in lexicographic order."""
    if degree == 0:
        if weight == 0:
            yield ()
        return
    for a in range(3, weight - 3 * (degree - 1) + 1, 2):
        for rest in odd_compositions(weight - a, degree - 1):
            yield (a,) + rest


def left_normed_words(weight: int, degree: int) -> List[BracketWord]:
    """One word ``[a1,[a2,[...,ar]]]`` per odd composition of ``weight``.

    These span the (weight, degree) component of the free Lie algebra but are
    not independent (for degree 2 they contain both ``[a,b]`` and ``[b,a]``).
    """
    return [BracketWord.nested(c) for c in odd_compositions(weight, degree)]


def is_lyndon(w: Seq) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


def standard_bracketing(w: Seq) -> Tree:
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))
    raise AssertionError("a Lyndon word always has a Lyndon proper suffix")


def lyndon_words(weight: int, degree: int) -> List[BracketWord]:
    """Standard-bracketed Lyndon words: a basis of the free Lie algebra component."""
    return [
        BracketWord(standard_bracketing(c))
        for c in odd_compositions(weight, degree)
        if is_lyndon(c)
    ]


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def count_compositions(weight: int, degree: int) -> int:
    """Number of odd compositions (parts >= 3), by dynamic programming."""
    if weight < 0:
        return 0
    table = [[0] * (weight + 1) for _ in range(degree + 1)]
    table[0][0] = 1
    for r in range(1, degree + 1):
        for w in range(weight + 1):
            table[r][w] = sum(table[r - 1][w - a] for a in range(3, w + 1, 2))
    return table[degree][weight]


def witt_count(weight: int, degree: int) -> int:
    """Dimension of the (weight, degree) part of the free Lie algebra on sigma_3, sigma_5, ...

    Necklace formula: ``(1/r) sum_{d | gcd} mu(d) C(W/d, r/d)``.
    """
    if degree < 1:
        return 0
    total = 0
    for d in range(1, degree + 1):
        if degree % d == 0 and weight % d == 0:
            total += mobius(d) * count_compositions(weight // d, degree // d)
    assert total % degree == 0
    return total // degree


LieCombination = Mapping[BracketWord, object]
