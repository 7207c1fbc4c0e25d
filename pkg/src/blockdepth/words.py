"""Binary words, alternating block tuples and zeta indices.

All three encode an iterated-integral symbol ``I(0; w; 1)``:

* ``Word``       the interior word ``w`` over ``{0, 1}``;
* ``BlockTuple`` the block lengths of the alternating block decomposition of ``0 w 1``;
* ``ZetaIndex``  ``zeta_l(k_1, ..., k_d) = (-1)^d I(0; 0^l, 1, 0^(k_1 - 1), ..., 1, 0^(k_d - 1); 1)``.

Conversions that change the symbol's sign return it explicitly instead of
folding it into coefficients.  Divergent indices (entries equal to 1, or a
nonzero subscript) are legal formal symbols; nothing is ever evaluated.

Text forms: ``w:10010``, ``b:{1,3,8}``, ``z:{3,5}``, ``z:{l=1;2,2}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple, Union


class SymbolError(ValueError):
    """Malformed or unrepresentable symbol; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message if pos is None else f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if any(a not in (0, 1) for a in letters):
            raise SymbolError(f"word letters must be 0 or 1, got {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, s: str) -> "Word":
        return cls(tuple(int(ch) for ch in s.replace(" ", "")))

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def depth(self) -> int:
        return sum(self.letters)

    def extended(self) -> Tuple[int, ...]:
        return (0,) + self.letters + (1,)

    def __str__(self) -> str:
        return "w:" + "".join(map(str, self.letters))


@dataclass(frozen=True)
class BlockTuple:
    lengths: Tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        if not lengths or any(x < 1 for x in lengths):
            raise SymbolError(f"block lengths must be positive and nonempty, got {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def weight(self) -> int:
        return sum(self.lengths) - 2

    @property
    def degree(self) -> int:
        return len(self.lengths) - 1

    def __str__(self) -> str:
        return "b:{" + ",".join(map(str, self.lengths)) + "}"


@dataclass(frozen=True)
class ZetaIndex:
    entries: Tuple[int, ...]
    leading: int = 0

    def __post_init__(self):
        entries = tuple(int(k) for k in self.entries)
        if any(k < 1 for k in entries):
            raise SymbolError(f"zeta entries must be positive, got {entries}")
        if self.leading < 0:
            raise SymbolError("zeta subscript must be nonnegative")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "leading", int(self.leading))

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return self.leading + sum(self.entries)

    def is_totally_odd(self) -> bool:
        return self.leading == 0 and all(k % 2 for k in self.entries)

    def __str__(self) -> str:
        body = ",".join(map(str, self.entries))
        if self.leading:
            return f"z:{{l={self.leading};{body}}}"
        return f"z:{{{body}}}"


Symbol = Union[Word, BlockTuple, ZetaIndex]


def block_decompose(w: Word) -> BlockTuple:
    """Greedy maximal alternating runs of ``0 w 1``."""
    ext = w.extended()
    lengths = []
    run = 1
    for a, b in zip(ext, ext[1:]):
        if a == b:
            lengths.append(run)
            run = 1
        else:
            run += 1
    lengths.append(run)
    return BlockTuple(tuple(lengths))


def block_degree(w: Word) -> int:
    ext = w.extended()
    return sum(1 for a, b in zip(ext, ext[1:]) if a == b)


def blocks_to_word(b: BlockTuple) -> Word:
    if sum(b.lengths) < 2:
        raise SymbolError(f"{b} is too short to encode I(0; w; 1)")
    letters = []
    start = 0
    for ell in b.lengths:
        letters.extend((start + j) % 2 for j in range(ell))
        start = letters[-1]
    if letters[-1] != 1:
        raise SymbolError(f"{b} reconstructs a word ending in 0, not an I(0; w; 1) symbol")
    return Word(tuple(letters[1:-1]))


def zeta_to_word(z: ZetaIndex) -> Tuple[Word, int]:
    letters = [0] * z.leading
    for k in z.entries:
        letters.append(1)
        letters.extend([0] * (k - 1))
    return Word(tuple(letters)), (-1) ** z.depth


def word_to_zeta(w: Word) -> Tuple[ZetaIndex, int]:
    if not w.letters:
        raise SymbolError("the empty word has no zeta index")
    letters = w.letters
    lead = 0
    while lead < len(letters) and letters[lead] == 0:
        lead += 1
    entries = []
    for a in letters[lead:]:
        if a == 1:
            entries.append(1)
        else:
            entries[-1] += 1
    z = ZetaIndex(tuple(entries), lead)
    return z, (-1) ** z.depth


def to_word(sym: Symbol) -> Tuple[Word, int]:
    """Interior word of any symbol together with the sign ``sym = sign * I(0; w; 1)``."""
    if isinstance(sym, Word):
        return sym, 1
    if isinstance(sym, BlockTuple):
        return blocks_to_word(sym), 1
    if isinstance(sym, ZetaIndex):
        return zeta_to_word(sym)
    raise TypeError(f"not a symbol: {sym!r}")


def weight_of(sym: Symbol) -> int:
    return sym.weight


_INT_LIST = re.compile(r"\s*(\d+)\s*")


def _parse_ints(body: str, offset: int) -> Tuple[int, ...]:
    if not body.strip():
        return ()
    out = []
    pos = offset
    for part in body.split(","):
        m = _INT_LIST.fullmatch(part)
        if not m:
            raise SymbolError(f"expected a positive integer, got {part!r}", pos)
        out.append(int(m.group(1)))
        pos += len(part) + 1
    return tuple(out)


def parse_symbol(text: str) -> Symbol:
    """Parse ``w:...``, ``b:{...}`` or ``z:{...}``; bare ``{...}`` is read as a zeta index."""
    s = text.strip()
    if s.startswith("{"):
        s = "z:" + s
    if len(s) < 2 or s[1] != ":" or s[0] not in "wbz":
        raise SymbolError(f"unknown symbol syntax {text!r}; expected w:, b: or z:", 0)
    kind, rest = s[0], s[2:]
    if kind == "w":
        bad = next((i for i, ch in enumerate(rest) if ch not in "01"), None)
        if bad is not None:
            raise SymbolError(f"word letters must be 0 or 1 in {text!r}", bad + 2)
        return Word(tuple(int(ch) for ch in rest))
    if not (rest.startswith("{") and rest.endswith("}")):
        raise SymbolError(f"expected braces in {text!r}", 2)
    body = rest[1:-1]
    if kind == "b":
        return BlockTuple(_parse_ints(body, 3))
    leading = 0
    off = 3
    if body.lstrip().startswith("l="):
        head, sep, tail = body.partition(";")
        if not sep:
            raise SymbolError(f"missing ';' after subscript in {text!r}", 3 + len(head))
        try:
            leading = int(head.strip()[2:])
        except ValueError:
            raise SymbolError(f"bad subscript in {text!r}", 5) from None
        off += len(head) + 1
        body = tail
    return ZetaIndex(_parse_ints(body, off), leading)
