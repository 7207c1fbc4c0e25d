"""Evaluating bracket words in the three graded models and assembling components.

``algebra`` is one of ``"depth"`` (generators phi, Brown's bracket),
``"block"`` (generators p, block Ihara bracket) or ``"even"`` (generators e,
block Ihara bracket).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple, Union

from .block import bbracket, e_gen, p_gen
from .depth import dbracket, phi
from .lie import BracketWord, Seq, left_normed_words, lyndon_words, nested_expansion
from .poly import Exponent, Poly, Q, Rational, grlex_key

ALGEBRAS = ("depth", "block", "even")
BASES = ("lyndon", "left-normed")
ENUMERATION_VERSION = "nested-v1"

_GENERATORS = {"depth": phi, "block": p_gen, "even": e_gen}


class ResourceLimitError(RuntimeError):
    pass


def _check_algebra(algebra: str) -> None:
    if algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}; expected one of {ALGEBRAS}")


def generator(label: int, algebra: str) -> Poly:
    _check_algebra(algebra)
    if label < 3 or label % 2 == 0:
        raise ValueError(f"generator labels are odd and >= 3, got {label}")
    return _GENERATORS[algebra]((label - 1) // 2)


def bracket(algebra: str, x: Poly, y: Poly) -> Poly:
    """Bracket of a generator image ``x`` (bivariate) with ``y`` in the given model."""
    if algebra == "depth":
        return dbracket(x, y)
    return bbracket(x, y)


@lru_cache(maxsize=None)
def nested_value(seq: Seq, algebra: str) -> Poly:
    """Value of ``[a1,[a2,[...,ar]]]`` in ``algebra``."""
    _check_algebra(algebra)
    if len(seq) == 1:
        return generator(seq[0], algebra)
    return bracket(algebra, generator(seq[0], algebra), nested_value(seq[1:], algebra))


def evaluate(word: Union[BracketWord, str, Mapping], algebra: str) -> Poly:
    """Evaluate a bracket word, or a ``{word: coefficient}`` combination, in ``algebra``."""
    _check_algebra(algebra)
    if isinstance(word, str):
        word = BracketWord.parse(word)
    if isinstance(word, BracketWord):
        combo = {word: 1}
    else:
        combo = {BracketWord.parse(w) if isinstance(w, str) else w: c for w, c in word.items()}
    degrees = {w.degree for w in combo}
    if len(degrees) != 1:
        raise ValueError("a combination must be homogeneous in Lie degree")
    nvars = degrees.pop() + 1
    out = Poly.zero(nvars)
    for w, cw in combo.items():
        for seq, c in nested_expansion(w).items():
            out = out + nested_value(seq, algebra).scale(Q(cw) * c)
    return out


def spanning_words(weight: int, degree: int, basis: str = "lyndon") -> List[BracketWord]:
    if basis == "lyndon":
        return lyndon_words(weight, degree)
    if basis == "left-normed":
        return left_normed_words(weight, degree)
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


@dataclass
class Component:
    """Coefficient matrix of a graded component: one row per word, one column per monomial."""

    algebra: str
    weight: int
    degree: int
    basis: str
    words: List[BracketWord]
    monomials: List[Exponent]
    rows: List[Dict[int, Rational]] = field(repr=False)

    @property
    def nrows(self) -> int:
        return len(self.words)

    @property
    def ncols(self) -> int:
        return len(self.monomials)

    def matrix(self):
        from .linalg import QMatrix

        return QMatrix.from_rows(self.rows, self.ncols)

    def polys(self) -> List[Poly]:
        n = self.degree + 1
        return [Poly(n, {self.monomials[j]: c for j, c in row.items()}) for row in self.rows]


def graded_component(
    algebra: str,
    weight: int,
    degree: int,
    basis: str = "lyndon",
    max_rows: int | None = 5000,
) -> Component:
    """Rows = enumerated words, columns = monomials in the fixed grlex order."""
    _check_algebra(algebra)
    words = spanning_words(weight, degree, basis)
    if max_rows is not None and len(words) > max_rows:
        raise ResourceLimitError(
            f"component ({algebra}, {weight}, {degree}) has {len(words)} rows, limit is {max_rows}"
        )
    polys = [evaluate(w, algebra) for w in words]
    monos = sorted({e for p in polys for e in p.terms}, key=grlex_key)
    index = {e: j for j, e in enumerate(monos)}
    rows = [{index[e]: c for e, c in p.items()} for p in polys]
    return Component(algebra, weight, degree, basis, words, monos, rows)


def component_polys(algebra: str, weight: int, degree: int, basis: str = "lyndon") -> List[Tuple[BracketWord, Poly]]:
    return [(w, evaluate(w, algebra)) for w in spanning_words(weight, degree, basis)]


def clear_caches() -> None:
    nested_value.cache_clear()
