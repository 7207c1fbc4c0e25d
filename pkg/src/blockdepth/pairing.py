"""Coefficient-extraction functionals attached to depth- and block-homogeneous combinations.

A depth-``r`` symbol ``I(0; 0^{k_0} 1 0^{k_1} ... 1 0^{k_r}; 1)`` pairs with a
depth-graded element through the coefficient of ``z_0^{k_0} ... z_r^{k_r}``.
A block-degree-``r`` symbol with block lengths ``(l_0, ..., l_r)`` pairs with a
reduced block element ``q`` through
``c[l_0-2, l_1-1, ..., l_r-1] - c[l_0-1, ..., l_{r-1}-1, l_r-2]``.
Extractors of patterns with a negative entry are identically zero and are
dropped.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .block import pi_even
from .components import component_polys
from .poly import Poly, Q, Rational, Scalar, ZERO
from .words import Symbol, Word, block_decompose, parse_symbol, to_word

Pattern = Tuple[int, ...]
Combination = Union[Mapping[Symbol, Scalar], Iterable[Tuple[Symbol, Scalar]]]


class HomogeneityError(ValueError):
    pass


class Functional:
    """Finite rational combination of monomial-coefficient extractors."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        self.arity = arity
        acc: Dict[Pattern, Rational] = {}
        for pat, c in (terms or {}).items():
            pat = tuple(int(x) for x in pat)
            if len(pat) != arity:
                raise ValueError(f"pattern {pat} does not have arity {arity}")
            if min(pat, default=0) < 0:
                continue
            v = acc.get(pat, ZERO) + Q(c)
            if v:
                acc[pat] = v
            else:
                acc.pop(pat, None)
        self.terms: Dict[Pattern, Rational] = acc

    @classmethod
    def extractor(cls, pattern: Sequence[int], c: Scalar = 1) -> "Functional":
        return cls(len(pattern), {tuple(pattern): c})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Functional) and (self.arity, self.terms) == (other.arity, other.terms)

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other: "Functional") -> "Functional":
        self._check(other)
        merged: Dict[Pattern, Rational] = dict(self.terms)
        for p, c in other.terms.items():
            merged[p] = merged.get(p, ZERO) + c
        return Functional(self.arity, merged)

    def __neg__(self) -> "Functional":
        return self.scale(-1)

    def __sub__(self, other: "Functional") -> "Functional":
        return self + (-other)

    def scale(self, c: Scalar) -> "Functional":
        c = Q(c)
        return Functional(self.arity, {p: c * v for p, v in self.terms.items()})

    def _check(self, other: "Functional") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, p: Poly) -> Rational:
        return evaluate(self, p)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{','.join(map(str, p))}]" for p, c in sorted(self.terms.items()))
        return f"Functional({self.arity}: {body or '0'})"

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [
                {"pattern": list(p), "num": str(c.numerator), "den": str(c.denominator)}
                for p, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Functional":
        return cls(
            int(data["arity"]),
            {tuple(t["pattern"]): Q(int(t["num"])) / int(t["den"]) for t in data["terms"]},
        )


def _items(R: Combination) -> List[Tuple[Symbol, Rational]]:
    pairs = R.items() if isinstance(R, Mapping) else R
    out = []
    for sym, c in pairs:
        if isinstance(sym, str):
            sym = parse_symbol(sym)
        out.append((sym, Q(c)))
    return out


def depth_pattern(w: Word) -> Pattern:
    """``(k_0, ..., k_r)`` for ``w = 0^{k_0} 1 0^{k_1} ... 1 0^{k_r}``."""
    pat = [0]
    for a in w.letters:
        if a:
            pat.append(0)
        else:
            pat[-1] += 1
    return tuple(pat)


def depth_functional(R: Combination) -> Functional:
    """``L^D_R`` for a depth-homogeneous combination ``R``."""
    acc: Dict[Pattern, Rational] = {}
    arity = None
    for sym, c in _items(R):
        w, sign = to_word(sym)
        pat = depth_pattern(w)
        if arity is None:
            arity = len(pat)
        elif len(pat) != arity:
            raise HomogeneityError(f"{sym} has depth {len(pat) - 1}, expected {arity - 1}")
        acc[pat] = acc.get(pat, ZERO) + sign * c
    return Functional(arity or 1, acc)


def block_patterns(lengths: Sequence[int]) -> Tuple[Pattern, Pattern]:
    ls = list(lengths)
    first = tuple([ls[0] - 2] + [x - 1 for x in ls[1:]])
    second = tuple([x - 1 for x in ls[:-1]] + [ls[-1] - 2])
    return first, second


def block_functional(R: Combination) -> Functional:
    """``L^B_R`` for a block-degree-homogeneous combination ``R``."""
    acc: Dict[Pattern, Rational] = {}
    arity = None
    for sym, c in _items(R):
        w, sign = to_word(sym)
        lengths = block_decompose(w).lengths
        if arity is None:
            arity = len(lengths)
        elif len(lengths) != arity:
            raise HomogeneityError(f"{sym} has block degree {len(lengths) - 1}, expected {arity - 1}")
        first, second = block_patterns(lengths)
        acc[first] = acc.get(first, ZERO) + sign * c
        acc[second] = acc.get(second, ZERO) - sign * c
    return Functional(arity or 1, acc)


def is_totally_even(L: Functional) -> bool:
    """Syntactic test: every retained pattern has only even entries."""
    return all(not any(k % 2 for k in p) for p in L.terms)


def evaluate(L: Functional, p: Poly) -> Rational:
    if p.nvars != L.arity:
        raise ValueError(f"functional of arity {L.arity} applied to a polynomial in {p.nvars} variables")
    terms = p.terms
    return sum((c * terms.get(pat, ZERO) for pat, c in L.terms.items()), ZERO)


def values_on_component(L: Functional, algebra: str, weight: int, degree: int, basis: str = "lyndon") -> List[Rational]:
    if L.arity != degree + 1:
        raise ValueError(f"functional of arity {L.arity} does not match Lie degree {degree}")
    return [evaluate(L, p) for _, p in component_polys(algebra, weight, degree, basis)]


def equal_on_component(
    L1: Functional, L2: Functional, algebra: str, weight: int, degree: int, basis: str = "lyndon"
) -> bool:
    """Whether the two functionals agree on every enumerated element of the component."""
    if L1 == L2:
        return True
    return all(v == 0 for v in values_on_component(L1 - L2, algebra, weight, degree, basis))


def is_totally_even_on(L: Functional, algebra: str, weight: int, degree: int, basis: str = "lyndon") -> bool:
    """Semantic test: ``L(x) == L(pi_even(x))`` for every ``x`` in the component."""
    if is_totally_even(L):
        return True
    return all(
        evaluate(L, p) == evaluate(L, pi_even(p)) for _, p in component_polys(algebra, weight, degree, basis)
    )
