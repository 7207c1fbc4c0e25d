"""Exact rational scalars and sparse multivariate polynomials.

A :class:`Poly` in ``nvars`` variables ``z_0 .. z_{nvars-1}`` is a map from
dense exponent tuples to nonzero rationals.  The zero polynomial has an empty
term map.  Instances are immutable and always canonical, so ``==`` and
``hash`` are structural.

Coefficients are ``gmpy2.mpq`` (arbitrary precision, always in lowest terms
with positive denominator).  They compare and hash equal to the corresponding
``fractions.Fraction`` and ``int`` values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from gmpy2 import mpq

Rational = type(mpq(0))
Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction, "Rational", str]

ZERO = mpq(0)
ONE = mpq(1)


def Q(x: Scalar, den: Scalar = 1) -> Rational:
    """Coerce ``x`` (int, Fraction, mpq or a "p/q" string) to an exact rational."""
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        x = mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    if den != 1:
        return mpq(x) / Q(den)
    return mpq(x)


def rational_str(c: Rational) -> str:
    """Exact decimal "num/den" form, or just "num" for integers."""
    c = mpq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    """Sort key for the fixed monomial order: total degree, then lexicographic."""
    return (sum(e), e)


class Poly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None, *, _trusted: bool = False):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        if _trusted:
            self._terms: Dict[Exponent, Rational] = terms  # type: ignore[assignment]
        else:
            clean: Dict[Exponent, Rational] = {}
            for e, c in (terms or {}).items():
                e = tuple(int(x) for x in e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent in {e}")
                c = Q(c)
                if c:
                    acc = clean.get(e, ZERO) + c
                    if acc:
                        clean[e] = acc
                    else:
                        clean.pop(e, None)
            self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        c = Q(c)
        return cls(nvars, {(0,) * nvars: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): ONE}, _trusted=True)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Scalar = 1) -> "Poly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def _from_dict(cls, nvars: int, d: Dict[Exponent, Rational]) -> "Poly":
        return cls(nvars, {e: c for e, c in d.items() if c}, _trusted=True)

    # -- basic protocol -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Rational]:
        return self._terms

    def items(self) -> Iterator[Tuple[Exponent, Rational]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction, Rational)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
            mono = "*".join(
                f"z{i}" if k == 1 else f"z{i}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(rational_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rational_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.nvars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "Poly":
        c = Q(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {e: c * v for e, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Rational] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, ZERO) + ca * cb
        return Poly._from_dict(self.nvars, out)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(ONE / Q(c))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries ------------------------------------------------------------

    def coeff(self, exp: Sequence[int]) -> Rational:
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError(f"exponent length {len(exp)} does not match {self.nvars} variables")
        return self._terms.get(exp, ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- substitution -------------------------------------------------------

    def rename(self, targets: Sequence[int], nvars: int) -> "Poly":
        """Send ``z_i`` to ``z_{targets[i]}`` inside a ring of ``nvars`` variables.

        Several sources may share a target (their exponents add).  This is the
        fast path for every variable insertion, omission and reversal used by
        the bracket formulas.
        """
        if len(targets) != self.nvars:
            raise ValueError("targets must have one entry per variable")
        out: Dict[Exponent, Rational] = {}
        injective = len(set(targets)) == len(targets)
        for e, c in self._terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    ne[targets[i]] += k
            ne = tuple(ne)
            if injective:
                out[ne] = c
            else:
                out[ne] = out.get(ne, ZERO) + c
        if injective:
            return Poly(nvars, out, _trusted=True)
        return Poly._from_dict(nvars, out)

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Exact composition ``p(images[0], ..., images[n-1])``."""
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        if not images:
            return self
        m = images[0].nvars
        if any(img.nvars != m for img in images):
            raise ValueError("all images must live in the same ring")
        powers = [[Poly.const(m, 1)] for _ in images]

        def power(i: int, k: int) -> Poly:
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        out = Poly.zero(m)
        for e, c in self._terms.items():
            term = Poly.const(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    # -- projections --------------------------------------------------------

    def even_part(self) -> "Poly":
        """Keep the monomials whose exponents are all even."""
        return Poly(
            self.nvars,
            {e: c for e, c in self._terms.items() if not any(k & 1 for k in e)},
            _trusted=True,
        )

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        n = int(data["nvars"])
        terms: Dict[Exponent, Rational] = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exp"])
            c = mpq(int(t["num"]), int(t["den"]))
            if e in terms:
                raise ValueError(f"duplicate exponent {e} in serialized polynomial")
            terms[e] = c
        return cls(n, terms)


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def substitute(p: Poly, images: Sequence[Poly]) -> Poly:
    return p.substitute(images)


def coeff(p: Poly, exp: Sequence[int]) -> Rational:
    return p.coeff(exp)


def linear_form(nvars: int, coeffs: Iterable[Scalar]) -> Poly:
    """``sum c_i z_i`` as a polynomial."""
    return Poly(nvars, {tuple(int(j == i) for j in range(nvars)): c for i, c in enumerate(coeffs)})
