"""Relations ``R_B = 2^r R_D`` modulo products and lower block degree.

A block-degree-``r`` combination ``R_B`` and a depth-``r`` combination
``R_D`` of the same weight are related when ``(R_B - 2^r R_D, xi) = 0`` for
every Lie-degree-``r`` element ``xi``.  Writing ``b(xi)``, ``d(xi)`` and
``e(xi)`` for the images of a bracket word in the block, depth and even
models, the pairing is ``L^B(b(xi)) - 2^r L^D(d(xi))``.  When ``L^B`` is
totally even on the block images and ``L^D`` is totally even on the depth
images, this equals ``L^B(e(xi)) - L^D(e(xi))``, which is what
:func:`verify_relation` checks; the direct pairing values are recorded too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .block import pi_even
from .components import component_polys, spanning_words
from .lie import BracketWord
from .linalg import QMatrix, solve
from .pairing import Functional, block_functional, depth_functional, evaluate
from .poly import ONE, ZERO, Q, Rational, Scalar, rational_str
from .words import (
    BlockTuple,
    Symbol,
    SymbolError,
    ZetaIndex,
    block_decompose,
    blocks_to_word,
    parse_symbol,
    to_word,
    word_to_zeta,
)

Term = Tuple[Symbol, Rational]
CombinationLike = Union[Mapping[Union[Symbol, str], Scalar], Iterable[Tuple[Union[Symbol, str], Scalar]]]

RELATION_SCHEMA_VERSION = 1


class RelationError(ValueError):
    """A precondition of a relation operation is violated."""


class SynthesisError(RuntimeError):
    """No depth side exists for the given block side at this component."""


def combination(R: CombinationLike) -> List[Term]:
    """Normalise to a list of ``(symbol, coefficient)``, merging repeats and dropping zeros."""
    pairs = R.items() if isinstance(R, Mapping) else R
    acc: Dict[Symbol, Rational] = {}
    order: List[Symbol] = []
    for sym, c in pairs:
        if isinstance(sym, str):
            sym = parse_symbol(sym)
        if sym not in acc:
            order.append(sym)
            acc[sym] = ZERO
        acc[sym] += Q(c)
    return [(s, acc[s]) for s in order if acc[s]]


def format_combination(R: Sequence[Term]) -> str:
    if not R:
        return "0"
    return " + ".join(f"{rational_str(c)} * {s}" for s, c in R)


def _check_terms(R: Sequence[Term], r: int, weight: int, side: str) -> None:
    for sym, _ in R:
        if sym.weight != weight:
            raise RelationError(f"{side} term {sym} has weight {sym.weight}, expected {weight}")
        w, _ = to_word(sym)
        deg = block_decompose(w).degree if side == "block" else w.depth
        if deg != r:
            kind = "block degree" if side == "block" else "depth"
            raise RelationError(f"{side} term {sym} has {kind} {deg}, expected {r}")


def _functional(build, R: Sequence[Term], r: int) -> Functional:
    L = build(R) if R else Functional(r + 1)
    if L.arity != r + 1:
        raise RelationError(f"functional has arity {L.arity}, expected {r + 1}")
    return L


def _terms_json(R: Sequence[Term]) -> List[dict]:
    return [{"symbol": str(s), "coeff": rational_str(c)} for s, c in R]


def _terms_from_json(items: Iterable[Mapping]) -> List[Term]:
    return combination([(t["symbol"], Q(str(t["coeff"]))) for t in items])


@dataclass
class RelationCertificate:
    block_side: List[Term]
    depth_side: List[Term]
    lie_degree: int
    weight: int
    basis: str
    verified_against: List[BracketWord]
    pairing_values: List[Rational]
    even_differences: List[Rational]
    block_even: bool
    depth_even: bool
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def scale(self) -> int:
        return 2 ** self.lie_degree

    @property
    def status(self) -> str:
        return "failed" if self.failures else "verified"

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "version": RELATION_SCHEMA_VERSION,
            "status": self.status,
            "weight": self.weight,
            "degree": self.lie_degree,
            "scale": self.scale,
            "basis": self.basis,
            "block_side": _terms_json(self.block_side),
            "depth_side": _terms_json(self.depth_side),
            "block_functional_even": self.block_even,
            "depth_functional_even": self.depth_even,
            "checks": [
                {"word": str(w), "pairing": rational_str(p), "even_difference": rational_str(e)}
                for w, p, e in zip(self.verified_against, self.pairing_values, self.even_differences)
            ],
            "failures": list(self.failures),
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def verify_relation(
    R_B: CombinationLike,
    R_D: CombinationLike,
    r: int,
    weight: int,
    basis: str = "lyndon",
) -> RelationCertificate:
    """Check ``R_B = 2^r R_D`` modulo products and terms of lower block degree."""
    if r < 1:
        raise RelationError(f"Lie degree must be at least 1, got {r}")
    RB, RD = combination(R_B), combination(R_D)
    _check_terms(RB, r, weight, "block")
    _check_terms(RD, r, weight, "depth")
    LB = _functional(block_functional, RB, r)
    LD = _functional(depth_functional, RD, r)

    words = spanning_words(weight, r, basis)
    blocks = [p for _, p in component_polys("block", weight, r, basis)]
    depths = [p for _, p in component_polys("depth", weight, r, basis)]
    evens = [p for _, p in component_polys("even", weight, r, basis)]
    scale = 2 ** r

    failures: List[str] = []
    block_even = depth_even = True
    pairing, diffs = [], []
    for w, b, d, e in zip(words, blocks, depths, evens):
        lb = evaluate(LB, b)
        if lb != evaluate(LB, pi_even(b)):
            block_even = False
            failures.append(f"block functional is not totally even on the block image of {w}")
        ld = evaluate(LD, d)
        if ld != evaluate(LD, pi_even(d)):
            depth_even = False
            failures.append(f"depth functional is not totally even on the depth image of {w}")
        diff = evaluate(LB, e) - evaluate(LD, e)
        if diff:
            failures.append(f"functionals differ by {rational_str(diff)} on the even image of {w}")
        pairing.append(lb - scale * ld)
        diffs.append(diff)

    notes = []
    if r >= 2:
        notes.append(f"block parity strengthens the correction to block degree {r - 2}")
    return RelationCertificate(
        RB, RD, r, weight, basis, words, pairing, diffs, block_even, depth_even, failures, notes
    )


# -- synthesis ---------------------------------------------------------------


def totally_odd_indices(weight: int, depth: int) -> List[ZetaIndex]:
    """All ``zeta(2k_1+1, ..., 2k_r+1)`` of the given weight, entries ``>= 1``, lexicographic."""

    def go(w: int, d: int):
        if d == 0:
            if w == 0:
                yield ()
            return
        for a in range(1, w - (d - 1) + 1, 2):
            for rest in go(w - a, d - 1):
                yield (a,) + rest

    return [ZetaIndex(e) for e in go(weight, depth)]


def synthesize_depth_side(
    R_B: CombinationLike, r: int, weight: int, basis: str = "lyndon"
) -> Tuple[List[Term], RelationCertificate]:
    """Find totally odd ``R_D`` with ``R_B = 2^r R_D``; free coefficients are set to zero."""
    RB = combination(R_B)
    _check_terms(RB, r, weight, "block")
    LB = _functional(block_functional, RB, r)
    for w, b in component_polys("block", weight, r, basis):
        if evaluate(LB, b) != evaluate(LB, pi_even(b)):
            raise RelationError(f"block functional is not totally even: it fails on the block image of {w}")

    evens = [p for _, p in component_polys("even", weight, r, basis)]
    candidates = totally_odd_indices(weight, r)
    rows = []
    for e in evens:
        row = {}
        for j, z in enumerate(candidates):
            v = evaluate(depth_functional([(z, 1)]), e)
            if v:
                row[j] = v
        rows.append(row)
    target = [evaluate(LB, e) for e in evens]
    sol = solve(QMatrix.from_rows(rows, len(candidates)), target)
    if not sol.consistent:
        raise SynthesisError(
            f"no totally odd depth side at weight {weight}, degree {r}: "
            f"equation {sol.witness_row} of the even component is inconsistent"
        )
    RD = [(z, c) for z, c in zip(candidates, sol.x) if c]
    return RD, verify_relation(RB, RD, r, weight, basis)


# -- dictionary --------------------------------------------------------------


@dataclass(frozen=True)
class HoffmanImage:
    """``zeta(odd) = scale * target`` modulo lower block degree; ``reduced`` is False if rules ran out."""

    source: ZetaIndex
    target: Optional[ZetaIndex]
    scale: Rational
    raw: Tuple[Union[str, int], ...]
    reduced: bool = True

    def __str__(self) -> str:
        body = str(self.target) if self.reduced else "z:{l=%d;%s}" % (self.raw[0], ",".join(map(str, self.raw[1:])))
        return f"{rational_str(self.scale)} * {body}"


def _dictionary_tokens(ks: Sequence[int]) -> List[Tuple[str, int]]:
    toks: List[Tuple[str, int]] = []
    for k in ks[:-1]:
        toks += [("G", k - 1), ("T", 3)]
    toks.append(("G", ks[-1]))
    return toks


def odd_to_hoffman(z: Union[ZetaIndex, str]) -> HoffmanImage:
    """Almost-Hoffman image of a totally odd zeta value.

    ``zeta(2k_1+1, ..., 2k_r+1) = (-1)^(k_1+...+k_r+r+1) / 2^r * zeta_1({2}^(k_1-1), 3, ..., 3, {2}^k_r)``,
    legalised by the rules ``zeta_m({2}^-1, 3, ...) -> zeta_(m+1)(...)`` and
    ``(3+a, {2}^-1, 3+b) -> 4+a+b``.
    """
    if isinstance(z, str):
        z = parse_symbol(z)
    if not isinstance(z, ZetaIndex) or not z.entries or not z.is_totally_odd():
        raise SymbolError(f"{z} is not a totally odd zeta index")
    ks = [(e - 1) // 2 for e in z.entries]
    r = len(ks)
    scale = Q((-1) ** (sum(ks) + r + 1), 2 ** r)

    m = 1
    toks = _dictionary_tokens(ks)
    changed = True
    while changed:
        changed = False
        if toks[0] == ("G", -1) and len(toks) > 1 and toks[1] == ("T", 3):
            toks = toks[2:]
            m += 1
            changed = True
            continue
        for i in range(1, len(toks) - 1):
            if toks[i] == ("G", -1) and toks[i - 1][0] == "T" and toks[i + 1][0] == "T":
                merged = ("T", toks[i - 1][1] + toks[i + 1][1] - 2)
                toks = toks[: i - 1] + [merged] + toks[i + 2 :]
                changed = True
                break

    if any(kind == "G" and n < 0 for kind, n in toks):
        raw = tuple(["{2}^%d" % n if kind == "G" else n for kind, n in toks])
        return HoffmanImage(z, None, scale, (m,) + raw, reduced=False)
    entries: List[int] = []
    for kind, n in toks:
        entries += [2] * n if kind == "G" else [n]
    target = ZetaIndex(tuple(entries), m)
    return HoffmanImage(z, target, scale, (m,) + tuple(entries))


def dictionary_block_tuple(z: ZetaIndex) -> BlockTuple:
    """Block lengths ``(1, 2k_1+1, ..., 2k_(r-1)+1, 2k_r+2)`` of the almost-Hoffman image."""
    ks = [(e - 1) // 2 for e in z.entries]
    return BlockTuple((1,) + tuple(2 * k + 1 for k in ks[:-1]) + (2 * ks[-1] + 2,))


def dictionary_cross_check(z: ZetaIndex) -> bool:
    """Whether the rule-based target agrees with the block-tuple construction."""
    img = odd_to_hoffman(z)
    if not img.reduced:
        return False
    expected, _ = word_to_zeta(blocks_to_word(dictionary_block_tuple(z)))
    return expected == img.target


def verify_dictionary(z: Union[ZetaIndex, str], basis: str = "lyndon") -> RelationCertificate:
    """Run ``sign * zeta_m(...) = 2^r zeta(odd)`` through :func:`verify_relation`."""
    img = odd_to_hoffman(z)
    if not img.reduced:
        raise RelationError(f"{img.source} has no reduced almost-Hoffman image")
    r = img.source.depth
    return verify_relation([(img.target, img.scale * 2 ** r)], [(img.source, ONE)], r, img.source.weight, basis)


# -- the (2,6,2) family -------------------------------------------------------


def corollary_262_sides(n: int, a: int) -> Tuple[List[Term], List[Term]]:
    if not (isinstance(n, int) and isinstance(a, int)) or a < 0 or 2 * a > n:
        raise RelationError(f"need 0 <= 2a <= n, got n={n}, a={a}")
    sign = (-1) ** (n + 1)
    RB = combination([(ZetaIndex((2,) * k + (6,) + (2,) * (n - k)), sign) for k in range(a, n - a + 1)])
    RD = [(ZetaIndex((1, 1, 2 * n - 2 * a + 3, 2 * a + 1)), Q(16))]
    return RB, RD


def corollary_262(n: int, a: int, basis: str = "lyndon") -> RelationCertificate:
    """``(-1)^(n+1) sum_{k=a}^{n-a} zeta({2}^k, 6, {2}^(n-k)) = 16 zeta(1, 1, 2n-2a+3, 2a+1)``, as a degree-4 relation."""
    RB, RD = corollary_262_sides(n, a)
    # 16 = 2^4, so R_D here is the zeta(1,1,...) term with coefficient 1
    return verify_relation(RB, [(z, c / 16) for z, c in RD], 4, 2 * n + 6, basis)


# -- regression ---------------------------------------------------------------


@dataclass
class RegressionResult:
    name: str
    passed: bool
    detail: str
    certificate: Optional[RelationCertificate] = None


EXAMPLE_RELATIONS = {
    "example-weight-11": (
        {"z:{2,2,5,2}": 1, "z:{2,5,2,2}": -1},
        {"z:{1,3,7}": 1, "z:{1,5,5}": -1},
        3,
        11,
    ),
    "example-weight-14": (
        {"z:{2,3,3,2,2,2}": 1, "z:{2,2,2,3,3,2}": -1},
        {"z:{6,8}": Q(35, 4), "z:{5,9}": Q(28, 4), "z:{7,7}": Q(15, 4)},
        2,
        14,
    ),
    "example-8z335": (
        {
            "z:{2,3,4,2}": 1,
            "z:{2,1,1,2,3,2}": -1,
            "z:{1,2,3,3,2}": -2,
            "z:{2,1,3,3,2}": -2,
            "z:{2,3,1,3,2}": -2,
            "z:{2,3,3,1,2}": -2,
        },
        {"z:{3,3,5}": 1},
        3,
        11,
    ),
}

CUSP_BLOCK_RELATION = {"z:{2,2,2,4,2}": 7, "z:{2,2,4,2,2}": Q(5, 2), "z:{2,4,2,2,2}": 7}
CUSP_DEPTH_RELATION = {"z:{3,9}": 28, "z:{5,7}": 150, "z:{7,5}": 168}


def _annihilates(L: Functional, algebra: str, weight: int, r: int, basis: str) -> List[str]:
    return [
        f"{w} -> {rational_str(evaluate(L, p))}"
        for w, p in component_polys(algebra, weight, r, basis)
        if evaluate(L, p)
    ]


def regression_suite(basis: str = "lyndon") -> List[RegressionResult]:
    out: List[RegressionResult] = []
    for name, (RB, RD, r, W) in EXAMPLE_RELATIONS.items():
        cert = verify_relation(RB, RD, r, W, basis)
        out.append(RegressionResult(name, cert.verified, "; ".join(cert.failures) or "verified", cert))

    LB = block_functional(combination(CUSP_BLOCK_RELATION))
    bad = _annihilates(LB, "even", 12, 2, basis)
    out.append(RegressionResult("cusp-block-weight-12", not bad, "; ".join(bad) or "annihilates eg(12,2)"))

    LD = depth_functional(combination(CUSP_DEPTH_RELATION))
    bad = _annihilates(LD, "depth", 12, 2, "left-normed")
    out.append(RegressionResult("cusp-depth-weight-12", not bad, "; ".join(bad) or "annihilates sdg(12,2)"))

    for n in range(5):
        for a in range(n // 2 + 1):
            cert = corollary_262(n, a, basis)
            out.append(
                RegressionResult(f"corollary-262-n{n}-a{a}", cert.verified, "; ".join(cert.failures) or "verified", cert)
            )
    return out


# -- relation files -------------------------------------------------------------


def load_relation(data: Union[str, Mapping]) -> Tuple[List[Term], List[Term], int, int]:
    """Parse a relation document (see the README for the schema)."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        version = int(data.get("version", RELATION_SCHEMA_VERSION))
        if version != RELATION_SCHEMA_VERSION:
            raise RelationError(f"unsupported relation schema version {version}")
        RB = _terms_from_json(data["block_side"])
        RD = _terms_from_json(data["depth_side"])
        return RB, RD, int(data["degree"]), int(data["weight"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, RelationError):
            raise
        raise RelationError(f"malformed relation document: {exc}") from exc


def relation_document(RB: CombinationLike, RD: CombinationLike, r: int, weight: int) -> dict:
    return {
        "version": RELATION_SCHEMA_VERSION,
        "weight": weight,
        "degree": r,
        "block_side": _terms_json(combination(RB)),
        "depth_side": _terms_json(combination(RD)),
    }
