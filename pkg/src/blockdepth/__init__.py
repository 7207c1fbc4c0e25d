"""Exact computations relating the block graded and depth graded motivic Lie algebras."""

from .block import bbracket, e_gen, p_gen, pi_even, s_gen
from .components import evaluate, graded_component
from .depth import dbracket, phi
from .lie import BracketWord, lyndon_words, witt_count
from .linalg import QMatrix, nullspace, rank, solve
from .pairing import Functional, block_functional, depth_functional
from .poly import Poly, Q
from .relations import (
    RelationCertificate,
    corollary_262,
    odd_to_hoffman,
    regression_suite,
    synthesize_depth_side,
    verify_relation,
)
from .series import Series2, general_bk_table, lie_dimensions, uneven_bk_table
from .words import BlockTuple, Word, ZetaIndex, parse_symbol

__all__ = [
    "BlockTuple", "BracketWord", "Functional", "Poly", "Q", "QMatrix", "RelationCertificate",
    "Series2", "Word", "ZetaIndex", "bbracket", "block_functional", "corollary_262", "dbracket",
    "depth_functional", "e_gen", "evaluate", "general_bk_table", "graded_component",
    "lie_dimensions", "lyndon_words", "nullspace", "odd_to_hoffman", "p_gen", "parse_symbol",
    "phi", "pi_even", "rank", "regression_suite", "s_gen", "solve", "synthesize_depth_side",
    "uneven_bk_table", "verify_relation", "witt_count",
]
