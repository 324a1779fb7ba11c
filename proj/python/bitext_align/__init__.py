"""English-Chinese sentence alignment."""

from ._core import (
    Alignment,
    Bead,
    CueLexicon,
    Document,
    Language,
    LengthModelParams,
    MatchProbability,
    Passage,
    PassageKind,
    align,
    align_anchored,
    align_bruteforce,
    delta,
    emit_markup,
    estimate_params,
    evaluate,
    generate,
    hybrid_length,
    match_cost,
    parse_markup,
    run_cli,
    segment,
)

__all__ = [
    "Alignment",
    "Bead",
    "CueLexicon",
    "Document",
    "Language",
    "LengthModelParams",
    "MatchProbability",
    "Passage",
    "PassageKind",
    "align",
    "align_anchored",
    "align_bruteforce",
    "delta",
    "emit_markup",
    "estimate_params",
    "evaluate",
    "generate",
    "hybrid_length",
    "match_cost",
    "parse_markup",
    "run_cli",
    "segment",
]
