"""Exact computation in Thompson's group F: normal forms, the PL model,
word norms and the F x Z^n embeddings."""

from ._thompson import (
    CayleyBall,
    NormalForm,
    NormBounds,
    PLMap,
    ParseError,
    ResourceLimitError,
    ball_sizes,
    check_presentation,
    closed_form_embed,
    d_statistic,
    embed,
    embed_n,
    exact_norm,
    from_word,
    h_distortion,
    lemma1_lower_bound,
    multiply,
    norm_bounds,
    normalize,
    qi_check,
    rewrite_to_finite_gens,
    shift,
    verify_subgroup_relations,
)

__all__ = [
    "CayleyBall",
    "NormalForm",
    "NormBounds",
    "PLMap",
    "ParseError",
    "ResourceLimitError",
    "ball_sizes",
    "check_presentation",
    "closed_form_embed",
    "d_statistic",
    "embed",
    "embed_n",
    "exact_norm",
    "from_word",
    "h_distortion",
    "lemma1_lower_bound",
    "multiply",
    "norm_bounds",
    "normalize",
    "qi_check",
    "rewrite_to_finite_gens",
    "shift",
    "verify_subgroup_relations",
]
