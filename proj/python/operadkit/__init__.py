"""Exact truncated symmetric operads and graded Perm-type algebras."""

from ._core import (
    Algebra,
    Field,
    Operad,
    OperadkitError,
    ParseError,
    all_even_typing,
    all_odd_typing,
    build_com,
    build_ex63_algebra,
    build_ex64_algebra,
    build_ex64_operad,
    build_massey_algebra,
    build_massey_operad,
    build_ope,
    build_polynomial,
    diff,
    erase_typing,
    f_a_triv,
    forget_F,
    free_gperm,
    g_a_triv,
    g_sigma_sign,
    g_sigma_triv,
    gk_estimate,
    parse,
    rational_fit,
    roundtrip,
    series_to_string,
    verify_sign_lemma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
