"""Exact jet-bundle computations over the projective line.

Thin wrapper over the C++ core. Rationals are returned as
``fractions.Fraction``; reports come back as parsed JSON.
"""

import json as _json

from ._jetline import (
    AtlasParseError,
    JetlineError,
    bol_pointwise,
    canonical_atlas,
    casimir_scalar,
    cmz_coefficient,
    emit_operator,
    eval_global,
    n_equivariant_dimension,
    n_equivariant_weighted_dimension,
    phi_apply,
    ratfunc_taylor,
    reconstruct,
    sl2_act_form,
    split,
    taylor_coeffs,
)
from ._jetline import describe_atlas as _describe_atlas
from ._jetline import verify as _verify


def verify(suite, n=None, k=None, seed=1, atlases=(), timestamp=False):
    """Run a verification suite; returns the report as a dict."""
    return _json.loads(_verify(suite, n, k, seed, list(atlases), timestamp))


def describe_atlas(path):
    """Census and validation of an atlas file, as a dict."""
    return _json.loads(_describe_atlas(str(path)))


__all__ = [
    "AtlasParseError",
    "JetlineError",
    "bol_pointwise",
    "canonical_atlas",
    "casimir_scalar",
    "cmz_coefficient",
    "describe_atlas",
    "emit_operator",
    "eval_global",
    "n_equivariant_dimension",
    "n_equivariant_weighted_dimension",
    "phi_apply",
    "ratfunc_taylor",
    "reconstruct",
    "sl2_act_form",
    "split",
    "taylor_coeffs",
    "verify",
]
