"""Exact decomposition of piecewise affine interval maps into invariant components."""

import json as _json

from ._pmdecomp import (
    Model,
    decompose_json,
    diamond,
    intersect,
    is_regular_open,
    meets,
    normalize,
    orbit_line,
    regular_difference,
    set_union,
)

__all__ = [
    "Model",
    "decompose",
    "decompose_json",
    "diamond",
    "intersect",
    "is_regular_open",
    "meets",
    "normalize",
    "orbit_line",
    "regular_difference",
    "set_union",
]


def decompose(model, **kwargs):
    """Run the full decomposition pipeline and return the report as a dict."""
    return _json.loads(decompose_json(model, **kwargs))
