"""Symbolic engine for non-symmetric dg-operads and bimodules."""

import json

from ._huainf import (
    InstanceError,
    basis,
    counit,
    delta,
    diff,
    homology,
    normalize,
    presentation_names,
)
from . import _huainf

__all__ = [
    "InstanceError",
    "basis",
    "check_instance",
    "compose_instances",
    "counit",
    "delta",
    "diff",
    "homology",
    "normalize",
    "presentation_names",
    "verify",
]


def verify(suite="all", arity_max=None, degree_min=-2, jobs=1, timing=False):
    """Run a verification suite and return the report as a dict."""
    return json.loads(_huainf.verify(suite, arity_max, degree_min, jobs, timing))


def check_instance(doc, mode="", arity_max=None):
    """Check an instance document (dict or JSON text); returns the report as a dict."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_huainf.check_instance(text, mode, arity_max))


def compose_instances(g, h, arity_max=5):
    """Composite g.h of two morphism documents (dicts or JSON text), as a dict."""
    g = g if isinstance(g, str) else json.dumps(g)
    h = h if isinstance(h, str) else json.dumps(h)
    return json.loads(_huainf.compose_instances(g, h, arity_max))
