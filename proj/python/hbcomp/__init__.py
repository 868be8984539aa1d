"""Composition operators on H(b) for rational b.

Problems are dicts in the same shape as the CLI's JSON input, e.g.
``{"b": [0.5, 0.5], "phi": [0.5, -0.5]}``. Results come back as dicts.
"""

import json

import numpy as np

from . import _core
from ._core import HbcompError

__version__ = _core.__version__

__all__ = ["HbcompError", "analyze", "error_code", "gallery", "hb_membership", "mate", "matrix", "scan", "u"]


def _text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def error_code(err):
    """The ErrorCode name carried by an HbcompError ("IsInner", "NotASelfMap", ...)."""
    return str(err).split(":", 1)[0]


def mate(problem, tol=None):
    return json.loads(_core.mate(_text(problem), tol or {}))


def hb_membership(problem, tol=None):
    return json.loads(_core.hb_membership(_text(problem), tol or {}))


def u(problem, tol=None):
    return json.loads(_core.u(_text(problem), tol or {}))


def analyze(problem, scan=False, tol=None):
    return json.loads(_core.analyze(_text(problem), scan, tol or {}))


def scan(problem, tol=None):
    """Carleson scan rows as an (n, 3) array: re_w, im_w, I_w."""
    text = _core.scan_csv(_text(problem), tol or {})
    rows = [list(map(float, line.split(","))) for line in text.splitlines()[1:]]
    return np.array(rows).reshape(-1, 3)


def matrix(problem, basis="hb", tol=None):
    """Report dict; ``matrix`` is replaced by a complex numpy array."""
    out = json.loads(_core.matrix(_text(problem), basis, tol or {}))
    m = np.array(out["matrix"], dtype=float)
    out["matrix"] = m[..., 0] + 1j * m[..., 1]
    return out


def gallery(filter="", tol=None):
    return _core.gallery(filter, tol or {})
