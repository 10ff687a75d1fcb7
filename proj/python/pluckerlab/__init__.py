"""Exact oscillating Plucker-type inequalities over the TNN Grassmannian.

Thin convenience layer over the native module: structured values cross the
boundary as JSON in the same schema the command-line tool uses, and exact
rationals travel as "p/q" strings (parse them with fractions.Fraction).
"""

import json as _json
from fractions import Fraction as _Fraction

from . import _pluckerlab as _native

__all__ = [
    "ws_layout",
    "system",
    "evaluate",
    "certify",
    "prematch",
    "compatible_set",
    "decompose",
    "verify",
    "search",
    "laplace",
    "random_tnn",
    "immanant",
    "plucker",
    "render_svg",
]


def _matrix(matrix):
    """Accept either the native {"rows","cols","entries"} form or a plain
    list of rows with entries given as rational strings or ints.  The native
    entries are a flat row-major list of [numerator, denominator] pairs."""
    if isinstance(matrix, dict):
        return _json.dumps(matrix)
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    entries = []
    for row in matrix:
        for v in row:
            f = _Fraction(v)
            entries.append([str(f.numerator), str(f.denominator)])
    return _json.dumps({"rows": rows, "cols": cols, "entries": entries})


def _diagram(diagram):
    """Accept either the native {"s","edges"} form or a plain edge list."""
    if isinstance(diagram, dict):
        return _json.dumps(diagram)
    edges = [list(e) for e in diagram]
    return _json.dumps({"s": len(edges), "edges": edges})


def _pair(m, n, I, J):
    return _json.dumps(
        {
            "I": {"m": m, "n": n, "entries": list(I)},
            "J": {"m": m, "n": n, "entries": list(J)},
        }
    )


def ws_layout(m, n, I, J):
    return _json.loads(_native.ws_layout(_pair(m, n, I, J)))


def system(m, n, I, J, r):
    return _json.loads(_native.system(_pair(m, n, I, J), r))


def evaluate(m, n, I, J, r, matrix):
    return _json.loads(_native.evaluate(_pair(m, n, I, J), r, _matrix(matrix)))


def certify(m, n, I, J, r):
    return _json.loads(_native.certify(_pair(m, n, I, J), r))


def prematch(m, n, I, J):
    return _json.loads(_native.prematch(_pair(m, n, I, J)))


def compatible_set(m, n, I, J):
    return _json.loads(_native.compatible_set(_pair(m, n, I, J)))


def decompose(m, n, I, J, matrix):
    return _json.loads(_native.decompose(_pair(m, n, I, J), _matrix(matrix)))


def verify(m, n, I, J, samples=3, seed=1):
    config = {"seed": seed, "n": n, "m": m, "bound": "3", "density": "1/2"}
    report = _json.loads(
        _native.verify(_pair(m, n, I, J), samples, _json.dumps(config))
    )
    report["holds"] = all(res["witness"] is None for res in report["results"])
    return report


def search(m, n, I, J, budget=100, seed=1):
    config = {"seed": seed, "n": n, "m": m, "bound": "3", "density": "1/2"}
    return _json.loads(_native.search(_pair(m, n, I, J), budget, _json.dumps(config)))


def laplace(n, d, matrix=None):
    return _json.loads(
        _native.laplace(n, d, _matrix(matrix) if matrix is not None else "")
    )


def random_tnn(n, m, seed=0, bound="3", density="1/2"):
    config = {"seed": seed, "n": n, "m": m, "bound": bound, "density": density}
    return _json.loads(_native.random_tnn(_json.dumps(config)))


def immanant(diagram, matrix):
    return _native.immanant(_diagram(diagram), _matrix(matrix))


def plucker(m, n, entries, matrix):
    tup = {"m": m, "n": n, "entries": list(entries)}
    return _native.plucker(_json.dumps(tup), _matrix(matrix))


def render_svg(m, n, I, J, diagram):
    return _native.render_svg(_pair(m, n, I, J), _diagram(diagram))
