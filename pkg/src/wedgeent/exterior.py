"""Squared norms of wedge products of complex vectors.

Only squared norms are ever needed, so a wedge ``v_1 ^ ... ^ v_k`` is never
built as an antisymmetric tensor. Its squared norm is the determinant of the
Gram matrix of the family, which is what this module computes.

Inner products are conjugate-linear in the first argument.
"""

from itertools import combinations

import numpy as np

__all__ = [
    "WedgeError",
    "as_family",
    "gram_matrix",
    "wedge_norm_sq",
    "pairwise_wedge_sum",
    "order_sum",
]

CLAMP_TOL = 1e-10


class WedgeError(ValueError):
    """Raised for malformed vector families."""


class ConsistencyError(ArithmeticError):
    """A quantity that must be nonnegative came out clearly negative."""


def as_family(vectors):
    """Stack ``vectors`` into a ``(k, d)`` complex array.

    Accepts a sequence of 1-d array-likes or an existing 2-d array whose rows
    are the vectors.
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        fam = vectors.astype(complex, copy=False)
    else:
        rows = [np.asarray(v, dtype=complex) for v in vectors]
        if not rows:
            raise WedgeError("empty vector family")
        if any(r.ndim != 1 for r in rows):
            raise WedgeError("vectors must be one-dimensional")
        if len({r.shape[0] for r in rows}) != 1:
            raise WedgeError("mixed dimensions")
        fam = np.stack(rows)
    if fam.shape[0] == 0 or fam.shape[1] == 0:
        raise WedgeError("empty vector family")
    if not np.all(np.isfinite(fam)):
        raise WedgeError("non-finite vector entries")
    return fam


def gram_matrix(vectors):
    """Return ``G[i, j] = <v_i|v_j>`` for the rows of ``vectors``."""
    fam = as_family(vectors)
    return fam.conj() @ fam.T


def _clamp(value):
    if value < 0.0:
        if value < -CLAMP_TOL:
            raise ConsistencyError(f"negative squared volume {value!r}")
        return 0.0
    return value


def wedge_norm_sq(vectors):
    """Squared norm ``|v_1 ^ v_2 ^ ... ^ v_k|^2`` of a family in ``C^d``.

    Parameters
    ----------
    vectors : sequence of array_like or (k, d) ndarray
        The family, ``1 <= k <= d``.

    Returns
    -------
    float
        ``det`` of the Gram matrix. Round-off negatives down to ``-1e-10``
        are clamped to zero. When ``k == d`` this equals ``|det A|^2`` with
        ``A`` the row stack, and that path is used.

    Raises
    ------
    WedgeError
        Mixed dimensions, or more vectors than the ambient dimension.
    """
    fam = as_family(vectors)
    k, d = fam.shape
    if k > d:
        raise WedgeError("too many vectors for ambient dimension")
    if k == d:
        return float(abs(np.linalg.det(fam)) ** 2)
    g = fam.conj() @ fam.T
    return _clamp(float(np.linalg.det(g).real))


def gram_det_path(vectors):
    """``wedge_norm_sq`` forced through the Gram determinant, for cross-checks."""
    fam = as_family(vectors)
    if fam.shape[0] > fam.shape[1]:
        raise WedgeError("too many vectors for ambient dimension")
    return _clamp(float(np.linalg.det(fam.conj() @ fam.T).real))


def pairwise_wedge_sum(vectors):
    """Sum over unordered pairs of ``|v_i ^ v_j|^2``.

    Each term is ``|v_i|^2 |v_j|^2 - |<v_i|v_j>|^2`` (Lagrange identity),
    clamped at zero. Works for any number of vectors, including more than the
    ambient dimension.
    """
    fam = as_family(vectors)
    if fam.shape[0] < 2:
        raise WedgeError("need at least two vectors")
    g = fam.conj() @ fam.T
    norms = g.diagonal().real
    total = 0.0
    for i, j in combinations(range(fam.shape[0]), 2):
        total += max(norms[i] * norms[j] - abs(g[i, j]) ** 2, 0.0)
    return total


def order_sum(vectors, k):
    """Sum of ``wedge_norm_sq`` over every ``k``-subset of the family.

    Zero vectors are dropped first since any subset containing one has zero
    wedge. Orders above the ambient dimension contribute nothing and give 0.
    """
    fam = as_family(vectors)
    if k < 1:
        raise WedgeError("order must be positive")
    if k == 2:
        return pairwise_wedge_sum(fam) if fam.shape[0] >= 2 else 0.0
    keep = np.linalg.norm(fam, axis=1) > 0
    fam = fam[keep]
    n, d = fam.shape
    if k > min(n, d):
        return 0.0
    g = fam.conj() @ fam.T
    total = 0.0
    for idx in combinations(range(n), k):
        sub = g[np.ix_(idx, idx)]
        total += _clamp(float(np.linalg.det(sub).real))
    return total
