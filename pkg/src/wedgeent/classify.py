"""Geometric classes of two-qutrit states.

The three post-measurement vectors of a two-qutrit state span a (complex)
parallelepiped in C^3. Its shape sorts entangled states into three types:

* ``TYPE_I``   - the vectors are coplanar (coefficient matrix of rank 2),
* ``TYPE_II``  - not coplanar and mutually orthogonal,
* ``TYPE_III`` - not coplanar and at least one pair non-orthogonal.

Rank one is ``SEPARABLE``.
"""

import enum
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .exterior import wedge_norm_sq
from .states import StateError, post_measurement_vectors

__all__ = [
    "EntanglementClass",
    "GeometryReport",
    "orthogonal_pair_count",
    "classify_two_qutrit",
]

TOL_RANK = 1e-8
TOL_ORTHO = 1e-8
# vectors shorter than this fraction of the longest one count as zero
TOL_ZERO = 1e-12

AREA_PAIRS = ((0, 1), (1, 2), (2, 0))


class EntanglementClass(enum.Enum):
    SEPARABLE = "separable"
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


@dataclass
class GeometryReport:
    rank: int
    planar: bool
    orthogonal_pairs: int
    volume_sq: float
    areas_sq: tuple
    ent_class: EntanglementClass
    singular_values: np.ndarray
    overlaps: np.ndarray  # |<v_i|v_j>| for pairs (0,1), (1,2), (2,0)
    tolerances: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "class": self.ent_class.name,
            "rank": self.rank,
            "planar": self.planar,
            "orthogonal_pairs": self.orthogonal_pairs,
            "volume_sq": self.volume_sq,
            "areas_sq": list(self.areas_sq),
            "singular_values": [float(s) for s in self.singular_values],
            "overlaps": [float(o) for o in self.overlaps],
            "tolerances": dict(self.tolerances),
        }


def _nonzero_mask(fam):
    norms = np.linalg.norm(fam, axis=1)
    scale = norms.max()
    if scale == 0:
        return np.zeros(len(norms), dtype=bool)
    return norms > TOL_ZERO * scale


def orthogonal_pair_count(family, tol_ortho=TOL_ORTHO):
    """Number of orthogonal pairs among three vectors.

    A pair counts when ``|<v_i|v_j>| < tol_ortho * |v_i| |v_j|``. Pairs that
    involve a zero vector are skipped rather than counted, so two orthogonal
    vectors plus a zero vector give 1.
    """
    fam = np.asarray(family, dtype=complex)
    if fam.ndim != 2 or fam.shape[0] != 3:
        raise StateError("orthogonal_pair_count needs exactly three vectors")
    nz = _nonzero_mask(fam)
    norms = np.linalg.norm(fam, axis=1)
    count = 0
    for i, j in combinations(range(3), 2):
        if not (nz[i] and nz[j]):
            continue
        if abs(np.vdot(fam[i], fam[j])) < tol_ortho * norms[i] * norms[j]:
            count += 1
    return count


def _class_for(rank, op):
    if rank <= 1:
        return EntanglementClass.SEPARABLE
    if rank == 2:
        return EntanglementClass.TYPE_I
    return EntanglementClass.TYPE_II if op == 3 else EntanglementClass.TYPE_III


def classify_two_qutrit(state, tol_rank=TOL_RANK, tol_ortho=TOL_ORTHO, side=0):
    """Classify a two-qutrit state by the shape of its post-measurement vectors.

    Parameters
    ----------
    state : PureState
        Must have ``dims == (3, 3)``.
    tol_rank : float
        Singular values below ``tol_rank * s_max`` are treated as zero.
    tol_ortho : float
        Relative overlap threshold for orthogonality.
    side : {0, 1}
        Party whose outcomes index the vectors. Party 0 by default.

    Returns
    -------
    GeometryReport
    """
    if tuple(state.dims) != (3, 3):
        raise StateError(f"classification needs dims (3, 3), got {state.dims}")
    fam = np.asarray(post_measurement_vectors(state, side).vectors)
    sv = np.linalg.svd(fam, compute_uv=False)
    rank = int(np.sum(sv > tol_rank * sv[0])) if sv[0] > 0 else 0
    op = orthogonal_pair_count(fam, tol_ortho)
    areas = tuple(wedge_norm_sq(fam[[i, j]]) for i, j in AREA_PAIRS)
    overlaps = np.array([abs(np.vdot(fam[i], fam[j])) for i, j in AREA_PAIRS])
    return GeometryReport(
        rank=rank,
        planar=rank <= 2,
        orthogonal_pairs=op,
        volume_sq=wedge_norm_sq(fam),
        areas_sq=areas,
        ent_class=_class_for(rank, op),
        singular_values=sv,
        overlaps=overlaps,
        tolerances={
            "tol_rank": tol_rank,
            "tol_ortho": tol_ortho,
            "tol_zero": TOL_ZERO,
            "tol_vol": tol_rank**2,
        },
    )
