"""Wedge-product entanglement measures.

Three conventions are kept apart explicitly (see :class:`MeasureMode`):
the two-qutrit measure with weights 9 and 2, the general bipartite sum with
unit weights as written for qudits, and that sum rescaled to peak at one.
"""

import enum
from dataclasses import dataclass, field
from math import comb, sqrt

import numpy as np

from .exterior import order_sum, pairwise_wedge_sum, wedge_norm_sq
from .states import (
    Bipartition,
    StateError,
    all_bipartitions,
    post_measurement_vectors,
    reduced_purity,
)

__all__ = [
    "MeasureMode",
    "Counting",
    "MeasureReport",
    "MultipartiteReport",
    "eg_two_qutrit",
    "eg_bipartite",
    "eg_multipartite",
    "i_concurrence",
    "literal_coefficients",
]

VOLUME_WEIGHT = 9.0
AREA_WEIGHT = 2.0


class MeasureMode(enum.Enum):
    QUTRIT = "qutrit"
    LITERAL = "literal"
    NORMALIZED = "normalized"


class Counting(enum.Enum):
    EACH_BIPARTITION_ONCE = "once"
    ALL_SUBSETS = "all"


@dataclass
class MeasureReport:
    value: float
    volume_sq: float
    wedge_terms_by_order: dict
    mode: MeasureMode
    measured: tuple = (0,)

    def to_dict(self):
        return {
            "value": self.value,
            "volume_sq": self.volume_sq,
            "wedge_terms_by_order": {str(k): v for k, v in self.wedge_terms_by_order.items()},
            "mode": self.mode.name,
            "measured": list(self.measured),
        }


@dataclass
class MultipartiteReport:
    total: float
    counting: Counting
    breakdown: list = field(default_factory=list)  # [(parties, value), ...]

    def to_dict(self):
        return {
            "total": self.total,
            "counting": self.counting.name,
            "breakdown": [{"measured": list(p), "value": v} for p, v in self.breakdown],
        }


def _check_qutrit_pair(state):
    if tuple(state.dims) != (3, 3):
        raise StateError(f"two-qutrit measure needs dims (3, 3), got {state.dims}")


def eg_two_qutrit(state, side=0):
    """Two-qutrit measure ``9|e0^e1^e2|^2 + 2 sum_{i<j} |ei^ej|^2``.

    ``side`` picks whose post-measurement vectors are used (0 = Alice's
    outcomes index Bob's vectors). Both sides give the same value.
    """
    _check_qutrit_pair(state)
    fam = post_measurement_vectors(state, side).vectors
    vol = wedge_norm_sq(fam)
    pairs = pairwise_wedge_sum(fam)
    return MeasureReport(
        value=VOLUME_WEIGHT * vol + AREA_WEIGHT * pairs,
        volume_sq=vol,
        wedge_terms_by_order={2: pairs, 3: vol},
        mode=MeasureMode.QUTRIT,
        measured=(side,),
    )


def literal_coefficients(k_max):
    """Weights per wedge order for the unit-weight qudit sum.

    The written sum runs full wedge, drop-one wedges, ..., pairs, each with
    weight one. With three vectors the drop-one wedges are the pairs, so the
    pair order is counted twice.
    """
    if k_max < 2:
        return {}
    coeffs = {k: 1.0 for k in range(2, k_max + 1)}
    if k_max == 3:
        coeffs[2] = 2.0
    return coeffs


def _max_entangled_literal(k_max):
    return sum(c * comb(k_max, k) / k_max**k for k, c in literal_coefficients(k_max).items())


def default_mode(state):
    return MeasureMode.QUTRIT if tuple(state.dims) == (3, 3) else MeasureMode.LITERAL


def eg_bipartite(state, bp=(0,), mode=None):
    """Measure across one bipartition.

    Parameters
    ----------
    state : PureState
    bp : Bipartition or iterable of int
        Measured parties.
    mode : MeasureMode, optional
        Defaults to ``QUTRIT`` for two qutrits and ``LITERAL``
        otherwise.

    Notes
    -----
    The highest wedge order is ``min(#vectors, ambient dimension)``, which is
    the Schmidt-rank bound and is the same number from either side.
    """
    if mode is None:
        mode = default_mode(state)
    mode = MeasureMode(mode) if not isinstance(mode, MeasureMode) else mode
    bp = Bipartition.of(bp, state.n_parties)
    if mode is MeasureMode.QUTRIT:
        _check_qutrit_pair(state)
        return eg_two_qutrit(state, side=bp.parties[0])

    fam = post_measurement_vectors(state, bp).vectors
    k_max = min(fam.shape)
    coeffs = literal_coefficients(k_max)
    terms = {k: order_sum(fam, k) for k in coeffs}
    if fam.shape[0] == fam.shape[1] and k_max in terms:
        # same volume routine as the two-qutrit measure, so the modes agree exactly
        terms[k_max] = wedge_norm_sq(fam)
    value = sum(coeffs[k] * terms[k] for k in coeffs)
    if mode is MeasureMode.NORMALIZED:
        value /= _max_entangled_literal(k_max)
    return MeasureReport(
        value=value,
        volume_sq=terms.get(k_max, 0.0),
        wedge_terms_by_order=terms,
        mode=mode,
        measured=bp.parties,
    )


def eg_multipartite(state, counting=Counting.EACH_BIPARTITION_ONCE):
    """Total measure summed over bipartitions with unit-weight qudit terms.

    ``EACH_BIPARTITION_ONCE`` sums over measured sets containing party 0.
    ``ALL_SUBSETS`` sums over every nonempty proper subset, so each cut
    appears twice (once from each side).
    """
    counting = Counting(counting) if not isinstance(counting, Counting) else counting
    if state.n_parties < 2:
        raise StateError("multipartite measure needs at least two parties")
    cuts = all_bipartitions(
        state.n_parties, containing_first=counting is Counting.EACH_BIPARTITION_ONCE
    )
    breakdown = [
        (bp.parties, eg_bipartite(state, bp, MeasureMode.LITERAL).value) for bp in cuts
    ]
    return MultipartiteReport(
        total=float(sum(v for _, v in breakdown)), counting=counting, breakdown=breakdown
    )


def i_concurrence(state, bp=(0,)):
    """``sqrt(2 (1 - Tr rho^2))`` from the explicit reduced density matrix."""
    purity = reduced_purity(state, bp)
    return sqrt(max(2.0 * (1.0 - purity), 0.0))


def schmidt_coefficients(state, bp=(0,)):
    """Squared singular values of the bipartite coefficient matrix, descending."""
    mat = state.coefficient_matrix(Bipartition.of(bp, state.n_parties))
    return np.linalg.svd(mat, compute_uv=False) ** 2
