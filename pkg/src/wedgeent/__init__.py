"""Wedge-product entanglement measures and geometric classes for pure qudit states."""

__version__ = "0.1.0"

from .classify import EntanglementClass, GeometryReport, classify_two_qutrit, orthogonal_pair_count
from .exterior import pairwise_wedge_sum, wedge_norm_sq
from .measure import (
    Counting,
    MeasureMode,
    MeasureReport,
    eg_bipartite,
    eg_multipartite,
    eg_two_qutrit,
    i_concurrence,
)
from .optimize import OptimizerConfig, SupportPattern, fd_gradient_check, maximize_eg
from .states import (
    Bipartition,
    LocalUnitary,
    PureState,
    StateError,
    apply_local_unitary,
    post_measurement_vectors,
    product_state,
    random_state,
    random_unitary,
    reduced_purity,
    two_qutrit,
)
