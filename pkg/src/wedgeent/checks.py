"""Randomized invariant suites, shared by the ``check`` command and the tests.

Every suite returns the worst deviation it saw next to the tolerance it
was held to. The checking side of each suite never goes through the code
path being checked: the polynomial expansion below is written out term by
term from the nine coefficients, and purities come from explicit density
matrices.
"""

from dataclasses import dataclass

import numpy as np

from .exterior import pairwise_wedge_sum
from .measure import MeasureMode, eg_bipartite, eg_two_qutrit, i_concurrence
from .states import (
    LocalUnitary,
    PureState,
    apply_local_unitary,
    post_measurement_vectors,
    random_state,
    random_unitary,
)

__all__ = ["CheckResult", "expanded_measure", "random_rank2_state", "run_check", "SUITES"]


@dataclass
class CheckResult:
    name: str
    trials: int
    worst: float
    tolerance: float

    @property
    def passed(self):
        return self.worst < self.tolerance

    def to_dict(self):
        return {
            "invariant": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "worst_deviation": self.worst,
            "tolerance": self.tolerance,
        }


def expanded_measure(m):
    """Two-qutrit measure written out from the coefficients ``a ... z``.

    ``m`` is the 3x3 coefficient matrix ``[[a, b, c], [p, q, r], [x, y, z]]``.
    """
    (a, b, c), (p, q, r), (x, y, z) = np.asarray(m, dtype=complex)
    sq = lambda w: abs(w) ** 2  # noqa: E731
    return (
        9 * sq(a * (q * z - r * y) - b * (p * z - r * x) + c * (p * y - q * x))
        + 2 * (sq(b * r - c * q) + sq(c * p - a * r) + sq(a * q - b * p))
        + 2 * (sq(b * z - c * y) + sq(c * x - a * z) + sq(a * y - b * x))
        + 2 * (sq(q * z - r * y) + sq(x * r - p * z) + sq(p * y - q * x))
    )


def random_rank2_state(rng):
    """Two-qutrit state whose coefficient matrix has rank exactly two."""
    left = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    right = rng.standard_normal((2, 3)) + 1j * rng.standard_normal((2, 3))
    return PureState.from_amplitudes((3, 3), left @ right, renormalize=True)


def _mixed_qutrit_state(rng, k):
    # cycle through full-rank, rank-2 and sparse diagonal-like draws
    kind = k % 3
    if kind == 0:
        return random_state((3, 3), seed=rng)
    if kind == 1:
        return random_rank2_state(rng)
    return random_state((3, 3), support=[(0, 0), (1, 1), (2, 2), (0, 1)], seed=rng)


def _check_lu(trials, rng):
    worst = 0.0
    for k in range(trials):
        s = _mixed_qutrit_state(rng, k)
        party = int(rng.integers(2))
        u = LocalUnitary(party, random_unitary(3, rng))
        t = apply_local_unitary(s, u)
        worst = max(worst, abs(eg_two_qutrit(s).value - eg_two_qutrit(t).value))
        for mode in (MeasureMode.LITERAL, MeasureMode.NORMALIZED):
            worst = max(worst, abs(eg_bipartite(s, (0,), mode).value - eg_bipartite(t, (0,), mode).value))
    return worst


def _check_party(trials, rng):
    worst = 0.0
    for k in range(trials):
        s = _mixed_qutrit_state(rng, k)
        worst = max(worst, abs(eg_two_qutrit(s, side=0).value - eg_two_qutrit(s, side=1).value))
    return worst


SHAPES = ((3, 3), (2, 3), (2, 2, 2), (3, 3, 3), (2, 3, 2))


def _check_purity(trials, rng):
    worst = 0.0
    for k in range(trials):
        dims = SHAPES[k % len(SHAPES)]
        s = random_state(dims, seed=rng)
        n = len(dims)
        size = int(rng.integers(1, n))
        bp = tuple(sorted(rng.choice(n, size=size, replace=False).tolist()))
        lhs = i_concurrence(s, bp) ** 2
        rhs = 4.0 * pairwise_wedge_sum(post_measurement_vectors(s, bp).vectors)
        worst = max(worst, abs(lhs - rhs))
    return worst


def _check_expansion(trials, rng):
    worst = 0.0
    for k in range(trials):
        s = _mixed_qutrit_state(rng, k)
        worst = max(worst, abs(expanded_measure(s.amplitudes) - eg_two_qutrit(s).value))
    return worst


SUITES = {
    "lu": (_check_lu, 1e-9),
    "party": (_check_party, 1e-10),
    "purity": (_check_purity, 1e-9),
    "expansion": (_check_expansion, 1e-10),
}


def run_check(name, trials=200, seed=0):
    """Run one named suite and return its :class:`CheckResult`."""
    if name not in SUITES:
        raise KeyError(f"unknown invariant {name!r}; choose from {sorted(SUITES)}")
    fn, tol = SUITES[name]
    worst = fn(trials, np.random.default_rng(seed))
    return CheckResult(name, trials, float(worst), tol)
