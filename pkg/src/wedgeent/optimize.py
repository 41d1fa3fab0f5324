"""Maximize the two-qutrit measure over a support pattern.

The search space is the unit sphere of the supported complex coefficients,
written as ``2k`` real numbers. Each restart runs projected gradient ascent
(tangent-space gradient, retraction by renormalization) with Armijo
backtracking. All restarts advance together as one batch.

The objective is evaluated in closed form from the coefficient matrix ``A``::

    E(A) = 9 |det A|^2 + 2 e2(A A^H)

where ``e2`` is the second elementary symmetric function of the eigenvalues,
``((tr G)^2 - tr G^2) / 2``. Its Wirtinger derivative is

    dE/dA* = 9 det(A) conj(cof A) + 2 (tr(G) A - G A).
"""

from dataclasses import dataclass, field

import numpy as np

from .measure import eg_two_qutrit
from .statefile import state_to_dict
from .states import PureState, StateError

__all__ = [
    "SupportPattern",
    "OptimizerConfig",
    "OptimizationResult",
    "objective",
    "objective_and_gradient",
    "projected_gradient",
    "maximize_eg",
    "fd_gradient_check",
    "parse_support",
]


@dataclass(frozen=True)
class SupportPattern:
    """Coefficients allowed to be nonzero, as ``(i, j)`` multi-indices."""

    indices: tuple
    dims: tuple = (3, 3)

    def __post_init__(self):
        if tuple(self.dims) != (3, 3):
            raise StateError("only two-qutrit supports are supported")
        idx = tuple(sorted({(int(i), int(j)) for i, j in self.indices}))
        if not idx:
            raise StateError("empty support")
        for i, j in idx:
            if not (0 <= i < 3 and 0 <= j < 3):
                raise StateError(f"support index {(i, j)} out of range")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "dims", tuple(self.dims))

    def __len__(self):
        return len(self.indices)

    def to_matrix(self, x):
        """Real parameters ``(..., 2k)`` to coefficient matrices ``(..., 3, 3)``."""
        x = np.asarray(x)
        k = len(self.indices)
        z = x[..., :k] + 1j * x[..., k:]
        out = np.zeros(x.shape[:-1] + (3, 3), dtype=complex)
        rows, cols = zip(*self.indices)
        out[..., rows, cols] = z
        return out

    def from_matrix(self, a):
        a = np.asarray(a)
        rows, cols = zip(*self.indices)
        z = a[..., rows, cols]
        return np.concatenate([z.real, z.imag], axis=-1)

    def contains(self, state, atol=0.0):
        mask = np.ones((3, 3), dtype=bool)
        for idx in self.indices:
            mask[idx] = False
        return bool(np.all(np.abs(state.amplitudes[mask]) <= atol))


def parse_support(text):
    """``"00,11,22"`` -> :class:`SupportPattern`."""
    items = [s.strip() for s in text.split(",") if s.strip()]
    try:
        idx = [(int(s[0]), int(s[1])) for s in items if len(s) == 2]
    except ValueError as exc:
        raise StateError(f"bad support entry in {text!r}") from exc
    if len(idx) != len(items):
        raise StateError(f"support entries must be two digits, got {text!r}")
    return SupportPattern(tuple(idx))


def _cofactor(a):
    r0, r1, r2 = a[..., 0, :], a[..., 1, :], a[..., 2, :]
    return np.stack([np.cross(r1, r2), np.cross(r2, r0), np.cross(r0, r1)], axis=-2)


def objective(a):
    """Closed-form measure for a batch of ``(..., 3, 3)`` coefficient matrices."""
    a = np.asarray(a, dtype=complex)
    g = a @ np.conj(np.swapaxes(a, -1, -2))
    tr = np.trace(g, axis1=-2, axis2=-1).real
    tr2 = np.sum(np.abs(g) ** 2, axis=(-2, -1))
    det = np.linalg.det(a)
    return 9.0 * np.abs(det) ** 2 + (tr**2 - tr2)


def objective_and_gradient(a):
    """Value and ``dE/dA*`` (Wirtinger) for a batch of coefficient matrices.

    The gradient with respect to ``(Re A, Im A)`` is ``2 * dE/dA*``.
    """
    a = np.asarray(a, dtype=complex)
    g = a @ np.conj(np.swapaxes(a, -1, -2))
    tr = np.trace(g, axis1=-2, axis2=-1).real
    tr2 = np.sum(np.abs(g) ** 2, axis=(-2, -1))
    cof = _cofactor(a)
    det = np.sum(a[..., 0, :] * cof[..., 0, :], axis=-1)
    value = 9.0 * np.abs(det) ** 2 + (tr**2 - tr2)
    wirt = 9.0 * det[..., None, None] * np.conj(cof) + 2.0 * (tr[..., None, None] * a - g @ a)
    return value, wirt


def _value_grad(support, x):
    value, wirt = objective_and_gradient(support.to_matrix(x))
    return value, 2.0 * support.from_matrix(wirt)


def _tangent(x, g):
    return g - np.sum(g * x, axis=-1, keepdims=True) * x


def _normalize(x):
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def projected_gradient(state, support):
    """Tangent-space gradient of the measure at ``state`` in real coordinates."""
    support = _as_support(support)
    x = support.from_matrix(state.amplitudes)
    _, g = _value_grad(support, x)
    return _tangent(x, g)


@dataclass
class OptimizerConfig:
    restarts: int = 32
    max_iters: int = 2000
    step_rule: str = "backtracking"  # or "fixed"
    step: float = 1.0
    seed: int = 0
    eps_boundary: float = 1e-4
    grad_tol: float = 1e-9
    tie_tol: float = 1e-12
    # a restart stops after flat_iters consecutive steps gaining <= flat_tol
    flat_tol: float = 1e-15
    flat_iters: int = 10
    armijo: float = 0.5
    max_step: float = 8.0

    def to_dict(self):
        return dict(self.__dict__)


@dataclass
class OptimizationResult:
    best_state: PureState
    best_value: float
    attained: bool
    boundary_indices: frozenset
    trace: list
    restarts_used: int
    best_restart: int
    restart_values: np.ndarray
    boundary_faces: tuple = ()
    traces: list = field(default_factory=list, repr=False)
    config: OptimizerConfig = None

    def magnitudes(self):
        return np.abs(self.best_state.amplitudes)

    def to_dict(self):
        return {
            "best_value": self.best_value,
            "attained": self.attained,
            "boundary_indices": [list(i) for i in sorted(self.boundary_indices)],
            "boundary_faces": [[list(i) for i in sorted(f)] for f in self.boundary_faces],
            "best_state": state_to_dict(self.best_state),
            "best_restart": self.best_restart,
            "restarts_used": self.restarts_used,
            "restart_values": [float(v) for v in self.restart_values],
            "trace": [[int(i), float(v)] for i, v in self.trace],
            "config": self.config.to_dict() if self.config else None,
        }


def _as_support(support):
    if isinstance(support, SupportPattern):
        return support
    if isinstance(support, str):
        return parse_support(support)
    return SupportPattern(tuple(support))


def _initial_points(support, config):
    k = len(support)
    x = np.empty((config.restarts, 2 * k))
    for r, child in enumerate(np.random.SeedSequence(config.seed).spawn(config.restarts)):
        x[r] = np.random.default_rng(child).standard_normal(2 * k)
    return _normalize(x)


def _ascend(support, x, config):
    n = x.shape[0]
    f, g = _value_grad(support, x)
    t = np.full(n, config.step)
    done = np.zeros(n, dtype=bool)
    flat = np.zeros(n, dtype=int)
    traces = [[(0, float(v))] for v in f]
    for it in range(1, config.max_iters + 1):
        gt = _tangent(x, g)
        gsq = np.sum(gt**2, axis=-1)
        done |= np.sqrt(gsq) < config.grad_tol
        live = np.flatnonzero(~done)
        if live.size == 0:
            break
        if config.step_rule == "fixed":
            x_new = _normalize(x[live] + config.step * gt[live])
            f_new, g_new = _value_grad(support, x_new)
            x[live], f[live], g[live] = x_new, f_new, g_new
            for r, v in zip(live, f_new):
                traces[r].append((it, float(v)))
            continue
        pending = live
        for _ in range(60):
            trial = _normalize(x[pending] + t[pending, None] * gt[pending])
            f_trial, g_trial = _value_grad(support, trial)
            ok = f_trial >= f[pending] + config.armijo * t[pending] * gsq[pending]
            acc = pending[ok]
            gain = f_trial[ok] - f[acc]
            flat[acc] = np.where(gain <= config.flat_tol, flat[acc] + 1, 0)
            done[acc[flat[acc] >= config.flat_iters]] = True
            x[acc], f[acc], g[acc] = trial[ok], f_trial[ok], g_trial[ok]
            t[acc] = np.minimum(2.0 * t[acc], config.max_step)
            for r, v in zip(acc, f_trial[ok]):
                traces[r].append((it, float(v)))
            pending = pending[~ok]
            if pending.size == 0:
                break
            t[pending] *= 0.5
            stalled = t[pending] < 1e-14
            done[pending[stalled]] = True
            pending = pending[~stalled]
            if pending.size == 0:
                break
    return x, f, traces


def maximize_eg(support, config=None, **overrides):
    """Multi-restart maximization of the two-qutrit measure on ``support``.

    Parameters
    ----------
    support : SupportPattern, str or iterable of (i, j)
        ``"00,11,22"`` style strings are accepted.
    config : OptimizerConfig, optional
    **overrides
        Field overrides for the config, e.g. ``restarts=8, seed=3``.

    Returns
    -------
    OptimizationResult
        ``best_value`` is re-evaluated through the wedge pipeline. When some
        supported coefficient of the best state has magnitude below
        ``eps_boundary``, the supremum sits on the boundary of the support
        stratum: ``attained`` is False and those indices are listed.
        ``boundary_faces`` collects the distinct vanishing sets of every
        restart tied with the best, since a supremum may be approached along
        several symmetric faces.
    """
    support = _as_support(support)
    config = config or OptimizerConfig()
    if overrides:
        config = OptimizerConfig(**{**config.__dict__, **overrides})
    if config.restarts < 1:
        raise ValueError("need at least one restart")
    x, f, traces = _ascend(support, _initial_points(support, config), config)
    # values within tie_tol are ties; the lowest restart index wins
    tied = np.flatnonzero(f >= f.max() - config.tie_tol)
    best = int(tied[0])
    faces = []
    for r in tied:
        face = _boundary(support, x[r], config.eps_boundary)
        if face not in faces:
            faces.append(face)
    state = PureState.from_amplitudes((3, 3), support.to_matrix(x[best]), renormalize=True)
    boundary = _boundary(support, x[best], config.eps_boundary)
    return OptimizationResult(
        best_state=state,
        best_value=eg_two_qutrit(state).value,
        attained=not boundary,
        boundary_indices=boundary,
        trace=traces[best],
        restarts_used=config.restarts,
        best_restart=best,
        restart_values=f.copy(),
        boundary_faces=tuple(faces),
        traces=traces,
        config=config,
    )


def _boundary(support, x, eps):
    mags = np.abs(support.to_matrix(_normalize(x)))
    return frozenset(idx for idx in support.indices if mags[idx] < eps)


def fd_gradient_check(state, support, h=1e-6):
    """Largest discrepancy between analytic and finite-difference gradients.

    The finite-difference side differentiates ``E(x / |x|)`` by central
    differences in every real coordinate, evaluating ``E`` through the wedge
    pipeline. At unit ``x`` that derivative is exactly the tangent-space
    gradient. The discrepancy is scaled by ``max(|g|_inf, 1e-3)``.
    """
    support = _as_support(support)
    if not support.contains(state):
        raise StateError("state has weight outside the support")
    x = support.from_matrix(state.amplitudes)
    analytic = projected_gradient(state, support)

    def energy(v):
        v = v / np.linalg.norm(v)
        return eg_two_qutrit(PureState((3, 3), support.to_matrix(v))).value

    fd = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        fd[i] = (energy(x + e) - energy(x - e)) / (2 * h)
    scale = max(np.max(np.abs(fd)), np.max(np.abs(analytic)), 1e-3)
    return float(np.max(np.abs(analytic - fd)) / scale)
