"""Pure multi-qudit states, bipartitions and post-measurement vectors.

Amplitudes are stored as a dense complex tensor of shape ``dims`` in
row-major order with party 0 slowest, so ``amplitudes[i, j]`` of a
two-qutrit state is the coefficient of ``|ij>``.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = [
    "StateError",
    "PureState",
    "Bipartition",
    "PostMeasurementFamily",
    "LocalUnitary",
    "post_measurement_vectors",
    "reconstruct",
    "apply_local_unitary",
    "random_unitary",
    "reduced_purity",
    "random_state",
    "product_state",
    "two_qutrit",
    "all_bipartitions",
]

NORM_TOL = 1e-9
UNITARY_TOL = 1e-9


class StateError(ValueError):
    """Invalid state, bipartition or local operator."""


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state on parties of dimensions ``dims``.

    Construction rejects tensors whose squared norm is off from one by more
    than ``1e-9``; pass ``renormalize=True`` to :meth:`from_amplitudes` to
    rescale instead.
    """

    dims: tuple
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) < 1 or any(d < 2 for d in dims):
            raise StateError(f"every party needs dimension >= 2, got {dims}")
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.size != int(np.prod(dims)):
            raise StateError(
                f"{amps.size} amplitudes do not fit dims {dims}"
            )
        amps = amps.reshape(dims)
        if not np.all(np.isfinite(amps)):
            raise StateError("non-finite amplitude")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise StateError(f"state is not normalized (norm^2 = {norm_sq:.12g})")
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, dims, amplitudes, renormalize=False):
        amps = np.array(amplitudes, dtype=complex).reshape(tuple(dims))
        if renormalize:
            nrm = np.linalg.norm(amps)
            if nrm == 0:
                raise StateError("cannot renormalize the zero vector")
            amps = amps / nrm
        return cls(tuple(dims), amps)

    @classmethod
    def from_terms(cls, dims, terms, renormalize=True):
        """Build a state from ``{multi_index: coefficient}``.

        >>> PureState.from_terms((3, 3), {(0, 0): 1, (1, 1): 1}).amplitudes[1, 1]
        (0.7071067811865475+0j)
        """
        amps = np.zeros(tuple(dims), dtype=complex)
        for idx, coeff in terms.items():
            amps[tuple(idx)] = coeff
        return cls.from_amplitudes(dims, amps, renormalize=renormalize)

    @property
    def n_parties(self):
        return len(self.dims)

    @property
    def vector(self):
        """Flat amplitude vector (row-major)."""
        return self.amplitudes.reshape(-1)

    def coefficient_matrix(self, bp=None):
        """Amplitudes reshaped to ``(measured, rest)`` for a bipartition.

        Defaults to party 0 measured, which for two parties is just the
        ``d_0 x d_1`` coefficient matrix.
        """
        bp = Bipartition.of(bp if bp is not None else (0,), self.n_parties)
        rest = bp.complement(self.n_parties)
        perm = bp.parties + rest
        moved = np.transpose(self.amplitudes, perm)
        rows = int(np.prod([self.dims[i] for i in bp.parties]))
        return moved.reshape(rows, -1)

    def __repr__(self):
        return f"PureState(dims={self.dims}, nnz={np.count_nonzero(self.amplitudes)})"


@dataclass(frozen=True)
class Bipartition:
    """The measured side of a split of the parties; the complement is implied."""

    parties: tuple

    @classmethod
    def of(cls, parties, n_parties):
        if isinstance(parties, Bipartition):
            parties = parties.parties
        if isinstance(parties, (int, np.integer)):
            parties = (int(parties),)
        ps = tuple(sorted({int(p) for p in parties}))
        if not ps:
            raise StateError("bipartition must name at least one party")
        if ps[0] < 0 or ps[-1] >= n_parties:
            raise StateError(f"party index out of range for {n_parties} parties: {ps}")
        if len(ps) == n_parties:
            raise StateError("bipartition must leave at least one party unmeasured")
        return cls(ps)

    def complement(self, n_parties):
        return tuple(i for i in range(n_parties) if i not in self.parties)

    def flipped(self, n_parties):
        return Bipartition(self.complement(n_parties))


@dataclass(frozen=True, eq=False)
class PostMeasurementFamily:
    """Unnormalized conditional states of the unmeasured side.

    ``vectors[i]`` belongs to the measured-side multi-index ``labels[i]``
    (row-major over the measured parties).
    """

    vectors: np.ndarray
    labels: tuple
    bipartition: Bipartition

    @property
    def ambient_dim(self):
        return self.vectors.shape[1]

    def __len__(self):
        return self.vectors.shape[0]

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    party: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise StateError("local unitary must be a square matrix")
        if not np.allclose(m @ m.conj().T, np.eye(m.shape[0]), rtol=0, atol=UNITARY_TOL):
            raise StateError("matrix is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def post_measurement_vectors(state, bp):
    """Slice ``state`` into post-measurement vectors of the unmeasured side.

    Parameters
    ----------
    state : PureState
    bp : Bipartition or int or iterable of int
        Parties measured in the computational basis.

    Returns
    -------
    PostMeasurementFamily
        One vector of dimension ``prod(d_i, i unmeasured)`` per measured
        outcome. For ``dims == (3, 3)`` and ``bp = {0}`` the rows are the
        rows of the coefficient matrix.
    """
    bp = Bipartition.of(bp, state.n_parties)
    mat = state.coefficient_matrix(bp)
    shape = tuple(state.dims[i] for i in bp.parties)
    labels = tuple(np.ndindex(*shape))
    vecs = mat.copy()
    vecs.setflags(write=False)
    return PostMeasurementFamily(vecs, labels, bp)


def reconstruct(family, dims):
    """Rebuild the amplitude tensor from a post-measurement family."""
    dims = tuple(dims)
    bp = family.bipartition
    rest = bp.complement(len(dims))
    perm = bp.parties + rest
    moved_shape = tuple(dims[i] for i in perm)
    moved = np.asarray(family.vectors).reshape(moved_shape)
    return np.transpose(moved, np.argsort(perm))


def apply_local_unitary(state, u):
    """Apply ``u.matrix`` to party ``u.party`` of ``state``."""
    if not isinstance(u, LocalUnitary):
        raise StateError("expected a LocalUnitary")
    if not 0 <= u.party < state.n_parties:
        raise StateError(f"no party {u.party}")
    if u.matrix.shape[0] != state.dims[u.party]:
        raise StateError(
            f"unitary of size {u.matrix.shape[0]} does not match party "
            f"dimension {state.dims[u.party]}"
        )
    out = np.tensordot(u.matrix, state.amplitudes, axes=([1], [u.party]))
    out = np.moveaxis(out, 0, u.party)
    return PureState(state.dims, out)


def random_unitary(d, seed=None):
    """Haar-random ``d x d`` unitary.

    QR of a complex Ginibre matrix with the phases of ``R``'s diagonal pushed
    into ``Q`` (Mezzadri's recipe). Deterministic for a given ``seed``;
    ``seed`` may also be a ``numpy.random.Generator``.
    """
    if d < 1:
        raise StateError("dimension must be positive")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = r.diagonal()
    phases = diag / np.abs(diag)
    return q * phases


def reduced_purity(state, bp):
    """``Tr(rho^2)`` of the unmeasured side.

    Independent of the wedge machinery: builds ``rho = sum_i |g_i><g_i|``
    explicitly from the post-measurement vectors and squares it.
    """
    bp = Bipartition.of(bp, state.n_parties)
    mat = state.coefficient_matrix(bp)
    rho = np.zeros((mat.shape[1], mat.shape[1]), dtype=complex)
    for g in mat:
        rho += np.outer(g, g.conj())
    return float(np.trace(rho @ rho).real)


def random_state(dims, support=None, seed=None):
    """Complex Gaussian state on ``support`` (full tensor if ``None``).

    ``seed`` may be an int or a ``numpy.random.Generator``.
    """
    dims = tuple(int(d) for d in dims)
    rng = np.random.default_rng(seed)
    amps = np.zeros(dims, dtype=complex)
    if support is None:
        amps = rng.standard_normal(dims) + 1j * rng.standard_normal(dims)
    else:
        support = sorted({tuple(int(i) for i in s) for s in support})
        if not support:
            raise StateError("empty support")
        for idx in support:
            if len(idx) != len(dims) or any(not 0 <= i < d for i, d in zip(idx, dims)):
                raise StateError(f"support index {idx} outside dims {dims}")
        vals = rng.standard_normal(len(support)) + 1j * rng.standard_normal(len(support))
        for idx, v in zip(support, vals):
            amps[idx] = v
    return PureState.from_amplitudes(dims, amps, renormalize=True)


def product_state(factors):
    """Tensor product of single-party vectors (each normalized here)."""
    out = np.array([1.0 + 0j])
    dims = []
    for f in factors:
        f = np.asarray(f, dtype=complex)
        out = np.kron(out, f / np.linalg.norm(f))
        dims.append(f.shape[0])
    return PureState(tuple(dims), out)


def two_qutrit(a=0, b=0, c=0, p=0, q=0, r=0, x=0, y=0, z=0, renormalize=True):
    """Two-qutrit state from the nine named coefficients, row by row."""
    mat = np.array([[a, b, c], [p, q, r], [x, y, z]], dtype=complex)
    return PureState.from_amplitudes((3, 3), mat, renormalize=renormalize)


def all_bipartitions(n_parties, containing_first=False):
    """Every nonempty proper subset of the parties, sorted by size then index."""
    out = []
    for m in range(1, n_parties):
        for sub in combinations(range(n_parties), m):
            if containing_first and 0 not in sub:
                continue
            out.append(Bipartition(sub))
    return out
