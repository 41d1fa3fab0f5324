import numpy as np
import pytest

from oracles import purity_by_partial_trace
from wedgeent.classify import classify_two_qutrit, orthogonal_pair_count, EntanglementClass
from wedgeent.exterior import pairwise_wedge_sum
from wedgeent.states import (
    Bipartition,
    LocalUnitary,
    PureState,
    StateError,
    all_bipartitions,
    apply_local_unitary,
    post_measurement_vectors,
    product_state,
    random_state,
    random_unitary,
    reconstruct,
    reduced_purity,
    two_qutrit,
)
from wedgeent.checks import random_rank2_state

S3 = 1 / np.sqrt(3)
S2 = 1 / np.sqrt(2)


def ghz3():
    amps = np.zeros((2, 2, 2))
    amps[0, 0, 0] = amps[1, 1, 1] = S2
    return PureState((2, 2, 2), amps)


def test_family_rows_are_coefficient_rows():
    coeffs = np.arange(1, 10).reshape(3, 3) * (1 + 0.5j)
    s = PureState.from_amplitudes((3, 3), coeffs, renormalize=True)
    fam = post_measurement_vectors(s, 0)
    np.testing.assert_array_equal(fam.vectors, s.amplitudes)
    assert fam.ambient_dim == 3 and len(fam) == 3


def test_product_ket_family():
    fam = post_measurement_vectors(two_qutrit(a=1), Bipartition((0,)))
    np.testing.assert_array_equal(fam.vectors, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_ghz_slicing():
    fam = post_measurement_vectors(ghz3(), (0,))
    expected = np.zeros((2, 4))
    expected[0, 0] = expected[1, 3] = S2  # |00> and |11> of parties 1,2
    np.testing.assert_allclose(fam.vectors, expected)


def test_bob_side_family_is_columns():
    s = random_state((3, 3), seed=1)
    np.testing.assert_array_equal(post_measurement_vectors(s, 1).vectors, s.amplitudes.T)


@pytest.mark.parametrize("dims", [(3, 3), (2, 3, 2), (2, 2, 2, 2), (3, 2)])
def test_round_trip_all_bipartitions(dims):
    s = random_state(dims, seed=5)
    for bp in all_bipartitions(len(dims)):
        fam = post_measurement_vectors(s, bp)
        np.testing.assert_array_equal(reconstruct(fam, dims), s.amplitudes)
        assert np.sum(np.abs(fam.vectors) ** 2) == pytest.approx(1.0, abs=1e-9)


def test_invalid_bipartitions():
    s = random_state((3, 3), seed=0)
    for bad in [(), (0, 1), (2,), (-1,)]:
        with pytest.raises(StateError):
            post_measurement_vectors(s, bad)


def test_normalization_enforced():
    with pytest.raises(StateError, match="not normalized"):
        PureState((3, 3), np.eye(3))
    s = PureState.from_amplitudes((3, 3), np.eye(3), renormalize=True)
    assert np.linalg.norm(s.vector) == pytest.approx(1.0)


def test_bad_dims():
    with pytest.raises(StateError):
        PureState((1, 3), [1, 0, 0])
    with pytest.raises(StateError):
        PureState((3, 3), [1, 0])


def test_state_is_immutable():
    s = random_state((3, 3), seed=0)
    with pytest.raises(ValueError):
        s.amplitudes[0, 0] = 1


# local unitaries


def test_identity_unitary_is_exact():
    s = random_state((3, 3), seed=2)
    t = apply_local_unitary(s, LocalUnitary(1, np.eye(3)))
    assert np.max(np.abs(t.amplitudes - s.amplitudes)) <= 1e-15


def test_cyclic_permutation_relabels():
    shift = np.roll(np.eye(3), 1, axis=0)  # |k> -> |k+1>
    t = apply_local_unitary(two_qutrit(a=1), LocalUnitary(0, shift))
    np.testing.assert_array_equal(t.amplitudes, two_qutrit(p=1).amplitudes)


def test_unitary_dimension_mismatch():
    s = random_state((3, 2), seed=0)
    with pytest.raises(StateError):
        apply_local_unitary(s, LocalUnitary(1, np.eye(3)))
    with pytest.raises(StateError):
        LocalUnitary(0, np.ones((2, 2)))


def test_lu_preserves_norm(rng):
    for _ in range(100):
        dims = (3, 2, 2)
        s = random_state(dims, seed=rng)
        party = int(rng.integers(3))
        t = apply_local_unitary(s, LocalUnitary(party, random_unitary(dims[party], rng)))
        assert np.linalg.norm(t.vector) == pytest.approx(1.0, abs=1e-12)


def test_random_unitary_contract():
    u1 = random_unitary(1, seed=3)
    assert u1.shape == (1, 1) and abs(abs(u1[0, 0]) - 1) < 1e-12
    for d in range(1, 6):
        u = random_unitary(d, seed=d)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(d), atol=1e-10)
    np.testing.assert_array_equal(random_unitary(3, 42), random_unitary(3, 42))


def test_random_unitary_is_haar_like():
    # E|U_00|^2 = 1/d and E|U_00|^4 = 2/(d(d+1)) under Haar measure
    d, n = 3, 4000
    rng = np.random.default_rng(0)
    u00 = np.array([random_unitary(d, rng)[0, 0] for _ in range(n)])
    assert np.mean(np.abs(u00) ** 2) == pytest.approx(1 / d, abs=0.02)
    assert np.mean(np.abs(u00) ** 4) == pytest.approx(2 / (d * (d + 1)), abs=0.02)
    # phase of a Haar entry is uniform
    assert abs(np.mean(u00 / np.abs(u00))) < 0.05


# purity


def test_purity_examples():
    assert reduced_purity(product_state([[1, 1j, 0], [0.3, 0.2, 1]]), (0,)) == pytest.approx(1.0)
    assert reduced_purity(two_qutrit(a=1, q=1, z=1), (0,)) == pytest.approx(1 / 3, abs=1e-12)
    assert reduced_purity(two_qutrit(a=1, q=1), (0,)) == pytest.approx(1 / 2, abs=1e-12)


@pytest.mark.parametrize("dims", [(3, 3), (2, 3, 2), (3, 3, 3), (2, 2, 2, 2)])
def test_purity_matches_partial_trace(dims, rng):
    s = random_state(dims, seed=rng)
    for bp in all_bipartitions(len(dims)):
        assert reduced_purity(s, bp) == pytest.approx(
            purity_by_partial_trace(s.amplitudes, bp.parties), abs=1e-12
        )


@pytest.mark.parametrize("dims", [(3, 3), (2, 3), (2, 3, 2), (3, 3, 3)])
def test_pairwise_sum_is_half_linear_entropy(dims, rng):
    for _ in range(20):
        s = random_state(dims, seed=rng)
        for bp in all_bipartitions(len(dims)):
            fam = post_measurement_vectors(s, bp).vectors
            other = post_measurement_vectors(s, bp.flipped(len(dims))).vectors
            oracle = (1 - purity_by_partial_trace(s.amplitudes, bp.parties)) / 2
            assert pairwise_wedge_sum(fam) == pytest.approx(oracle, abs=1e-10)
            assert pairwise_wedge_sum(other) == pytest.approx(oracle, abs=1e-10)


# random states


def test_random_state_support():
    s = random_state((3, 3), support=[(0, 0)], seed=9)
    assert abs(abs(s.amplitudes[0, 0]) - 1) < 1e-12
    assert np.count_nonzero(s.amplitudes) == 1
    full = random_state((3, 3), seed=9)
    assert np.linalg.norm(full.vector) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_array_equal(full.amplitudes, random_state((3, 3), seed=9).amplitudes)
    with pytest.raises(StateError):
        random_state((3, 3), support=[], seed=0)
    with pytest.raises(StateError):
        random_state((3, 3), support=[(3, 0)], seed=0)


def test_random_diagonal_is_type_two(rng):
    for _ in range(200):
        s = random_state((3, 3), support=[(0, 0), (1, 1), (2, 2)], seed=rng)
        assert classify_two_qutrit(s).ent_class is EntanglementClass.TYPE_II


# geometry under local unitaries


def _draw_unitary(rng):
    party = int(rng.integers(2))
    return LocalUnitary(party, random_unitary(3, rng))


def test_planarity_survives_local_unitaries(rng):
    for _ in range(500):
        s = random_rank2_state(rng)
        assert classify_two_qutrit(s).planar
        t = apply_local_unitary(s, _draw_unitary(rng))
        assert classify_two_qutrit(t).planar


def test_orthogonal_triple_survives_unitary_on_unmeasured_party(rng):
    # a unitary on the unmeasured party rotates every vector alike
    for _ in range(500):
        s = random_state((3, 3), support=[(0, 0), (1, 1), (2, 2)], seed=rng)
        t = apply_local_unitary(s, LocalUnitary(1, random_unitary(3, rng)))
        assert orthogonal_pair_count(post_measurement_vectors(t, 0).vectors) == 3


def test_orthogonal_triple_with_equal_norms_survives_either_side(rng):
    base = two_qutrit(a=1, q=1, z=1)
    for _ in range(500):
        t = apply_local_unitary(base, _draw_unitary(rng))
        assert orthogonal_pair_count(post_measurement_vectors(t, 0).vectors) == 3


def test_orthogonal_triple_with_unequal_norms_is_not_preserved():
    # Gram matrix diag(n0, n1, n2) becomes U diag U^dagger under a unitary on
    # the measured party, which is diagonal only when the norms coincide
    s = two_qutrit(a=np.sqrt(0.5), q=np.sqrt(0.3), z=np.sqrt(0.2))
    assert orthogonal_pair_count(post_measurement_vectors(s, 0).vectors) == 3
    t = apply_local_unitary(s, LocalUnitary(0, random_unitary(3, seed=1)))
    assert orthogonal_pair_count(post_measurement_vectors(t, 0).vectors) == 0
