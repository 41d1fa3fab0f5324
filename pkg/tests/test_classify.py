import numpy as np
import pytest

from wedgeent.checks import random_rank2_state
from wedgeent.classify import (
    EntanglementClass,
    classify_two_qutrit,
    orthogonal_pair_count,
)
from wedgeent.measure import eg_two_qutrit
from wedgeent.states import (
    LocalUnitary,
    PureState,
    StateError,
    apply_local_unitary,
    post_measurement_vectors,
    product_state,
    random_state,
    random_unitary,
    two_qutrit,
)
from wedgeent.tables import INDEX, ROWS

SEP = EntanglementClass.SEPARABLE
I, II, III = EntanglementClass.TYPE_I, EntanglementClass.TYPE_II, EntanglementClass.TYPE_III


def five(a, b, p, q, z):
    return two_qutrit(a=a, b=b, p=p, q=q, z=z)


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_catalogue_rows(row):
    rep = classify_two_qutrit(row.example)
    assert rep.ent_class is row.ent_class
    assert rep.orthogonal_pairs == row.op
    assert row.op in row.op_listed


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.key)
def test_catalogue_rows_hold_for_random_coefficients(row, rng):
    # the class of a support family does not depend on the generic values
    for _ in range(20):
        terms = {idx: complex(*rng.standard_normal(2)) for idx in row.support}
        for name, value in row.overrides.items():
            terms[INDEX[name]] = value
        terms = {k: v for k, v in terms.items() if v != 0}
        rep = classify_two_qutrit(PureState.from_terms((3, 3), terms))
        assert rep.ent_class is row.ent_class
        assert rep.orthogonal_pairs == row.op


def test_five_term_examples():
    # (1,1,1,1,1) is rank two and (1,1,1,1,0) is a product state
    assert classify_two_qutrit(five(1, 1, 1, 1, 1)).ent_class is I
    assert classify_two_qutrit(five(1, 1, 1, 1, 0)).ent_class is SEP
    rep = classify_two_qutrit(five(1, 2, 3, 1, 1))
    assert rep.ent_class is III and rep.rank == 3
    rep = classify_two_qutrit(five(1, 2, 2, 4, 1))
    assert rep.ent_class is I and rep.orthogonal_pairs == 2
    rep = classify_two_qutrit(five(1, 1, 1, -1, np.sqrt(2)))
    assert rep.ent_class is II and rep.orthogonal_pairs == 3
    assert classify_two_qutrit(five(1, 0, 0, 1, 1)).ent_class is II


def test_simple_classes():
    assert classify_two_qutrit(two_qutrit(a=1)).ent_class is SEP
    assert classify_two_qutrit(two_qutrit(a=1, q=1)).ent_class is I
    rep = classify_two_qutrit(two_qutrit(a=1, q=1, z=1))
    assert rep.ent_class is II
    assert rep.volume_sq == pytest.approx(1 / 27, abs=1e-15)
    assert rep.areas_sq == pytest.approx((1 / 9,) * 3, abs=1e-15)


def test_bob_side_agrees_on_class_of_diagonal_states(rng):
    for _ in range(50):
        s = random_state((3, 3), support=[(0, 0), (1, 1), (2, 2)], seed=rng)
        assert classify_two_qutrit(s, side=1).ent_class is II


def test_classification_needs_two_qutrits():
    with pytest.raises(StateError):
        classify_two_qutrit(random_state((2, 3), seed=0))


# orthogonal pair counting


def test_pair_count_examples():
    e = np.eye(3)
    assert orthogonal_pair_count(e) == 3
    assert orthogonal_pair_count([[1, 0, 0], [1, 1, 0], [0, 0, 1]]) == 2
    assert orthogonal_pair_count([[1, 0, 0], [0, 1, 0], [0, 0, 0]]) == 1
    assert orthogonal_pair_count([[1, 0, 0], [0, 0, 0], [0, 0, 0]]) == 0
    assert orthogonal_pair_count(np.ones((3, 3))) == 0


def test_pair_count_is_relative():
    fam = np.diag([1.0, 1e-6, 1.0])
    fam[1, 0] = 1e-15
    assert orthogonal_pair_count(fam) == 3
    fam[1, 0] = 1e-6
    assert orthogonal_pair_count(fam) == 2


def test_pair_count_needs_three():
    with pytest.raises(StateError):
        orthogonal_pair_count(np.eye(2))


# relation to the measure


def test_type_one_never_exceeds_half(rng):
    for _ in range(2000):
        s = random_rank2_state(rng)
        rep = classify_two_qutrit(s)
        assert rep.ent_class is I
        assert eg_two_qutrit(s).value <= 0.5 + 1e-9


def test_classes_match_volume_and_value(rng):
    for k in range(1500):
        kind = k % 3
        if kind == 0:
            s = random_state((3, 3), seed=rng)
        elif kind == 1:
            s = random_rank2_state(rng)
        else:
            s = product_state([rng.standard_normal(3), rng.standard_normal(3)])
        rep = classify_two_qutrit(s)
        e = eg_two_qutrit(s)
        if rep.ent_class is SEP:
            assert e.value < 1e-12
        elif rep.ent_class is I:
            assert rep.volume_sq < 1e-14
            assert 0 < e.value <= 0.5 + 1e-9
        else:
            assert rep.volume_sq > 0
            assert e.volume_sq == pytest.approx(rep.volume_sq, abs=1e-15)


def test_unit_value_only_for_type_two(rng):
    top = two_qutrit(a=1, q=1, z=1)
    for _ in range(200):
        u = LocalUnitary(int(rng.integers(2)), random_unitary(3, rng))
        t = apply_local_unitary(top, u)
        assert eg_two_qutrit(t).value == pytest.approx(1.0, abs=1e-12)
        assert classify_two_qutrit(t).ent_class is II
    # near-maximal values among random states still come from a full-rank family
    best = max((random_state((3, 3), seed=rng) for _ in range(3000)),
               key=lambda s: eg_two_qutrit(s).value)
    assert classify_two_qutrit(best).rank == 3


def test_report_is_self_consistent(rng):
    for _ in range(100):
        s = random_state((3, 3), seed=rng)
        rep = classify_two_qutrit(s)
        fam = post_measurement_vectors(s, 0).vectors
        np.testing.assert_allclose(rep.singular_values, np.linalg.svd(fam, compute_uv=False))
        assert rep.planar == (rep.rank <= 2)
        assert rep.orthogonal_pairs == orthogonal_pair_count(fam)
        d = rep.to_dict()
        assert d["class"] == rep.ent_class.name
        assert d["tolerances"]["tol_vol"] == pytest.approx(d["tolerances"]["tol_rank"] ** 2)


def test_tolerance_controls_rank():
    s = two_qutrit(a=1, q=1, z=1e-6)
    assert classify_two_qutrit(s).ent_class is II
    assert classify_two_qutrit(s, tol_rank=1e-4).ent_class is I
