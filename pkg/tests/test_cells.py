from __future__ import annotations

from fractions import Fraction

from foldstab.cells import (
    classify_cell,
    f_constraint_rows,
    f_constraints,
    fold_charge,
    in_half_plane,
    numerical_constraints,
    slices_equal,
    unfold_charge,
    vertex_functionals_to_heart,
    verify_classification,
)
from foldstab.hearts import build_interval_eg, heart_label, is_f_stable, seed_heart
from foldstab.quiver import euler_form_cy3, fold, integer_kernel

F = Fraction


def test_numerical_constraints_seed_a3(cat_a3) -> None:
    seed = seed_heart(cat_a3)
    rows = numerical_constraints(cat_a3, seed)
    assert rows == ((F(1), F(0), F(-1)),)


def test_numerical_constraints_a2_empty(cat_a2) -> None:
    assert numerical_constraints(cat_a2, seed_heart(cat_a2)) == ()


def test_f_constraint_rows(flip_a3, rot_d4) -> None:
    assert f_constraint_rows(flip_a3) == ((1, 0, -1),)
    assert f_constraint_rows(rot_d4) == ((0, 1, -1, 0), (0, 0, 1, -1))


def test_d4_kernel_inside_f_span(q_d4, rot_d4, swap_d4) -> None:
    kernel = integer_kernel(euler_form_cy3(q_d4))
    f_rows = f_constraint_rows(rot_d4)
    assert all(slices_equal(f_rows, f_rows + (k,)) for k in kernel)
    assert slices_equal(kernel, f_rows)
    swap_rows = f_constraint_rows(swap_d4)
    assert not all(slices_equal(swap_rows, swap_rows + (k,)) for k in kernel)


def test_a3_numerical_equals_f_slice_on_every_heart(cat_a3, flip_a3) -> None:
    for heart in build_interval_eg(cat_a3).hearts:
        num = numerical_constraints(cat_a3, heart)
        stab = f_constraints(cat_a3, flip_a3, heart)
        assert slices_equal(num, stab)


def test_classification_matches_f_stability(cat_a3, flip_a3) -> None:
    eg = build_interval_eg(cat_a3)
    perm = cat_a3.transport_index(flip_a3)
    feasible_labels = set()
    stable_labels = set()
    for heart in eg.hearts:
        rows = numerical_constraints(cat_a3, heart)
        cls = classify_cell(rows, 3)
        assert verify_classification(rows, cls, 3)
        if cls.feasible:
            feasible_labels.add(heart_label(cat_a3, heart))
        if is_f_stable(perm, heart):
            stable_labels.add(heart_label(cat_a3, heart))
    assert feasible_labels == stable_labels
    assert len(feasible_labels) == 6


def test_top_heart_infeasible_with_branch_certificates(cat_a3) -> None:
    eg = build_interval_eg(cat_a3)
    top = next(h for h in eg.hearts if heart_label(cat_a3, h) == "{T1, T2, X3^1}")
    rows = numerical_constraints(cat_a3, top)
    cls = classify_cell(rows, 3)
    assert not cls.feasible
    assert cls.witness is None
    assert len(cls.certificates) == 8
    assert {c.real_axis for c in cls.certificates} == {
        (), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2),
    }
    assert verify_classification(rows, cls, 3)


def test_feasible_witness_structure(cat_a3) -> None:
    seed = seed_heart(cat_a3)
    rows = numerical_constraints(cat_a3, seed)
    cls = classify_cell(rows, 3)
    assert cls.feasible
    assert cls.certificates is None
    assert len(cls.witness) == 3
    assert all(in_half_plane(z) for z in cls.witness)
    for row in rows:
        assert sum(c * z[0] for c, z in zip(row, cls.witness)) == 0
        assert sum(c * z[1] for c, z in zip(row, cls.witness)) == 0


def test_unconstrained_cell_feasible() -> None:
    cls = classify_cell((), 2)
    assert cls.feasible
    assert verify_classification((), cls, 2)


def test_fully_pinched_cell() -> None:
    rows = (
        (F(1), F(0)),
        (F(0), F(1)),
    )
    cls = classify_cell(rows, 2)
    assert not cls.feasible
    assert len(cls.certificates) == 4
    assert verify_classification(rows, cls, 2)


def test_verify_rejects_tampering(cat_a3) -> None:
    seed = seed_heart(cat_a3)
    rows = numerical_constraints(cat_a3, seed)
    cls = classify_cell(rows, 3)
    from foldstab.cells import CellClassification

    bad = CellClassification(True, ((F(1), F(1)), (F(1), F(1)), (F(2), F(1))), None)
    assert not verify_classification(rows, bad, 3)
    off_plane = CellClassification(True, ((F(0), F(0)),) * 3, None)
    assert not verify_classification((), off_plane, 3)
    assert not verify_classification(rows, CellClassification(False, None, None), 3)
    assert not verify_classification(rows, CellClassification(False, None, ()), 3)


def test_in_half_plane() -> None:
    assert in_half_plane((F(0), F(1)))
    assert in_half_plane((F(3), F(0)))
    assert not in_half_plane((F(0), F(0)))
    assert not in_half_plane((F(-1), F(0)))
    assert not in_half_plane((F(1), F(-1)))


def test_vertex_functionals_roundtrip(cat_a3) -> None:
    seed = seed_heart(cat_a3)
    rows = vertex_functionals_to_heart(cat_a3, seed, ((1, 2, 3),))
    assert rows == ((F(1), F(2), F(3)),)


def test_slices_equal() -> None:
    a = ((F(1), F(0)), (F(0), F(1)))
    b = ((F(1), F(1)), (F(1), F(-1)))
    assert slices_equal(a, b)
    assert not slices_equal(a, ((F(1), F(0)),))
    assert slices_equal((), ())
    assert not slices_equal((), ((F(1), F(0)),))
    assert slices_equal(((F(0), F(0)),), ())


def test_charge_fold_unfold(q_a3, flip_a3) -> None:
    vq = fold(q_a3, flip_a3)
    charge = ((F(1), F(2)), (F(0), F(3)), (F(1), F(2)))
    folded = fold_charge(vq, charge)
    assert set(folded) == {(F(2), F(4)), (F(0), F(3))}
    back = unfold_charge(vq, folded)
    assert back == charge
    assert fold_charge(vq, back) == folded


def test_unfold_splits_evenly(q_d4, rot_d4) -> None:
    vq = fold(q_d4, rot_d4)
    folded = tuple((F(3), F(6)) for _ in vq.vertices)
    charge = unfold_charge(vq, folded)
    sizes = {}
    for ov in vq.vertices:
        for v in ov.members:
            sizes[v] = len(ov.members)
    for v, z in zip(q_d4.vertices, charge):
        assert z == (F(3, sizes[v]), F(6, sizes[v]))
