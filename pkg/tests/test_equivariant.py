import pytest

from eqschubert import (
    FixedPoint,
    NonPolynomialError,
    Polynomial,
    elr,
    enumerate_classes,
    fixed_points,
    integrate,
    is_x_nonnegative,
    lr_tableau,
    pairing,
    partition_of,
    point_of,
    restrict_schubert,
    restriction_table,
    tangent_weights,
)
from eqschubert.equivariant import b_difference, gkm_violations

from conftest import part


def x(ctx, i):
    return Polynomial.variable(ctx.r, i)


def test_fixed_point_dictionary(gr24):
    assert point_of(part(gr24)).subset == (1, 2)
    assert point_of(part(gr24, 2, 2)).subset == (3, 4)
    assert point_of(part(gr24, 2, 1)).subset == (2, 4)
    for p in enumerate_classes(gr24):
        assert partition_of(point_of(p)) == p
    with pytest.raises(ValueError):
        FixedPoint((1, 1), gr24)


def test_tangent_weights_p1(gr12):
    w1 = tangent_weights(FixedPoint((1,), gr12))
    w2 = tangent_weights(FixedPoint((2,), gr12))
    assert w1 == [-x(gr12, 1)]
    assert w2 == [x(gr12, 1)]


def test_tangent_weight_count(gr24, gr36):
    for ctx in (gr24, gr36):
        for pt in fixed_points(ctx):
            weights = tangent_weights(pt)
            assert len(weights) == ctx.dim
            assert all(w.is_homogeneous_of_degree(1) for w in weights)


def test_unit_restricts_to_one(gr12, gr24, gr25):
    for ctx in (gr12, gr24, gr25):
        unit = part(ctx)
        for pt in fixed_points(ctx):
            assert restrict_schubert(unit, pt) == Polynomial.const(ctx.r, 1)


def test_restriction_support(gr24):
    for p in enumerate_classes(gr24):
        for pt in fixed_points(gr24):
            value = restrict_schubert(p, pt)
            if not partition_of(pt).contains(p):
                assert value.is_zero
            else:
                assert not value.is_zero
                assert value.is_homogeneous_of_degree(p.size)


def test_restriction_at_own_point_is_normal_weight_product(gr12, gr24):
    # The class of a fixed point restricts there to the product of the
    # normal directions; for the top point those are all tangent weights.
    one = part(gr12, 1)
    assert restrict_schubert(one, point_of(one)) == x(gr12, 1)
    for ctx in (gr12, gr24):
        top = part(ctx).dual()
        pt = point_of(top)
        product = Polynomial.const(ctx.r, 1)
        for w in tangent_weights(pt):
            product = product * w
        assert restrict_schubert(top, pt) == product


def test_known_restriction_values(gr24):
    # s(2,1) at its own staircase point {2,4}: x1*x3*(x1+x2+x3).
    value = restrict_schubert(part(gr24, 2, 1), point_of(part(gr24, 2, 1)))
    assert value == x(gr24, 1) * x(gr24, 3) * (x(gr24, 1) + x(gr24, 2) + x(gr24, 3))
    # the divisor class at the top point: x1 + 2*x2 + x3
    value = restrict_schubert(part(gr24, 1), point_of(part(gr24, 2, 2)))
    assert value == x(gr24, 1) + 2 * x(gr24, 2) + x(gr24, 3)


def test_opposite_family_support(gr24):
    table = restriction_table(gr24, "opposite")
    for p in enumerate_classes(gr24):
        for pt in fixed_points(gr24):
            value = table.restriction(p, pt)
            if partition_of(pt).dual().contains(p):
                assert not value.is_zero
            else:
                assert value.is_zero


def test_gkm_consistency_small(gr12, gr24):
    for ctx in (gr12, gr24):
        assert gkm_violations(ctx, "schubert") == []
        assert gkm_violations(ctx, "opposite") == []


def test_integrate_point_class(gr24):
    table = restriction_table(gr24)
    top = part(gr24, 2, 2)
    values = {pt: table.restriction(top, pt) for pt in fixed_points(gr24)}
    assert integrate(gr24, values) == Polynomial.const(gr24.r, 1)


def test_integrate_unit_vanishes(gr24, gr12):
    for ctx in (gr24, gr12):
        one = Polynomial.const(ctx.r, 1)
        assert integrate(ctx, dict.fromkeys(fixed_points(ctx), one)).is_zero


def test_integrate_rejects_inconsistent_table(gr12):
    values = {
        FixedPoint((1,), gr12): Polynomial.const(gr12.r, 1),
        FixedPoint((2,), gr12): Polynomial.const(gr12.r, 2),
    }
    with pytest.raises(NonPolynomialError):
        integrate(gr12, values)


def test_integrate_sigma_times_opposite(gr12):
    sigma = restriction_table(gr12)
    tilde = restriction_table(gr12, "opposite")
    one = part(gr12, 1)
    values = {
        pt: sigma.restriction(one, pt) * tilde.restriction(one, pt)
        for pt in fixed_points(gr12)
    }
    assert integrate(gr12, values).is_zero


def test_pairing_examples(gr24, gr12):
    one = Polynomial.const(gr24.r, 1)
    assert pairing(part(gr24, 1), part(gr24, 2, 1)) == one
    assert pairing(part(gr24, 1), part(gr24, 1, 1)).is_zero
    assert pairing(part(gr12), part(gr12, 1)) == Polynomial.const(gr12.r, 1)


def test_pairing_delta(gr24):
    one = Polynomial.const(gr24.r, 1)
    for u in enumerate_classes(gr24):
        for v in enumerate_classes(gr24):
            expected = one if u == v.dual() else Polynomial.zero(gr24.r)
            assert pairing(u, v) == expected


def test_elr_examples(gr24):
    assert elr(part(gr24, 1), part(gr24, 1), part(gr24, 2)) == Polynomial.const(
        gr24.r, 1
    )
    # the diagonal divisor coefficient, pinned by the expansion oracle
    assert elr(part(gr24, 1), part(gr24, 1), part(gr24, 1)) == x(gr24, 2)


def test_elr_unit(gr24):
    for v in enumerate_classes(gr24):
        for w in enumerate_classes(gr24):
            value = elr(part(gr24), v, w)
            if v == w:
                assert value == Polynomial.const(gr24.r, 1)
            else:
                assert value.is_zero


def test_elr_grading_positivity_and_classical_limit(gr24):
    for u in enumerate_classes(gr24):
        for v in enumerate_classes(gr24):
            for w in enumerate_classes(gr24):
                value = elr(u, v, w)
                assert value.is_homogeneous_of_degree(u.size + v.size - w.size)
                assert is_x_nonnegative(value)
                assert value.evaluate_at_zero() == lr_tableau(u, v, w)


def test_edge_weights_are_b_differences(gr24):
    weights = tangent_weights(point_of(part(gr24, 2, 1)))
    assert b_difference(gr24, 2, 1) in weights
    assert b_difference(gr24, 3, 4) not in weights
