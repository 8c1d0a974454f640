from itertools import permutations
from math import comb

import pytest

from eqschubert import (
    ContextError,
    GrassContext,
    Partition,
    add_box_shapes,
    enumerate_classes,
    q_degree,
    quantum_chevalley_shape,
    remove_rim_hooks,
    to_grassmannian_permutation,
)
from eqschubert.equivariant import c1_curve_integral
from eqschubert.grass import partition_from_permutation, quantum_chevalley_parent

from conftest import part

CONTEXTS = [(1, 2), (2, 4), (2, 5), (3, 6)]


def test_context_validation():
    with pytest.raises(ContextError):
        GrassContext(0, 3)
    with pytest.raises(ContextError):
        GrassContext(3, 3)
    with pytest.raises(ContextError):
        GrassContext(4, 2)


def test_partition_validation(gr24):
    with pytest.raises(ValueError):
        Partition((3,), gr24)
    with pytest.raises(ValueError):
        Partition((1, 1, 1), gr24)
    with pytest.raises(ValueError):
        Partition((1, 2), gr24)
    assert Partition((2, 1, 0), gr24).parts == (2, 1)


def test_enumerate_counts_and_order(gr24, gr12, gr36):
    assert [p.parts for p in enumerate_classes(gr24)] == [
        (),
        (1,),
        (2,),
        (1, 1),
        (2, 1),
        (2, 2),
    ]
    assert len(enumerate_classes(gr12)) == 2
    assert len(enumerate_classes(gr36)) == 20
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        classes = enumerate_classes(ctx)
        assert len(classes) == comb(n, k) == ctx.num_classes
        assert len(set(classes)) == len(classes)


def test_dual_examples(gr24, gr36):
    assert part(gr24, 1).dual().parts == (2, 1)
    assert part(gr24).dual().parts == (2, 2)
    assert part(gr36, 3, 1).dual().parts == (3, 2)


def test_dual_involution_and_size():
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        for p in enumerate_classes(ctx):
            assert p.dual().dual() == p
            assert p.size + p.dual().size == ctx.dim


def test_permutation_examples(gr24, gr12):
    assert to_grassmannian_permutation(part(gr24)) == (1, 2, 3, 4)
    assert to_grassmannian_permutation(part(gr24, 2, 2)) == (3, 4, 1, 2)
    assert to_grassmannian_permutation(part(gr12, 1)) == (2, 1)


def test_permutation_against_descent_enumeration():
    # Independent oracle: enumerate every permutation with at most one
    # descent, at position k, and match it to a partition via its code.
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        one_descent = []
        for w in permutations(range(1, n + 1)):
            descents = [i for i in range(1, n) if w[i - 1] > w[i]]
            if descents in ([], [k]):
                one_descent.append(w)
        assert len(one_descent) == ctx.num_classes
        by_code = {}
        for w in one_descent:
            code = tuple(w[k - i] - (k + 1 - i) for i in range(1, k + 1))
            by_code[code] = w
        for p in enumerate_classes(ctx):
            w = to_grassmannian_permutation(p)
            assert w == by_code[p.padded()]
            assert partition_from_permutation(ctx, w) == p


def test_add_box_shapes(gr24, gr36):
    assert {m.parts for m in add_box_shapes(part(gr24, 1))} == {(2,), (1, 1)}
    assert add_box_shapes(part(gr24, 2, 2)) == []
    assert {m.parts for m in add_box_shapes(part(gr36, 2, 1))} == {
        (3, 1),
        (2, 2),
        (2, 1, 1),
    }


def test_add_box_is_one_bigger():
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        classes = set(enumerate_classes(ctx))
        for p in classes:
            for m in add_box_shapes(p):
                assert m in classes
                assert m.size == p.size + 1 and m.contains(p)


def test_quantum_chevalley_shape(gr24):
    assert quantum_chevalley_shape(part(gr24, 2, 2)).parts == (1,)
    assert quantum_chevalley_shape(part(gr24, 2, 1)).parts == ()
    assert quantum_chevalley_shape(part(gr24, 1, 1)) is None
    assert quantum_chevalley_shape(part(gr24, 2)) is None


def test_quantum_chevalley_shape_degree():
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        for p in enumerate_classes(ctx):
            hat = quantum_chevalley_shape(p)
            if hat is not None:
                assert hat.size == p.size - (n - 1) >= 0


def test_quantum_chevalley_parent_roundtrip():
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        for p in enumerate_classes(ctx):
            hat = quantum_chevalley_shape(p)
            if hat is not None:
                assert quantum_chevalley_parent(hat) == p
            parent = quantum_chevalley_parent(p)
            if parent is not None:
                assert quantum_chevalley_shape(parent) == p


def test_remove_rim_hooks(gr24, gr12):
    # Signs follow (-1)**(k - rows spanned), the convention under which the
    # reduced quantum constants come out as nonnegative curve counts.
    assert remove_rim_hooks((2, 1), gr24) == []
    assert remove_rim_hooks((4, 2), gr24) == [((1, 1), 1)]
    assert remove_rim_hooks((3, 3), gr24) == [((2,), 1)]
    assert remove_rim_hooks((4,), gr24) == [((), -1)]
    assert remove_rim_hooks((3, 1), gr24) == [((), 1)]
    assert sorted(remove_rim_hooks((4, 4), gr24)) == [((3, 1), 1), ((4,), -1)]
    assert remove_rim_hooks((2,), gr12) == [((), 1)]


def test_remove_rim_hooks_drops_n_cells(gr36):
    for shape in [(6, 5, 4), (4, 4, 4), (6, 6, 6), (5, 2)]:
        for new, sign in remove_rim_hooks(shape, gr36):
            assert sum(shape) - sum(new) == 6
            assert sign in (-1, 1)


def test_q_degree_formula_and_oracle():
    for k, n in CONTEXTS:
        ctx = GrassContext(k, n)
        assert q_degree(ctx) == n
        assert c1_curve_integral(ctx) == n
