"""Actions, orbits, conditions (3)/(4)/(6), and adjoint maps."""

import pytest

from scheme_forge import oracles
from scheme_forge.errors import UsageError, IntegrityError
from scheme_forge.gf import FieldSpec
from scheme_forge.space import (VectorSpace, FullMatrixSpace,
                                AlternatingMatrixSpace, SymmetricMatrixSpace,
                                HermitianMatrixSpace, CyclicProductSpace)
from scheme_forge.action import (build_action, orbits, check_condition_4,
                                 check_condition_6, adjoint_map,
                                 verify_adjoint, AdjointMap, Generator,
                                 gl_generators, mat_mul, mat_identity)


def classes_as_sets(partition):
    return {frozenset(c) for c in partition.classes}


def test_central_z8_orbits():
    sp = CyclicProductSpace((8,))
    part = orbits(build_action(sp, "central"))
    # units {3, 5, 7} acting on Z_8: orbits split by gcd with 8
    assert classes_as_sets(part) == {frozenset({0}), frozenset({4}),
                                     frozenset({2, 6}),
                                     frozenset({1, 3, 5, 7})}


def test_cyclotomic_f5_orbits():
    sp = VectorSpace(1, FieldSpec(5))
    part = orbits(build_action(sp, "cyclotomic", d=2))
    # squares mod 5 = {1, 4}, nonsquares = {2, 3}
    assert classes_as_sets(part) == {frozenset({0}), frozenset({1, 4}),
                                     frozenset({2, 3})}


def test_cyclotomic_constraint_rejected():
    sp = VectorSpace(1, FieldSpec(5))
    with pytest.raises(UsageError):
        build_action(sp, "cyclotomic", d=3)  # 6 does not divide 4
    with pytest.raises(UsageError):
        build_action(VectorSpace(1, FieldSpec(2)), "cyclotomic", d=1)


def test_all_generators_are_additive():
    cases = [
        (CyclicProductSpace((8,)), "central", {}),
        (VectorSpace(1, FieldSpec(5)), "cyclotomic", {"d": 2}),
        (FullMatrixSpace(2, 2, FieldSpec(2)), "bilinear", {}),
        (AlternatingMatrixSpace(3, FieldSpec(2)), "alternating", {}),
        (HermitianMatrixSpace(2, FieldSpec(2, 2)), "hermitian", {}),
        (SymmetricMatrixSpace(2, FieldSpec(3)), "symmetric", {}),
        (VectorSpace(2, FieldSpec(3)), "hamming", {}),
        (VectorSpace(3, FieldSpec(2)), "weak_hamming", {"levels": [2, 1]}),
        (VectorSpace(3, FieldSpec(2)), "weak_hamming_dual", {"levels": [2, 1]}),
    ]
    for sp, family, params in cases:
        genset = build_action(sp, family, **params)
        ok, witness = genset.verify_additive()
        assert ok, (family, witness)


def test_gl_generators_are_invertible():
    for q, e in ((2, 1), (3, 1), (2, 2)):
        field = FieldSpec(q, e)
        for k in (2, 3):
            for name, M in gl_generators(k, field):
                assert oracles.matrix_rank(M, field) == k, name


def test_bilinear_rank_classes():
    sp = FullMatrixSpace(2, 2, FieldSpec(2))
    part = orbits(build_action(sp, "bilinear"))
    assert part.sizes == [1, 9, 6]
    for x in range(sp.size):
        r = oracles.matrix_rank(sp.materialize_cached(x), sp.field)
        assert part.class_of[x] == r


def test_alternating_rank_classes():
    sp = AlternatingMatrixSpace(4, FieldSpec(2))
    part = orbits(build_action(sp, "alternating"))
    assert part.sizes == [1, 35, 28]
    for x in range(sp.size):
        r = oracles.matrix_rank(sp.materialize_cached(x), sp.field)
        assert r % 2 == 0
        assert part.class_of[x] == r // 2


def test_hermitian_rank_classes():
    sp = HermitianMatrixSpace(2, FieldSpec(2, 2))
    part = orbits(build_action(sp, "hermitian"))
    for x in range(sp.size):
        r = oracles.matrix_rank(sp.materialize_cached(x), sp.field)
        assert part.class_of[x] == r


def test_weak_hamming_weight_classes():
    for levels in ((1, 1), (2, 1), (1, 2), (1, 1, 1)):
        n = sum(levels)
        sp = VectorSpace(n, FieldSpec(2))
        for family in ("weak_hamming", "weak_hamming_dual"):
            genset = build_action(sp, family, levels=list(levels))
            part = orbits(genset)
            for x in range(sp.size):
                w = genset.poset.weight(sp.materialize_cached(x))
                assert part.class_of[x] == w
            assert part.sizes == genset.poset.sphere_sizes(2)


def test_condition_4_and_6_symmetric_f3():
    """q = 3 mod 4: -1 is a nonsquare, classes are not negation-closed."""
    sp = SymmetricMatrixSpace(2, FieldSpec(3))
    part = orbits(build_action(sp, "symmetric"))
    ok, witness = check_condition_4(part, sp)
    assert not ok
    one, two = sp.field.one(), sp.field.element(2)
    zero = sp.field.zero()
    d10 = sp.index_of_matrix([[one, zero], [zero, zero]])
    d20 = sp.index_of_matrix([[two, zero], [zero, zero]])
    assert sp.neg(d10) == d20
    assert part.class_of[d10] != part.class_of[d20]
    pairing = check_condition_6(part, sp)
    assert pairing is not None
    assert pairing[part.class_of[d10]] == part.class_of[d20]
    assert all(pairing[pairing[i]] == i for i in range(part.d + 1))


def test_condition_4_symmetric_f5():
    """q = 1 mod 4: -1 is a square, classes negation-closed."""
    sp = SymmetricMatrixSpace(2, FieldSpec(5))
    part = orbits(build_action(sp, "symmetric"))
    ok, _ = check_condition_4(part, sp)
    assert ok


def test_adjoint_verifies_for_all_families():
    cases = [
        (CyclicProductSpace((8,)), "central", {}),
        (VectorSpace(1, FieldSpec(5)), "cyclotomic", {"d": 2}),
        (FullMatrixSpace(2, 2, FieldSpec(2)), "bilinear", {}),
        (AlternatingMatrixSpace(4, FieldSpec(2)), "alternating", {}),
        (HermitianMatrixSpace(2, FieldSpec(2, 2)), "hermitian", {}),
        (SymmetricMatrixSpace(2, FieldSpec(5)), "symmetric", {}),
        (VectorSpace(4, FieldSpec(3)), "hamming", {}),
        (VectorSpace(3, FieldSpec(2)), "weak_hamming", {"levels": [2, 1]}),
    ]
    for sp, family, params in cases:
        genset = build_action(sp, family, **params)
        adj = adjoint_map(genset)
        ok, witness = verify_adjoint(adj)
        assert ok, (family, witness)


def test_weak_hamming_adjoint_lands_in_dual():
    sp = VectorSpace(3, FieldSpec(2))
    genset = build_action(sp, "weak_hamming", levels=[2, 1])
    adj = adjoint_map(genset)
    assert adj.codomain_family == "weak_hamming_dual"


def test_corrupted_adjoint_fails_with_witness():
    sp = VectorSpace(2, FieldSpec(2))
    genset = build_action(sp, "hamming")
    adj = adjoint_map(genset)
    g = genset.generators[0]
    # swap the adjoint's action on two nonzero points
    perm = list(adj.images[0].perm)
    perm[1], perm[2] = perm[2], perm[1]
    bad = AdjointMap(genset, [Generator("bad", perm, {})], "hamming")
    ok, witness = verify_adjoint(bad)
    assert not ok
    assert witness[0] == g.name and len(witness) == 3


def test_custom_family():
    sp = CyclicProductSpace((5,))
    neg = [sp.neg(x) for x in range(5)]
    genset = build_action(sp, "custom", generators=[neg])
    part = orbits(genset)
    assert classes_as_sets(part) == {frozenset({0}), frozenset({1, 4}),
                                     frozenset({2, 3})}
    with pytest.raises(UsageError):
        adjoint_map(genset)
    with pytest.raises(UsageError):
        build_action(sp, "custom", generators=[[0, 1, 1, 3, 4]])
    shift = [(x + 1) % 5 for x in range(5)]  # not additive, moves 0
    with pytest.raises((UsageError, IntegrityError)):
        build_action(sp, "custom", generators=[shift])


def test_non_additive_custom_rejected():
    sp = CyclicProductSpace((5,))
    # the permutation fixing 0 that swaps 1,2 and 3,4 is not additive
    perm = [0, 2, 1, 4, 3]
    with pytest.raises(UsageError):
        build_action(sp, "custom", generators=[perm])
