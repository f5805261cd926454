"""Duality machinery: constancy, eigenmatrices, idempotents, Krein."""

import pytest

from scheme_forge.cyclo import CycloInt
from scheme_forge.gf import FieldSpec
from scheme_forge.space import VectorSpace, FullMatrixSpace
from scheme_forge.action import build_action, orbits, OrbitPartition
from scheme_forge.scheme import TranslationScheme
from scheme_forge.duality import (pairing_table, character_profile,
                                  constancy_test, verify_eigen_identities,
                                  idempotent_matrices, verify_idempotents,
                                  sigma_permutation, krein_parameters,
                                  krein_equals_intersection, duality_report,
                                  _cyclo_matmul)


def ints(M):
    return [[c.as_rational_integer() for c in row] for row in M]


@pytest.fixture(scope="module")
def hamming22():
    sp = VectorSpace(2, FieldSpec(2))
    genset = build_action(sp, "hamming")
    part = orbits(genset)
    table = pairing_table(sp)
    profile = character_profile(sp, part.classes, table)
    return sp, genset, part, table, profile


def test_constancy_and_F_hamming22(hamming22):
    sp, genset, part, table, profile = hamming22
    ok, F, witness = constancy_test(part, profile)
    assert ok and witness is None
    assert ints(F) == [[1, 2, 1], [1, 0, -1], [1, -2, 1]]


def test_constancy_witness_on_split_class(hamming22):
    """Splitting the weight-1 class of H(2,2) breaks constancy."""
    sp, genset, part, table, profile = hamming22
    bad = OrbitPartition([0, 1, 2, 3], [[0], [1], [2], [3]])
    bad_profile = character_profile(sp, bad.classes, table)
    ok, F, witness = constancy_test(part, bad_profile)
    assert not ok
    i, j, y0, y1 = witness
    assert part.class_of[y0] == i == part.class_of[y1]


def test_weak_hamming_11_F_matrix():
    """Frozen: F = [[1,1,2],[1,1,-2],[1,-1,0]] against the dual poset."""
    sp = VectorSpace(2, FieldSpec(2))
    part = orbits(build_action(sp, "weak_hamming", levels=[1, 1]))
    dual = orbits(build_action(sp, "weak_hamming_dual", levels=[1, 1]))
    table = pairing_table(sp)
    profile = character_profile(sp, dual.classes, table)
    ok, F, _ = constancy_test(part, profile)
    assert ok
    assert ints(F) == [[1, 1, 2], [1, 1, -2], [1, -1, 0]]


def test_eigen_identities(hamming22):
    sp, genset, part, table, profile = hamming22
    _, F, _ = constancy_test(part, profile)
    rep = verify_eigen_identities(F, F, part.sizes, part.sizes, sp.size)
    assert rep["all_pass"]
    # corrupt one entry: identities must fail
    bad = [row[:] for row in F]
    bad[1][1] = CycloInt.integer(2, 5)
    rep = verify_eigen_identities(bad, F, part.sizes, part.sizes, sp.size)
    assert not rep["all_pass"]


def test_idempotents_hamming22(hamming22):
    sp, genset, part, table, profile = hamming22
    sch = TranslationScheme(sp, part)
    rep = verify_idempotents(sp, sch, profile)
    assert rep["all_pass"]
    assert rep["dense_products"]  # |X| = 4 is under the dense bound
    mats = idempotent_matrices(sp, profile)
    n = sp.size
    # N_0 = J and sum N_j = |X| I, directly on the dense matrices
    assert all(mats[0][a][b] == CycloInt.integer(2, 1)
               for a in range(n) for b in range(n))
    for a in range(n):
        for b in range(n):
            acc = CycloInt.zero(2)
            for j in range(part.d + 1):
                acc = acc + mats[j][a][b]
            assert acc == CycloInt.integer(2, n if a == b else 0)


def test_idempotents_fail_on_split_partition(hamming22):
    """Bose-Mesner membership fails when the dual partition is not dual."""
    sp, genset, part, table, profile = hamming22
    sch = TranslationScheme(sp, part)
    bad = OrbitPartition([0, 1, 2, 3], [[0], [1], [2], [3]])
    bad_profile = character_profile(sp, bad.classes, table)
    rep = verify_idempotents(sp, sch, bad_profile)
    assert not rep["bose_mesner_membership"]
    assert not rep["all_pass"]


def test_sigma_identity(hamming22):
    sp, genset, part, table, profile = hamming22
    sigma, ok, witness = sigma_permutation(sp, part, profile, table)
    assert ok and sigma == [0, 1, 2]


def test_krein_equals_intersection_hamming22(hamming22):
    sp, genset, part, table, profile = hamming22
    _, F, _ = constancy_test(part, profile)
    krein, flags = krein_parameters(F, F, sp.size)
    assert flags["real"] and flags["nonnegative"]
    sch = TranslationScheme(sp, part)
    ok, witness = krein_equals_intersection(
        krein, sch.intersection_numbers())
    assert ok, witness
    # q_ij^0 = delta_ij m_i
    for i in range(part.d + 1):
        for j in range(part.d + 1):
            want = part.sizes[i] if i == j else 0
            assert krein[i][j][0] == CycloInt.integer(2, want)


def test_cyclotomic_f5_Q_entries():
    """Frozen: Q[1][1] = z5 + z5^4, Q[1][2] = z5^2 + z5^3."""
    sp = VectorSpace(1, FieldSpec(5))
    cert = duality_report(build_action(sp, "cyclotomic", d=2))
    assert cert.passed
    z = lambda k: CycloInt.root_of_unity(5, k)
    assert cert.Q[1][1] == z(1) + z(4)
    assert cert.Q[1][2] == z(2) + z(3)
    assert cert.P == cert.Q


def test_duality_report_self_bilinear():
    sp = FullMatrixSpace(2, 2, FieldSpec(2))
    cert = duality_report(build_action(sp, "bilinear"))
    assert cert.passed and cert.mode == "self"
    assert cert.checks["P_equals_Q"]
    assert cert.checks["valencies_equal_multiplicities"]
    assert cert.sigma == [0, 1, 2]
    j = cert.to_json()
    assert j["pass"] and j["mode"] == "self"
    assert j["valencies"] == [1, 9, 6]


def test_duality_report_cross_weak_hamming():
    sp = VectorSpace(3, FieldSpec(2))
    gG = build_action(sp, "weak_hamming", levels=[2, 1])
    gD = build_action(sp, "weak_hamming_dual", levels=[2, 1])
    cert = duality_report(gG, gD)
    assert cert.passed and cert.mode == "cross"
    PQ = _cyclo_matmul(cert.P, cert.Q)
    n = sp.size
    for i in range(len(cert.Q)):
        for j in range(len(cert.Q)):
            assert PQ[i][j] == CycloInt.integer(2, n if i == j else 0)


def test_duality_report_failure_on_non_dual_pair():
    """weak_hamming(2,1) against itself is not a dual pair."""
    sp = VectorSpace(3, FieldSpec(2))
    gG = build_action(sp, "weak_hamming", levels=[2, 1])
    gG2 = build_action(sp, "weak_hamming", levels=[2, 1])
    cert = duality_report(gG, gG2)
    assert not cert.passed
    assert not cert.checks["constancy_G"]
    assert cert.witnesses  # carries the offending (i, j, y, y') quadruple


def test_condition_4_failure_reported_not_thrown():
    from scheme_forge.space import SymmetricMatrixSpace
    sp = SymmetricMatrixSpace(2, FieldSpec(3))
    cert = duality_report(build_action(sp, "symmetric"))
    assert not cert.passed
    assert cert.checks["condition_4_G"] is False
    assert cert.Q is None  # no certificate beyond the precondition report
