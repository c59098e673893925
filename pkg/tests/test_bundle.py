"""Torus bundles: H2 structure, norms, realizers, mog/meg, geometry."""

import pytest

from solnorm import (
    INF,
    BundleClass,
    GeometryClass,
    classify_geometry,
    h2_structure,
    meg_bundle,
    mog_bundle,
    norm_multiset_bundle,
    norm_table_bundle,
    order,
    parse_matrix,
    periodic_class,
    z2_norm_bundle,
)
from solnorm.bundle import PERIODIC_REPRESENTATIVES
from solnorm.curve_complex import GL2Matrix, IDENTITY, Slope
from solnorm.errors import DomainError
from solnorm.oracle import RandomMatrixSpec, random_glz
from solnorm.reports import KIND_KLEIN_BOTTLE, KIND_PI, KIND_SUM, KIND_TORUS, KIND_TORUS_FIBER


class TestH2Structure:
    def test_three_cycle(self):
        structure = h2_structure(parse_matrix("1,1;1,0"))
        assert structure.valid_jk == {(0, 0)}
        assert structure.order == 2
        assert structure.generators == ("tau",)

    def test_identity_case(self):
        structure = h2_structure(parse_matrix("1,0;2,1"))
        assert structure.order == 8
        assert structure.generators == ("tau", "F[0/1]", "F[1/0]")
        assert structure.identification == "F[1/1] = F[0/1] + F[1/0]"

    def test_fixes_one_one(self):
        structure = h2_structure(parse_matrix("0,1;1,0"))
        assert structure.valid_jk == {(0, 0), (1, 1)}
        assert structure.order == 4

    def test_all_six_mod2_types(self):
        cases = {
            "1,0;0,1": {(0, 0), (0, 1), (1, 0), (1, 1)},
            "1,1;0,1": {(0, 0), (1, 0)},
            "1,0;1,1": {(0, 0), (0, 1)},
            "0,1;1,0": {(0, 0), (1, 1)},
            "1,1;1,0": {(0, 0)},
            "0,1;1,1": {(0, 0)},
        }
        for text, expected in cases.items():
            assert h2_structure(parse_matrix(text)).valid_jk == expected


class TestNorm:
    def test_tau_is_zero(self):
        for text in ("1,0;2,1", "0,1;1,0", "2,1;1,1"):
            assert z2_norm_bundle(parse_matrix(text), BundleClass(1, 0, 0)) == 0

    def test_shear_six(self):
        assert z2_norm_bundle(parse_matrix("1,0;6,1"), BundleClass(0, 1, 0)) == 3

    def test_identity_one_one(self):
        assert z2_norm_bundle(IDENTITY, BundleClass(0, 1, 1)) == 0

    def test_invalid_class_names_valid_set(self):
        with pytest.raises(DomainError, match=r"valid: \[\(0, 0\), \(1, 1\)\]"):
            z2_norm_bundle(parse_matrix("0,1;1,0"), BundleClass(0, 1, 0))


class TestNormTable:
    def test_three_cycle_table(self):
        table = norm_table_bundle(parse_matrix("1,1;1,0"))
        assert len(table) == 2
        assert [entry.norm for entry in table] == [0, 0]
        kinds = [entry.realizer.kind for entry in table]
        assert kinds == ["empty", KIND_TORUS_FIBER]

    def test_shear_two_table(self):
        table = norm_table_bundle(parse_matrix("1,0;2,1"))
        assert len(table) == 8
        assert sorted(entry.norm for entry in table) == [0, 0, 0, 0, 1, 1, 1, 1]
        by_coords = {tuple(e.coords.values()): e for e in table}
        pi = by_coords[(0, 1, 0)].realizer
        assert pi.kind == KIND_PI and pi.genus == 3
        assert pi.certificate == (Slope(1, 0), Slope(1, 2))
        assert by_coords[(0, 0, 1)].realizer.kind == KIND_TORUS
        summed = by_coords[(1, 1, 0)].realizer
        assert summed.kind == KIND_SUM
        assert [piece.kind for piece in summed.pieces] == [KIND_PI, KIND_TORUS_FIBER]
        assert by_coords[(0, 1, 1)].note == "derived identification"
        assert by_coords[(0, 0, 1)].note is None

    def test_identity_table(self):
        table = norm_table_bundle(IDENTITY)
        assert len(table) == 8
        assert all(entry.norm == 0 for entry in table)

    def test_klein_bottle_realizer(self):
        # rows (1,0) and (0,-1) fix 0/1 with a sign flip
        table = norm_table_bundle(parse_matrix("1,0;0,-1"))
        by_coords = {tuple(e.coords.values()): e for e in table}
        assert by_coords[(0, 0, 1)].realizer.kind == KIND_KLEIN_BOTTLE
        assert by_coords[(0, 1, 0)].realizer.kind == KIND_TORUS

    def test_certificate_elision(self):
        table = norm_table_bundle(parse_matrix("1,0;30,1"), certificate_cap=3)
        by_coords = {tuple(e.coords.values()): e for e in table}
        pi = by_coords[(0, 1, 0)].realizer
        assert pi.genus == 15 + 2
        assert pi.certificate is None
        assert pi.certificate_elided

    def test_realizer_norm_matches(self):
        for text in ("1,0;2,1", "1,0;6,1", "3,2;4,3", "0,-1;1,0", "1,0;0,-1"):
            for entry in norm_table_bundle(parse_matrix(text)):
                assert entry.realizer.norm_contribution() == entry.norm

    def test_certificates_are_edge_paths(self):
        from solnorm import intersection_number

        for text in ("1,0;2,1", "1,0;6,1", "3,2;4,3"):
            for entry in norm_table_bundle(parse_matrix(text)):
                cert = entry.realizer.certificate
                if cert is None and entry.realizer.pieces:
                    cert = entry.realizer.pieces[0].certificate
                if cert:
                    assert len(cert) - 1 == entry.norm
                    for u, v in zip(cert, cert[1:]):
                        assert intersection_number(u, v) == 2


class TestMogMeg:
    def test_mog_examples(self):
        assert mog_bundle(parse_matrix("1,0;2,1")) == 3
        assert mog_bundle(parse_matrix("1,0;4,1")) == INF
        assert mog_bundle(parse_matrix("1,0;0,-1")) == 3

    def test_meg_examples(self):
        assert meg_bundle(parse_matrix("0,1;1,0")) == 2  # orientation-reversing
        assert meg_bundle(parse_matrix("-1,0;5,-1")) == 2  # trace -2
        assert meg_bundle(parse_matrix("2,1;1,1")) == 4  # Anosov

    def test_mog_finite_is_odd(self):
        for i in range(200):
            A = random_glz(RandomMatrixSpec(seed=300 + i, word_length=i % 12))
            value = mog_bundle(A)
            if value != INF:
                assert value % 2 == 1

    def test_norm_symmetry_under_tau(self):
        for i in range(100):
            A = random_glz(RandomMatrixSpec(seed=400 + i, word_length=i % 12))
            for entry_t0 in norm_table_bundle(A, certificate_cap=0):
                t, j, k = entry_t0.coords["t"], entry_t0.coords["j"], entry_t0.coords["k"]
                if t == 0:
                    assert entry_t0.norm == z2_norm_bundle(A, BundleClass(1, j, k))


class TestGeometry:
    def test_examples(self):
        assert classify_geometry(parse_matrix("0,-1;1,0")) is GeometryClass.EUCLIDEAN_PERIODIC
        assert classify_geometry(parse_matrix("1,0;3,1")) is GeometryClass.NIL
        assert classify_geometry(parse_matrix("2,1;1,1")) is GeometryClass.SOL_ANOSOV

    def test_orientation_reversing_infinite_order(self):
        # det -1, trace 2: not Nil, not periodic
        assert classify_geometry(GL2Matrix(2, 1, 1, 0)) is GeometryClass.SOL_ANOSOV

    def test_order_examples(self):
        assert order(IDENTITY) == 1
        assert order(parse_matrix("0,1;-1,-1")) == 3
        assert order(parse_matrix("1,0;1,1")) == INF

    def test_periodic_classes(self):
        assert periodic_class(parse_matrix("-1,0;0,-1")) == "A2"
        assert periodic_class(parse_matrix("1,0;1,-1")) == "A4"
        assert periodic_class(parse_matrix("1,0;0,-1")) == "A3"
        assert periodic_class(parse_matrix("1,0;1,1")) is None

    def test_representatives_have_stated_orders(self):
        expected = {"A1": 1, "A2": 2, "A3": 2, "A4": 2, "A5": 3, "A6": 4, "A7": 6}
        for name, A in PERIODIC_REPRESENTATIVES.items():
            assert order(A) == expected[name]

    def test_periodic_class_conjugation_invariant(self):
        for i, (name, A) in enumerate(PERIODIC_REPRESENTATIVES.items()):
            for j in range(20):
                P = random_glz(RandomMatrixSpec(seed=100 * i + j, word_length=j % 9))
                assert periodic_class(P @ A @ P.inverse()) == name


def test_norm_multiset_matches_table():
    for text in ("1,0;2,1", "1,1;1,0", "0,1;1,0", "3,2;4,3", "1,0;0,-1"):
        A = parse_matrix(text)
        assert norm_multiset_bundle(A) == sorted(e.norm for e in norm_table_bundle(A))
