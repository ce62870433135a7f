import pytest
from gmpy2 import mpq

from spinalg.bases import LaurentBox
from spinalg.reduced import (
    RationalCirclePoint,
    ReducedModel,
    build_reduced,
    fubini_checks,
    rotation_identity_check,
    verify_reduced_bi,
    verify_reduced_casimirs,
    verify_reduced_osp,
)
from spinalg.clifford import build_gammas


@pytest.fixture(scope="module")
def model():
    return build_reduced(2, [mpq(1, 2), mpq(3, 2)], bound=3)


def test_circle_point_validation():
    RationalCirclePoint("3/5", "4/5")
    RationalCirclePoint(1, 0)
    with pytest.raises(ValueError):
        RationalCirclePoint("1/2", "1/2")


def test_reduced_osp(model):
    for r in verify_reduced_osp(model):
        assert r.passed, r.text_line()


def test_pair_casimir_is_momentum(model):
    for r in verify_reduced_casimirs(model):
        assert r.passed, r.text_line()


def test_reduced_bi_n3():
    m = build_reduced(3, [mpq(1, 2), mpq(3, 2), mpq(5, 2)], bound=3)
    reports = verify_reduced_bi(m)
    assert len(reports) == 3
    for r in reports:
        assert r.passed, r.text_line()


def test_pair_casimir_respects_k_choice():
    # an integer and a negative momentum, to make sure nothing assumes
    # half-integers
    m = build_reduced(1, [mpq(-2)], bound=3)
    for r in verify_reduced_casimirs(m):
        assert r.passed, r.text_line()


@pytest.mark.parametrize(
    "c,s", [("1", "0"), ("0", "1"), ("3/5", "4/5"), ("-5/13", "12/13")]
)
def test_rotation_identity_exact_points(c, s):
    g = build_gammas(2)
    rep = rotation_identity_check(g, [RationalCirclePoint(c, s)] * 2)
    assert rep.passed, rep.text_line()


def test_rotation_identity_catches_bad_rotation():
    # a point off the unit circle does not produce a rotation at all, so
    # the identity must fail with a witness
    g = build_gammas(1)

    class Fake:
        c = mpq(1)
        s = mpq(1)

        def __str__(self):
            return "fake"

    rep = rotation_identity_check(g, [Fake()])
    assert not rep.passed
    assert rep.witness is not None


def test_fubini_identities():
    for k in ("0", "1/2", "3/2"):
        for r in fubini_checks(mpq(k), bound=3):
            assert r.passed, r.text_line()


def test_safe_cols_margin(model):
    all_cols = set(range(model.dim))
    safe = set(model.safe_cols(1))
    assert safe < all_cols
    assert set(model.safe_cols(2)) < safe


def test_k_length_mismatch():
    with pytest.raises(ValueError):
        ReducedModel(2, [mpq(1, 2)], LaurentBox(2, 3))
