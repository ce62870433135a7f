import pytest
from gmpy2 import mpq

from spinalg.casimir import (
    casimir,
    commutant_generator,
    dirac_op,
    osp_realization,
    scasimir,
    spin_module,
    total_J,
    verify_coproduct_factorization,
)
from spinalg.graded import GradedOperator
from spinalg.scalars import GaussianRational

TWO = GaussianRational(2)


@pytest.fixture(scope="module")
def mod3():
    return spin_module(3, 5)


@pytest.fixture(scope="module")
def mod2():
    return spin_module(2, 4)


SUBSETS = ([1, 2], [3, 4], [1, 2, 3, 4], [1, 2, 3, 4, 5, 6])


@pytest.mark.parametrize("subset", SUBSETS, ids=str)
def test_osp_relations(mod3, subset):
    r = osp_realization(subset, mod3)
    degrees = range(4)
    ok, w = (r.j_zero.bracket(r.j_plus) - r.j_plus).is_zero(degrees)
    assert ok, w
    ok, w = (r.j_zero.bracket(r.j_minus) + r.j_minus).is_zero(degrees)
    assert ok, w
    ok, w = (r.j_plus.bracket(r.j_minus, anti=True) - r.j_zero.scale(TWO)).is_zero(degrees)
    assert ok, w


@pytest.mark.parametrize("subset", SUBSETS, ids=str)
def test_scasimir_properties(mod3, subset):
    r = osp_realization(subset, mod3)
    s = scasimir(r)
    degrees = range(4)
    ok, w = s.bracket(r.j_zero).is_zero(degrees)
    assert ok, w
    ok, w = s.bracket(r.j_minus, anti=True).is_zero(degrees)
    assert ok, w
    ok, w = s.bracket(r.j_plus, anti=True).is_zero(range(3))
    assert ok, w


@pytest.mark.parametrize("subset", SUBSETS, ids=str)
def test_involution_squares(mod3, subset):
    r = osp_realization(subset, mod3)
    ok, w = (r.s_op @ r.s_op - GradedOperator.identity(mod3)).is_zero(range(5))
    assert ok, w


@pytest.mark.parametrize("subset", ([1, 2], [3, 4], [1, 2, 5, 6], [3, 4, 5, 6]), ids=str)
def test_casimir_closed_form_matches_bracket(mod3, subset):
    # the closed form is an independent expression: angular terms plus a
    # constant, times the involution
    a = casimir(subset, mod3, method="bracket")
    b = casimir(subset, mod3, method="closed_form")
    ok, w = (a - b).is_zero(range(4))
    assert ok, w


def test_casimir_full_set_closed_form(mod3):
    a = casimir(range(1, 7), mod3, method="bracket")
    b = casimir(range(1, 7), mod3, method="closed_form")
    ok, w = (a - b).is_zero(range(4))
    assert ok, w


def test_pair_casimir_is_total_J(mod3):
    # Gamma_{2j-1,2j} coincides with J_{2j-1,2j} in this realization
    for j in (1, 2, 3):
        g = casimir([2 * j - 1, 2 * j], mod3, method="closed_form")
        jj = total_J(2 * j - 1, 2 * j, mod3)
        ok, w = (g - jj).is_zero(range(5))
        assert ok, (j, w)


def test_casimir_commutes_with_osp(mod3):
    total = osp_realization(range(1, 7), mod3)
    g = casimir([1, 2, 3, 4], mod3, method="closed_form")
    degrees = range(4)
    ok, w = g.bracket(total.j_minus).is_zero(degrees)
    assert ok, w
    ok, w = g.bracket(total.j_plus).is_zero(degrees)
    assert ok, w
    ok, w = g.bracket(total.s_op).is_zero(degrees)
    assert ok, w


def test_commutant_generator_commutes(mod3):
    m12 = commutant_generator(1, 2, mod3)
    for k in (1, 2, 3):
        jk = total_J(2 * k - 1, 2 * k, mod3)
        ok, w = m12.bracket(jk).is_zero(range(4))
        assert ok, (k, w)


def test_dirac_squared_is_laplacian(mod2):
    # D^2 = -sum d_mu^2
    d = dirac_op(mod2)
    lap = None
    for mu in range(1, 5):
        t = mod2.deriv_op(mu) @ mod2.deriv_op(mu)
        lap = t if lap is None else lap + t
    ok, w = (d @ d + lap).is_zero(range(5))
    assert ok, w


def test_coproduct_factorization():
    reports = verify_coproduct_factorization(top=3)
    assert [r.name for r in reports] == [
        "coproduct-gamma-alignment",
        "coproduct-involution-factorization",
        "coproduct-dirac-factorization",
    ]
    for r in reports:
        assert r.passed, r.text_line()


def test_scasimir_constant_on_lowest_block(mod3):
    # on degree 0 the sCasimir of a pair acts as the constant 1/2
    r = osp_realization([1, 2], mod3)
    s = scasimir(r)
    blk = s.block(0, 0)
    half = GaussianRational(mpq(1, 2))
    for i in range(8):
        assert blk[i, i] == half
