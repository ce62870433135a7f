import pytest

from spinalg.casimir import scalar_module
from spinalg.graded import GradedOperator, WindowTooSmall
from spinalg.scalars import GaussianRational


@pytest.fixture(scope="module")
def mod():
    return scalar_module(1, 5)


def x(mod):
    return mod.mult_op(1)


def d(mod):
    return mod.deriv_op(1)


def test_heisenberg(mod):
    # [d, x] = 1 on every degree where both compositions are known
    res = d(mod).bracket(x(mod)) - GradedOperator.identity(mod)
    ok, witness = res.is_zero(range(5))
    assert ok, witness


def test_composition_associative(mod):
    a, b = x(mod), d(mod)
    lhs = (a @ b) @ a
    rhs = a @ (b @ a)
    ok, witness = (lhs - rhs).is_zero(range(4))
    assert ok, witness


def test_truncated_block_is_absent_not_zero(mod):
    top = mod.top
    xx = x(mod) @ x(mod)  # shift +2
    assert xx.block(2, top - 1) is None  # lands beyond the window
    assert xx.block(2, top - 2) is not None


def test_require_degrees_raises_when_truncated(mod):
    xx = x(mod) @ x(mod)
    with pytest.raises(WindowTooSmall):
        xx.require_degrees(range(mod.top + 1))
    xx.require_degrees(range(mod.top - 1))


def test_negative_target_degree_is_trivial(mod):
    # d lowers degree; at degree 0 the target space is 0-dimensional, so
    # the block is known (zero), not truncated
    dd = d(mod) @ d(mod)
    dd.require_degrees(range(mod.top + 1))
    ok, witness = (d(mod) @ x(mod) - x(mod) @ d(mod) - GradedOperator.identity(mod)).is_zero([0])
    assert ok, witness


def test_scalar_and_scale(mod):
    two = GradedOperator.scalar(mod, GaussianRational(2))
    ok, _ = (GradedOperator.identity(mod).scale(GaussianRational(2)) - two).is_zero()
    assert ok


def test_bracket_anti(mod):
    a, b = x(mod), d(mod)
    anti = a.bracket(b, anti=True)
    ok, witness = (anti - (a @ b + b @ a)).is_zero(range(4))
    assert ok, witness


def test_unknown_plus_known_stays_unknown(mod):
    xx = x(mod) @ x(mod)
    s = xx + xx
    assert s.block(2, mod.top - 1) is None


def test_zero_operator(mod):
    z = GradedOperator.zero(mod)
    ok, witness = z.is_zero(range(mod.top + 1))
    assert ok and witness is None
