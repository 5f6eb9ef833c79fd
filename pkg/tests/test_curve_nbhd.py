import pytest

from qkgr.curve_nbhd import curve_neighborhood, gamma_special, rim_peel
from qkgr.partitions import all_partitions, context, dual, seidel_up


def contexts(max_n):
    return [context(k, n) for n in range(2, max_n + 1) for k in range(1, n)]


def test_curve_neighborhood_examples():
    c49 = context(4, 9)
    assert curve_neighborhood((4, 3, 2, 1), 1, c49) == (2, 1, 0, 0)
    assert curve_neighborhood((4, 3, 2, 1), 0, c49) == (4, 3, 2, 1)
    assert curve_neighborhood((4, 3, 2, 1), 4, c49) == (0, 0, 0, 0)
    # a point spreads to the whole space once d reaches min(k, n-k)
    c24 = context(2, 4)
    assert curve_neighborhood((2, 2), 2, c24) == (0, 0)


def test_rim_peel_examples():
    c49 = context(4, 9)
    assert rim_peel((4, 3, 2, 1), c49) == (2, 1, 0, 0)
    assert rim_peel((0, 0, 0, 0), c49) == (0, 0, 0, 0)
    assert rim_peel((3, 1, 0), context(3, 6)) == (0, 0, 0)


@pytest.mark.parametrize("ctx", contexts(9))
def test_rim_peel_iterates_to_curve_neighborhood(ctx):
    for lam in all_partitions(ctx):
        peeled = lam
        for d in range(ctx.k + 1):
            assert peeled == curve_neighborhood(lam, d, ctx), (lam, d)
            peeled = rim_peel(peeled, ctx)


@pytest.mark.parametrize("ctx", contexts(7))
def test_curve_neighborhood_monotone(ctx):
    parts = all_partitions(ctx)
    for lam in parts:
        for kappa in parts:
            if all(a <= b for a, b in zip(lam, kappa)):
                for d in range(ctx.k + 1):
                    a = curve_neighborhood(lam, d, ctx)
                    b = curve_neighborhood(kappa, d, ctx)
                    assert all(x <= y for x, y in zip(a, b))


def test_gamma_special_values():
    c24 = context(2, 4)
    # eta = (1,0), d = 1: both rows shift up by one and cap at n-k
    assert gamma_special((1, 0), 1, c24) == (2, 1)
    assert gamma_special((2, 2), 1, c24) == (2, 2)
    # saturation once every shifted entry reaches the box width
    c36 = context(3, 6)
    assert gamma_special((3, 3, 2), 1, c36) == (3, 3, 3)
    with pytest.raises(ValueError):
        gamma_special((1, 0), 2, c24)
    with pytest.raises(ValueError):
        gamma_special((1, 0), 0, c24)


@pytest.mark.parametrize("ctx", contexts(9))
def test_two_pointed_neighborhood_identity(ctx):
    # for mu with a full last row, the degree-d neighborhood of the last
    # special class and X_(dual mu) is the (d-1)-neighborhood of the shifted
    # opposite variety
    for mu in all_partitions(ctx):
        if mu[ctx.k - 1] == 0:
            continue
        mv = dual(mu, ctx)
        up = seidel_up(mv, 1, ctx)
        for d in range(1, min(ctx.k + 1, ctx.width)):
            lhs = gamma_special(mv, d, ctx)
            rhs = dual(curve_neighborhood(dual(up, ctx), d - 1, ctx), ctx)
            assert lhs == rhs, (mu, d)
